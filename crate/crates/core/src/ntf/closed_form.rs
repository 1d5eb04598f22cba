use std::fmt;
use std::str::FromStr;

use super::trig::{cos_m_eval, sin_m_eval};
use super::Order;
use crate::error::{Error, Result};

/// Below this |x| the closed forms hand over to the power series.
pub const CLOSED_FORM_SWITCH: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFn {
    Cos,
    Sin,
}

impl fmt::Display for ClosedFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosedFn::Cos => "cos",
            ClosedFn::Sin => "sin",
        })
    }
}

impl FromStr for ClosedFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cos" => Ok(ClosedFn::Cos),
            "sin" => Ok(ClosedFn::Sin),
            _ => Err(Error::UnsupportedIndex(format!("no closed form family '{s}'"))),
        }
    }
}

/// `x − sin x` without the cancellation of the direct difference near 0.
pub fn x_minus_sin(x: f64) -> f64 {
    if x.abs() >= 1.0 {
        return x - x.sin();
    }
    let x2 = x * x;
    let mut term = x * x2 / 6.0;
    let mut sum = 0.0f64;
    let mut n = 1.0;
    while term.abs() > 1e-18 * sum.abs() || sum == 0.0 {
        sum += term;
        term *= -x2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
        n += 1.0;
        if term == 0.0 {
            break;
        }
    }
    sum
}

/// `1 − cos x`, evaluated as `2 sin²(x/2)`.
pub fn one_minus_cos(x: f64) -> f64 {
    let s = (0.5 * x).sin();
    2.0 * s * s
}

/// Elementary closed forms of the low-order members:
/// `cos₁ = sin x/x`, `cos₂ = 2(1−cos x)/x²`, `cos₃ = 6(x−sin x)/x³`,
/// `sin₁ = (1−cos x)/x`, `sin₂ = 2(x−sin x)/x²`.
///
/// `|x| < 1e−4` is answered by the power series.
pub fn closed_form(f: ClosedFn, m: u32, x: f64) -> Result<f64> {
    let supported = match f {
        ClosedFn::Cos => (1..=3).contains(&m),
        ClosedFn::Sin => (1..=2).contains(&m),
    };
    if !supported {
        return Err(Error::UnsupportedIndex(format!("no closed form for {f}_{m}")));
    }
    if !x.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {x}")));
    }
    if x.abs() < CLOSED_FORM_SWITCH {
        let order = Order::new(m as f64)?;
        return match f {
            ClosedFn::Cos => cos_m_eval(order, x),
            ClosedFn::Sin => sin_m_eval(order, x),
        };
    }
    Ok(match (f, m) {
        (ClosedFn::Cos, 1) => x.sin() / x,
        (ClosedFn::Cos, 2) => 2.0 * one_minus_cos(x) / (x * x),
        (ClosedFn::Cos, 3) => 6.0 * x_minus_sin(x) / (x * x * x),
        (ClosedFn::Sin, 1) => one_minus_cos(x) / x,
        (ClosedFn::Sin, 2) => 2.0 * x_minus_sin(x) / (x * x),
        _ => unreachable!("index checked above"),
    })
}
