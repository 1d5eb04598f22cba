use std::fmt;

use clap::ValueEnum;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::gaussian_family::{e_half_eval, e_m_eval, LorentzianPower, PowerOrder};
use crate::ntf::{cos_m_deriv, cos_m_eval, exp_m_eval, sin_m_eval, DerivOrder, Order};
use crate::transforms::fel_gain_curve;

/// Functions reachable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FnId {
    #[value(name = "cos_m")]
    CosM,
    #[value(name = "sin_m")]
    SinM,
    #[value(name = "cos_m_deriv")]
    CosMDeriv,
    #[value(name = "e_m")]
    EM,
    #[value(name = "e_half")]
    EHalf,
    #[value(name = "os")]
    Os,
    #[value(name = "fel_gain")]
    FelGain,
    /// Complex valued; `eval` only.
    #[value(name = "exp_m")]
    ExpM,
}

impl FnId {
    pub fn name(self) -> &'static str {
        match self {
            FnId::CosM => "cos_m",
            FnId::SinM => "sin_m",
            FnId::CosMDeriv => "cos_m_deriv",
            FnId::EM => "e_m",
            FnId::EHalf => "e_half",
            FnId::Os => "os",
            FnId::FelGain => "fel_gain",
            FnId::ExpM => "exp_m",
        }
    }
}

impl fmt::Display for FnId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Raw parameters as given on the command line.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Params {
    pub m: Option<f64>,
    pub k: Option<u32>,
    pub nu: Option<f64>,
}

/// A function with validated parameters, ready to sample.
pub enum Function {
    CosM(Order),
    SinM(Order),
    CosMDeriv(Order, DerivOrder),
    EM(Order),
    EHalf(Order),
    Os(Box<LorentzianPower>),
    FelGain,
    ExpM(Order),
}

fn need<T>(v: Option<T>, flag: &str, id: FnId) -> Result<T> {
    match v {
        Some(v) => Ok(v),
        None => domain(format!("{id} needs --{flag}")),
    }
}

fn refuse<T>(v: Option<T>, flag: &str, id: FnId) -> Result<()> {
    match v {
        Some(_) => domain(format!("{id} does not take --{flag}")),
        None => Ok(()),
    }
}

impl Function {
    pub fn new(id: FnId, p: Params) -> Result<Function> {
        let order = |p: &Params| need(p.m, "m", id).and_then(Order::new);
        if !matches!(id, FnId::CosMDeriv) {
            refuse(p.k, "k", id)?;
        }
        if !matches!(id, FnId::Os) {
            refuse(p.nu, "nu", id)?;
        }
        Ok(match id {
            FnId::CosM => Function::CosM(order(&p)?),
            FnId::SinM => Function::SinM(order(&p)?),
            FnId::CosMDeriv => Function::CosMDeriv(order(&p)?, DerivOrder::new(need(p.k, "k", id)?)?),
            FnId::EM => Function::EM(order(&p)?),
            FnId::EHalf => Function::EHalf(order(&p)?),
            FnId::Os => Function::Os(Box::new(LorentzianPower::new(order(&p)?, PowerOrder::new(need(p.nu, "nu", id)?)?))),
            FnId::FelGain => {
                refuse(p.m, "m", id)?;
                Function::FelGain
            }
            FnId::ExpM => Function::ExpM(order(&p)?),
        })
    }

    pub fn id(&self) -> FnId {
        match self {
            Function::CosM(_) => FnId::CosM,
            Function::SinM(_) => FnId::SinM,
            Function::CosMDeriv(..) => FnId::CosMDeriv,
            Function::EM(_) => FnId::EM,
            Function::EHalf(_) => FnId::EHalf,
            Function::Os(_) => FnId::Os,
            Function::FelGain => FnId::FelGain,
            Function::ExpM(_) => FnId::ExpM,
        }
    }

    /// Parameters in header order, `m` then `k` or `nu`.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match self {
            Function::CosM(m) | Function::SinM(m) | Function::EM(m) | Function::EHalf(m) | Function::ExpM(m) => {
                vec![("m", m.value())]
            }
            Function::CosMDeriv(m, k) => vec![("m", m.value()), ("k", k.value() as f64)],
            Function::Os(f) => vec![("m", f.order().value()), ("nu", f.power().value())],
            Function::FelGain => vec![],
        }
    }

    /// Complex value; the imaginary part is zero except for `exp_m`.
    pub fn eval_complex(&self, x: f64) -> Result<Complex64> {
        match self {
            Function::ExpM(m) => exp_m_eval(*m, x),
            _ => self.eval(x).map(|v| Complex64::new(v, 0.0)),
        }
    }

    /// Real value; `exp_m` is rejected.
    pub fn eval(&self, x: f64) -> Result<f64> {
        match self {
            Function::CosM(m) => cos_m_eval(*m, x),
            Function::SinM(m) => sin_m_eval(*m, x),
            Function::CosMDeriv(m, k) => cos_m_deriv(*m, *k, x),
            Function::EM(m) => e_m_eval(*m, x),
            Function::EHalf(m) => e_half_eval(*m, x),
            Function::Os(f) => f.eval(x),
            Function::FelGain => {
                crate::ntf::check_finite(x)?;
                Ok(fel_gain_curve(x))
            }
            Function::ExpM(_) => domain("exp_m is complex valued; use eval"),
        }
    }
}

/// `n` equispaced points from `from` to `to`, both ends exact.
pub fn linspace(from: f64, to: f64, n: usize) -> Result<Vec<f64>> {
    if !(from.is_finite() && to.is_finite() && from < to) {
        return domain(format!("grid needs finite from < to, got {from} and {to}"));
    }
    if n < 2 {
        return domain(format!("grid needs at least 2 points, got {n}"));
    }
    let step = (to - from) / (n - 1) as f64;
    Ok((0..n).map(|i| if i == n - 1 { to } else { from + step * i as f64 }).collect())
}

/// Samples `f` on `grid` in parallel; results keep grid order and the first
/// failing point (by index) decides the error.
pub fn sample(f: impl Fn(f64) -> Result<f64> + Sync, grid: &[f64]) -> Result<Vec<f64>> {
    let values: Vec<Result<f64>> = grid.par_iter().map(|&x| f(x)).collect();
    values.into_iter().collect()
}
