use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
/// Largest integer whose factorial is finite in `f64`.
const MAX_FACTORIAL: usize = 170;

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.trunc()
}

fn factorials() -> &'static [f64; MAX_FACTORIAL + 1] {
    static TABLE: OnceLock<[f64; MAX_FACTORIAL + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [1.0; MAX_FACTORIAL + 1];
        for n in 1..=MAX_FACTORIAL {
            t[n] = t[n - 1] * n as f64;
        }
        t
    })
}

/// `n!` as a double; infinite beyond 170.
pub fn factorial(n: u32) -> f64 {
    factorials().get(n as usize).copied().unwrap_or(f64::INFINITY)
}

/// `sin(πx)` with the argument reduced exactly, so zeros land on the integers.
pub fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if n.rem_euclid(2.0) == 0.0 {
        s
    } else {
        -s
    }
}

/// `cos(πx)` with the same exact reduction as [`sin_pi`].
pub fn cos_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let c = if r.abs() == 0.5 { 0.0 } else { (PI * r).cos() };
    if n.rem_euclid(2.0) == 0.0 {
        c
    } else {
        -c
    }
}

/// Lanczos sum for `x ≥ 0.5`, returned as `(t, series)` with `t = x + g − 1/2`.
fn lanczos(x: f64) -> (f64, f64) {
    let z = x - 1.0;
    let mut a = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    (z + LANCZOS_G + 0.5, a)
}

/// Γ(x) with relative error ≤ 1e−13 on [−20, 50].
///
/// Integer arguments return tabulated factorials, arguments below 1/2 go
/// through the reflection formula.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("gamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    Ok(gamma_unchecked(x))
}

pub(crate) fn gamma_unchecked(x: f64) -> f64 {
    if x == x.trunc() && x >= 1.0 {
        return if x <= (MAX_FACTORIAL + 1) as f64 {
            factorials()[x as usize - 1]
        } else {
            f64::INFINITY
        };
    }
    if x < 0.5 {
        return PI / (sin_pi(x) * gamma_unchecked(1.0 - x));
    }
    let (t, a) = lanczos(x);
    // Split the power so that t^(x−1/2) does not overflow before e^(−t) damps it.
    let half = t.powf(0.5 * (x - 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * a
}

/// `(ln|Γ(x)|, sign Γ(x))`.
pub fn ln_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let (lg, sg) = ln_gamma_signed(1.0 - x)?;
        return Ok(((PI / s.abs()).ln() - lg, s.signum() * sg));
    }
    if x == 1.0 || x == 2.0 {
        return Ok((0.0, 1.0));
    }
    if x < 15.0 {
        let g = gamma_unchecked(x);
        return Ok((g.ln(), 1.0));
    }
    let (t, a) = lanczos(x);
    Ok((LN_SQRT_2PI + (x - 0.5) * t.ln() - t + a.ln(), 1.0))
}

/// ln Γ(x) for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    Ok(ln_gamma_signed(x)?.0)
}

/// Pochhammer symbol `(d)_r = Γ(d+r)/Γ(d)`.
///
/// Integer `r` is a direct product (a reciprocal product for `r < 0`);
/// other `r` use a Gamma ratio.
pub fn pochhammer(d: f64, r: f64) -> Result<f64> {
    if !d.is_finite() || !r.is_finite() {
        return Err(Error::Domain(format!("pochhammer({d}, {r})")));
    }
    if is_nonpositive_integer(d) {
        return Err(Error::Pole(d));
    }
    if is_nonpositive_integer(d + r) {
        return Err(Error::Pole(d + r));
    }
    if r == r.trunc() && r.abs() <= 1e6 {
        let n = r.abs() as u64;
        let mut p = 1.0;
        if r >= 0.0 {
            for j in 0..n {
                p *= d + j as f64;
            }
            return Ok(p);
        }
        for j in 1..=n {
            p *= d - j as f64;
        }
        return Ok(1.0 / p);
    }
    let (a, b) = (d + r, d);
    if a.abs() < 150.0 && b.abs() < 150.0 {
        return Ok(gamma_unchecked(a) / gamma_unchecked(b));
    }
    let (la, sa) = ln_gamma_signed(a)?;
    let (lb, sb) = ln_gamma_signed(b)?;
    Ok(sa * sb * (la - lb).exp())
}
