//! Double-double entry points, for callers that difference or otherwise
//! amplify the rounding of ordinary `f64` results.

use super::kernels::{cos_series, sin_series};
use super::Order;
use crate::core_math::dd::Dd;
use crate::core_math::series::TruncationPolicy;
use crate::error::Result;

/// `cos_m(x)` to double-double accuracy (power series; intended for `|x| ≤ 30`).
pub fn cos_m(m: Order, x: Dd) -> Result<Dd> {
    Ok(cos_series(m.value(), x, &policy())?.value)
}

/// `sin_m(x)` to double-double accuracy.
pub fn sin_m(m: Order, x: Dd) -> Result<Dd> {
    Ok(sin_series(m.value(), x, &policy())?.value)
}

fn policy() -> TruncationPolicy {
    TruncationPolicy::dd_full()
}

/// Central-difference estimate of the k-th derivative (`k ≤ 3`) of a
/// double-double function, second order in `h`.
pub fn central_difference(f: impl Fn(Dd) -> Result<Dd>, k: u32, x: f64, h: f64) -> Result<f64> {
    let at = |j: f64| f(Dd::new(x) + Dd::from_prod(j, h));
    let v = match k {
        0 => f(Dd::new(x))?,
        1 => (at(1.0)? - at(-1.0)?) / (2.0 * h),
        2 => (at(1.0)? - at(0.0)? * 2.0 + at(-1.0)?) / Dd::from_prod(h, h),
        3 => (at(2.0)? - at(1.0)? * 2.0 + at(-1.0)? * 2.0 - at(-2.0)?) / (Dd::from_prod(h, h) * h * 2.0),
        _ => return crate::error::domain(format!("central differences implemented for k ≤ 3, got {k}")),
    };
    Ok(v.to_f64())
}
