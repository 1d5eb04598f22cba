use super::Order;
use crate::core_math::dd::Dd;
use crate::core_math::hypergeometric::hyp1f2_dd;
use crate::core_math::series::TruncationPolicy;
use crate::error::{domain, Error, Result};

/// Lommel function
/// `s_{μ,ν}(z) = z^{μ+1}/((μ−ν+1)(μ+ν+1)) · ₁F₂(1; (μ−ν+3)/2, (μ+ν+3)/2; −z²/4)`.
///
/// With `μ = m − 3/2`, `ν = 1/2` it reduces to `z^{m−1/2} cos_m(z)/(m(m−1))`.
pub fn lommel_s(mu: f64, nu: f64, z: f64) -> Result<f64> {
    if !(z > 0.0 && z.is_finite()) {
        return domain(format!("lommel_s needs z > 0, got {z}"));
    }
    let a = Dd::from_sum(mu, -nu) + 1.0;
    let b = Dd::from_sum(mu, nu) + 1.0;
    if a.to_f64() == 0.0 || b.to_f64() == 0.0 {
        return Err(Error::Pole(if a.to_f64() == 0.0 { mu - nu + 1.0 } else { mu + nu + 1.0 }));
    }
    let b1 = (a + 2.0) * 0.5;
    let b2 = (b + 2.0) * 0.5;
    let arg = -(Dd::new(z).sqr() * 0.25);
    let f = hyp1f2_dd(b1, b2, arg, &TruncationPolicy::default())?.value;
    Ok(z.powf(mu + 1.0) * (f / (a * b)).to_f64())
}

/// Residual of `z²y'' + zy' + (z² − 1/4)y − z^{m−1/2}` at `y = s_{m−3/2, 1/2}`.
///
/// Derivatives are fourth-order central differences of [`lommel_s`] with step
/// `z/1000`.
pub fn lommel_ode_residual(m: Order, z: f64) -> Result<f64> {
    let mv = m.value();
    if mv <= 1.0 {
        return domain(format!("lommel residual needs m > 1, got {mv}"));
    }
    if !(z > 0.0 && z.is_finite()) {
        return domain(format!("lommel residual needs z > 0, got {z}"));
    }
    let (mu, nu) = (mv - 1.5, 0.5);
    let h = 1e-3 * z;
    let s = |t: f64| lommel_s(mu, nu, t);
    let (fm2, fm1, f0, fp1, fp2) = (s(z - 2.0 * h)?, s(z - h)?, s(z)?, s(z + h)?, s(z + 2.0 * h)?);
    let d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    let d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    Ok(z * z * d2 + z * d1 + (z * z - 0.25) * f0 - z.powf(mv - 0.5))
}
