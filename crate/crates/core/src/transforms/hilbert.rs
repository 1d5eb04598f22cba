use super::quadrature::{try_integrate_half_line, QuadratureSpec};
use crate::error::Result;
use crate::ntf::check_finite;

/// `−(1/π) PV ∫ f(ω′)/(ω′−ω) dω′`, computed as
/// `−(1/π) ∫₀^∞ (f(ω+u) − f(ω−u))/u du` so no sample sits on the pole.
///
/// With this sign `cos_m ↦ sin_m` and `1/(1+x²) ↦ x/(1+x²)`.
pub fn hilbert_pv(f: impl Fn(f64) -> Result<f64>, omega: f64, quad: &QuadratureSpec) -> Result<f64> {
    check_finite(omega)?;
    let v = try_integrate_half_line(|u| Ok((f(omega + u)? - f(omega - u)?) / u), 0.0, quad)?;
    Ok(-v / std::f64::consts::PI)
}
