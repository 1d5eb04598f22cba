use super::e_half::even_imag;
use crate::error::{domain, Result};
use crate::ntf::{check_finite, Order};
use crate::transforms::quadrature::{try_integrate_half_line, QuadratureSpec};

/// Largest `|x|` accepted by the transform.
pub const GAUSS_TRANSFORM_MAX_ARG: f64 = 10.0;

/// `cos_m(x) = m! (1/√π) ∫ e^{−ξ²} e_m^{(1/2)}(2ixξ) dξ`, by quadrature.
///
/// Odd powers of `ξ` integrate to zero, so only `Re e_m^{(1/2)}(2ixξ)` is
/// sampled, and the `Γ(m+1)` in front cancels the one inside `e_m^{(1/2)}`.
/// The integrand is dropped where `e^{−ξ²}` times the bound
/// `exp(3 (xξ/2)^{2/3})` on the summed term magnitudes falls below `e^{−40}`.
pub fn cos_via_gauss_transform(m: Order, x: f64, quad: &QuadratureSpec) -> Result<f64> {
    check_finite(x)?;
    if x.abs() > GAUSS_TRANSFORM_MAX_ARG {
        return domain(format!("|x| must be at most {GAUSS_TRANSFORM_MAX_ARG}, got {x}"));
    }
    let m = m.value();
    let half = try_integrate_half_line(
        |xi| {
            let growth = 3.0 * (0.5 * x * xi).abs().powf(2.0 / 3.0);
            if growth - xi * xi < -40.0 {
                return Ok(0.0);
            }
            Ok((-xi * xi).exp() * even_imag(m, 2.0 * x * xi)?)
        },
        0.0,
        quad,
    )?;
    Ok(2.0 * half / std::f64::consts::PI.sqrt())
}
