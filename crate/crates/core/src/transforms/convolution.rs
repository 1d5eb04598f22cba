use super::quadrature::{try_integrate_improper, QuadratureSpec};
use crate::core_math::hermite::hermite2_scaled_table;
use crate::core_math::series::{sum_series_partial, TruncationPolicy};
use crate::error::{domain, Error, Result};
use crate::ntf::{check_finite, cos_m_eval, Order};

/// Gaussian `e^{−α(x−ξ)²}` with width parameter `α > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianKernel {
    alpha: f64,
}

impl GaussianKernel {
    pub fn new(alpha: f64) -> Result<GaussianKernel> {
        if alpha.is_finite() && alpha > 0.0 {
            Ok(GaussianKernel { alpha })
        } else {
            domain(format!("kernel width alpha must be positive, got {alpha}"))
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

/// `(cos_m ∗ g)(x) = ∫ cos_m(ξ) e^{−α(x−ξ)²} dξ` by quadrature, after
/// `ξ = x + v/√α`.
pub fn convolve_gauss_direct(m: Order, kernel: GaussianKernel, x: f64, quad: &QuadratureSpec) -> Result<f64> {
    let m = m.require_positive()?;
    check_finite(x)?;
    let s = kernel.alpha.sqrt();
    let v = try_integrate_improper(
        |v| {
            let g = (-v * v).exp();
            if g == 0.0 {
                return Ok(0.0);
            }
            Ok(cos_m_eval(m, x + v / s)? * g)
        },
        quad,
    )?;
    Ok(v / s)
}

/// Largest `|x|` accepted by the Hermite route.
pub const HERMITE_MAX_ARG: f64 = 10.0;

/// The same convolution from the moment series
/// `Σ_r (−1)^r A_{2r}(α, x)/(1+m)_{2r}`, `A_n = √(π/α) H_n(x, 1/(4α))`.
///
/// `H_n/n!` comes from the scaled two-variable Hermite table, so the term is
/// `√(π/α) (−1)^r (H_{2r}/(2r)!) Π_{j ≤ 2r} j/(m+j)`.
pub fn convolve_gauss_hermite(m: Order, kernel: GaussianKernel, x: f64, policy: &TruncationPolicy) -> Result<f64> {
    let m = m.require_positive()?.value();
    check_finite(x)?;
    if x.abs() > HERMITE_MAX_ARG {
        return domain(format!("|x| must be at most {HERMITE_MAX_ARG}, got {x}"));
    }
    let y = 0.25 / kernel.alpha;
    let terms = policy.max_terms();
    let table = hermite2_scaled_table(2 * terms, x, y);
    let mut ratio = 1.0;
    let r = sum_series_partial(
        |r| {
            if r > 0 {
                let j = (2 * r) as f64;
                ratio *= (j - 1.0) / (m + j - 1.0) * j / (m + j);
            }
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            sign * table[2 * r] * ratio
        },
        policy,
    );
    if !r.converged {
        return Err(Error::NonConvergence { terms: r.terms_used, partial: r.value });
    }
    let r = r.guard(crate::core_math::series::MAX_CANCELLATION_F64)?;
    Ok((std::f64::consts::PI / kernel.alpha).sqrt() * r.value)
}
