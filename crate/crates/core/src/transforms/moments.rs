use super::quadrature::{try_integrate_finite, try_integrate_improper, QuadratureSpec};
use crate::error::{domain, Result};
use crate::gaussian_family::e_m_eval;
use crate::ntf::{check_finite, cos_m_eval, Order};

/// Below this |x| the gain curve is summed from its power series.
const GAIN_SERIES_SWITCH: f64 = 1.0;

/// Small-signal gain shape `−cos₂′(x) = (4(1 − cos x) − 2x sin x)/x³`; odd.
///
/// `cos₂ = 2(1 − cos x)/x²` is the matching spectral shape.
pub fn fel_gain_curve(x: f64) -> f64 {
    if x.abs() < GAIN_SERIES_SWITCH {
        gain_series(x)
    } else {
        gain_closed(x)
    }
}

fn gain_series(x: f64) -> f64 {
    // Σ_{r≥1} (−1)^{r+1} 4r x^{2r−1}/(2r+2)!
    let x2 = x * x;
    let mut term = x / 6.0;
    let mut sum = 0.0f64;
    let mut r = 1.0;
    while term.abs() > 1e-18 * sum.abs() || sum == 0.0 {
        sum += term;
        term *= -x2 * (r + 1.0) / (r * (2.0 * r + 3.0) * (2.0 * r + 4.0));
        r += 1.0;
        if term == 0.0 {
            break;
        }
    }
    sum
}

fn gain_closed(x: f64) -> f64 {
    let s = (0.5 * x).sin();
    (8.0 * s * s - 2.0 * x * x.sin()) / (x * x * x)
}

/// Truncated second moment `M(m, R) = ∫_{−R}^{R} ω² cos_m(ω) dω`.
///
/// `M(2, R) = 4R − 4 sin R` grows without bound, so the untruncated moment
/// does not exist.
pub fn second_moment_diagnostic(m: Order, r: f64, quad: &QuadratureSpec) -> Result<f64> {
    let m = m.require_positive()?;
    check_finite(r)?;
    if r <= 0.0 {
        return domain(format!("R must be positive, got {r}"));
    }
    let half = try_integrate_finite(|w| Ok(w * w * cos_m_eval(m, w)?), 0.0, r, quad)?;
    Ok(2.0 * half)
}

/// `∫ x² e₀(x) dx = √π/2`, with `e₀` taken from [`e_m_eval`].
pub fn gaussian_second_moment(quad: &QuadratureSpec) -> Result<f64> {
    let e0 = Order::new(0.0)?;
    try_integrate_improper(|x| Ok(x * x * e_m_eval(e0, x)?), quad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gain_is_odd_and_continuous() {
        assert_eq!(fel_gain_curve(0.0), 0.0);
        assert_eq!(fel_gain_curve(-1.7), -fel_gain_curve(1.7));
        let x = GAIN_SERIES_SWITCH;
        assert!((gain_series(x) - gain_closed(x)).abs() < 1e-15);
    }

    #[test]
    fn gain_matches_derivative_series() {
        let m = Order::new(2.0).unwrap();
        let k = crate::ntf::DerivOrder::new(1).unwrap();
        for &x in &[0.01, 0.5, 1.3, 2.6, 9.0, 25.0] {
            let d = crate::ntf::cos_m_deriv(m, k, x).unwrap();
            assert!((fel_gain_curve(x) + d).abs() < 1e-15, "{x}");
        }
    }

    #[test]
    fn truncated_moment_of_cos2() {
        let q = QuadratureSpec::default();
        let m = Order::new(2.0).unwrap();
        let v = second_moment_diagnostic(m, 10.0, &q).unwrap();
        assert!((v - (40.0 - 4.0 * 10f64.sin())).abs() < 1e-8);
        assert!(second_moment_diagnostic(m, 0.0, &q).is_err());
    }
}
