use num_complex::Complex64;

use super::far_field::{exp_deriv, in_far_field};
use super::kernels::{cos_series, exp_series, sin_series};
use super::{check_finite, Order};
use crate::core_math::dd::Dd;
use crate::core_math::series::{SeriesResult, TruncationPolicy};
use crate::error::Result;

/// Nearly cosine `cos_m(x) = Σ_r (−1)^r x^{2r}/(m+1)_{2r}`.
///
/// Even in `x`. The series is summed in double-double for `|x| ≤ 30`; beyond
/// that an exact split into an oscillatory and a Laplace-type part is used.
pub fn cos_m_eval(m: Order, x: f64) -> Result<f64> {
    check_finite(x)?;
    if in_far_field(m.value(), x) {
        return Ok(exp_deriv(m.value(), 0, x).re);
    }
    Ok(cos_m_series(m, x, &TruncationPolicy::default())?.value)
}

/// Nearly sine `sin_m(x) = Σ_r (−1)^r x^{2r+1}/(m+1)_{2r+1}`; odd in `x`.
pub fn sin_m_eval(m: Order, x: f64) -> Result<f64> {
    check_finite(x)?;
    if in_far_field(m.value(), x) {
        return Ok(exp_deriv(m.value(), 0, x).im);
    }
    Ok(sin_m_series(m, x, &TruncationPolicy::default())?.value)
}

/// `exp_m(it) = Σ_r (it)^r/(1+m)_r`, whose real and imaginary parts are
/// `cos_m(t)` and `sin_m(t)`.
pub fn exp_m_eval(m: Order, t: f64) -> Result<Complex64> {
    check_finite(t)?;
    if in_far_field(m.value(), t) {
        return Ok(exp_deriv(m.value(), 0, t));
    }
    let r = exp_series(m.value(), Dd::new(t), &TruncationPolicy::default())?;
    Ok(r.value.to_c64())
}

/// Power-series evaluation of `cos_m` under an explicit policy, exposing the
/// term count and cancellation estimate.
pub fn cos_m_series(m: Order, x: f64, policy: &TruncationPolicy) -> Result<SeriesResult<f64>> {
    check_finite(x)?;
    Ok(cos_series(m.value(), Dd::new(x), policy)?.map(Dd::to_f64))
}

/// Power-series evaluation of `sin_m` under an explicit policy.
pub fn sin_m_series(m: Order, x: f64, policy: &TruncationPolicy) -> Result<SeriesResult<f64>> {
    check_finite(x)?;
    Ok(sin_series(m.value(), Dd::new(x), policy)?.map(Dd::to_f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn o(m: f64) -> Order {
        Order::new(m).unwrap()
    }

    #[test]
    fn origin_values() {
        for m in [-0.9, 0.0, 0.5, 7.0] {
            assert_eq!(cos_m_eval(o(m), 0.0).unwrap(), 1.0);
            assert_eq!(sin_m_eval(o(m), 0.0).unwrap(), 0.0);
            assert_eq!(exp_m_eval(o(m), 0.0).unwrap(), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn reference_points() {
        let c2 = cos_m_eval(o(2.0), PI).unwrap();
        assert!((c2 - 0.405_284_734_569_351_1).abs() < 1e-16);
        let c3 = cos_m_eval(o(3.0), 2.0).unwrap();
        assert!((c3 - 0.818_026_929_880_738_7).abs() < 1e-15);
        assert!((cos_m_eval(o(0.0), 1.0).unwrap() - 1f64.cos()).abs() < 1e-16);
        let s1 = sin_m_eval(o(1.0), PI / 2.0).unwrap();
        assert!((s1 - 2.0 / PI).abs() < 1e-16);
        let s2 = sin_m_eval(o(2.0), 1.0).unwrap();
        assert!((s2 - 0.317_058_030_384_207).abs() < 1e-16);
    }

    #[test]
    fn exp_m_reference_points() {
        let e = exp_m_eval(o(0.0), 1.0).unwrap();
        assert!((e - Complex64::new(0.0, 1.0).exp()).norm() < 1e-16);
        let e = exp_m_eval(o(2.0), 1.0).unwrap();
        assert!((e.re - 0.919_395_388_263_720_6).abs() < 1e-15);
        assert!((e.im - 2.0 * (1.0 - 1f64.sin())).abs() < 1e-15);
    }

    #[test]
    fn parity_is_exact() {
        for &x in &[0.3, 4.0, 17.25, 45.0] {
            for m in [0.5, 3.0] {
                assert_eq!(cos_m_eval(o(m), -x).unwrap(), cos_m_eval(o(m), x).unwrap());
                assert_eq!(sin_m_eval(o(m), -x).unwrap(), -sin_m_eval(o(m), x).unwrap());
            }
        }
    }

    #[test]
    fn far_field_is_continuous_with_series() {
        let p = TruncationPolicy::default();
        for m in [0.5, 2.0, 5.0] {
            let x = 30.0 + 1e-9;
            let a = cos_m_eval(o(m), x).unwrap();
            let b = cos_m_series(o(m), x, &p).unwrap().value;
            assert!((a - b).abs() < 1e-11, "m={m} {a} {b}");
        }
    }

    #[test]
    fn cancellation_is_reported() {
        let r = cos_m_series(o(0.0), 30.0, &TruncationPolicy::default()).unwrap();
        assert!(r.cancellation_digits > 11.0 && r.cancellation_digits < 14.0);
        assert!((r.value - 30f64.cos()).abs() < 1e-15);
    }

    #[test]
    fn non_finite_argument() {
        assert!(cos_m_eval(o(1.0), f64::NAN).is_err());
        assert!(sin_m_eval(o(1.0), f64::INFINITY).is_err());
    }
}
