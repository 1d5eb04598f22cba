use super::far_field::{exp_deriv, in_far_field};
use super::kernels::{bessel_deriv, j_series, termwise_deriv};
use super::{check_finite, DerivOrder, Order};
use crate::core_math::dd::Dd;
use crate::core_math::series::TruncationPolicy;
use crate::error::Result;

/// k-th derivative of `cos_m` through the Bessel-like expansion
/// `(−1)^k k! Σ_l (−1)^l (2x)^{k−2l}/((k−2l)! l!) j_{m,k−l}(x)`.
pub fn cos_m_deriv(m: Order, k: DerivOrder, x: f64) -> Result<f64> {
    check_finite(x)?;
    if in_far_field(m.value(), x) {
        return Ok(exp_deriv(m.value(), k.value(), x).re);
    }
    Ok(bessel_deriv(m.value(), k.value(), Dd::new(x), &TruncationPolicy::default())?.to_f64())
}

/// k-th derivative of `cos_m` by differentiating its power series term by term.
pub fn cos_m_deriv_termwise(m: Order, k: DerivOrder, x: f64) -> Result<f64> {
    check_finite(x)?;
    if in_far_field(m.value(), x) {
        return Ok(exp_deriv(m.value(), k.value(), x).re);
    }
    let r = termwise_deriv(m.value(), k.value(), Dd::new(x), false, &TruncationPolicy::default())?;
    Ok(r.value.to_f64())
}

/// k-th derivative of `sin_m`, term by term.
pub fn sin_m_deriv(m: Order, k: DerivOrder, x: f64) -> Result<f64> {
    check_finite(x)?;
    if in_far_field(m.value(), x) {
        return Ok(exp_deriv(m.value(), k.value(), x).im);
    }
    let r = termwise_deriv(m.value(), k.value(), Dd::new(x), true, &TruncationPolicy::default())?;
    Ok(r.value.to_f64())
}

/// `j_{m,α}(x) = Σ_r (−1)^r x^{2r} (1+r)_α/(1+m)_{2(r+α)}`.
pub fn j_small(m: Order, alpha: u32, x: f64) -> Result<f64> {
    check_finite(x)?;
    Ok(j_series(m.value(), alpha, Dd::new(x), &TruncationPolicy::default())?.value.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_math::gamma::gamma_fn;
    use crate::ntf::cos_m_eval;
    use std::f64::consts::PI;

    fn o(m: f64) -> Order {
        Order::new(m).unwrap()
    }
    fn k(k: u32) -> DerivOrder {
        DerivOrder::new(k).unwrap()
    }

    #[test]
    fn order_zero_is_the_function() {
        for &x in &[0.0, 1.3, 9.0] {
            assert_eq!(cos_m_deriv(o(2.5), k(0), x).unwrap(), cos_m_eval(o(2.5), x).unwrap());
        }
    }

    #[test]
    fn sinc_slope_at_pi() {
        let d = cos_m_deriv(o(1.0), k(1), PI).unwrap();
        assert!((d + 1.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn first_derivative_series_form() {
        // −2 Σ (−1)^r (r+1) x^{2r+1} Γ(m+1)/Γ(m+2r+3) at m = 2, x = 1
        let m = 2.0;
        let mut s = 0.0;
        for r in 0..30 {
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            s += sign * (r + 1) as f64 * gamma_fn(m + 1.0).unwrap() / gamma_fn(m + 2.0 * r as f64 + 3.0).unwrap();
        }
        let expected = -2.0 * s;
        assert!((cos_m_deriv(o(2.0), k(1), 1.0).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn j_small_examples() {
        assert_eq!(j_small(o(1.7), 0, 2.2).unwrap(), cos_m_eval(o(1.7), 2.2).unwrap());
        assert!((j_small(o(2.0), 1, 0.0).unwrap() - 1.0 / 12.0).abs() < 1e-17);
        assert!((j_small(o(1.0), 2, 0.0).unwrap() - 1.0 / 60.0).abs() < 1e-17);
    }

    #[test]
    fn sin_m_derivative_of_ordinary_sine() {
        for &x in &[0.4, 3.0, 35.0] {
            assert!((sin_m_deriv(o(0.0), k(1), x).unwrap() - x.cos()).abs() < 1e-14);
        }
    }
}
