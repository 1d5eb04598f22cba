use std::ops::{Div, Mul, Neg};

use num_complex::Complex64;

use crate::core_math::dd::{Dd, DdComplex};
use crate::core_math::gamma::gamma_fn;
use crate::core_math::series::{sum_ratio_series, SeriesResult, Summand, TruncationPolicy};
use crate::error::{domain, Result};
use crate::ntf::{check_finite, Order};

/// Largest supported `|x|`.
pub const E_HALF_MAX_ARG: f64 = 40.0;

/// `√π/2` in double-double.
const HALF_SQRT_PI: Dd = Dd { hi: 0.886_226_925_452_758, lo: -3.833_293_249_912_899_3e-17 };

/// The even and odd halves of `Γ(m+1)·e_m^{(1/2)}(z)`:
///
/// ```text
/// E(z) = Σ_q q! z^{2q}/((2q)! (m+1)_{2q})
/// O(z) = Σ_q (3/2)_q z^{2q+1}/((2q+1)! (m+2)_{2q})
/// e_m^{(1/2)}(z) = [E(z) − (√π/2)/(m+1) · O(z)] / Γ(m+1)
/// ```
///
/// Splitting off `1/Γ(m+1)` leaves the relative weight of the halves exact.
fn halves<T>(m: f64, z: T, policy: &TruncationPolicy) -> Result<(SeriesResult<T>, SeriesResult<T>)>
where
    T: Summand + Mul<Output = T> + Mul<Dd, Output = T> + Div<Dd, Output = T> + Neg<Output = T> + From<Dd>,
{
    let z2 = z * z;
    let md = Dd::new(m);
    let even = sum_ratio_series(
        T::from(Dd::ONE),
        |t, q| {
            let num = Dd::new((q + 1) as f64) / ((2 * q + 1) * (2 * q + 2)) as f64;
            t * z2 * num / ((md + (2 * q + 1) as f64) * (md + (2 * q + 2) as f64))
        },
        policy,
    )?
    .guard(T::MAX_CANCELLATION)?;
    let odd = sum_ratio_series(
        z,
        |t, q| {
            let num = (Dd::new(q as f64) + 1.5) / ((2 * q + 2) * (2 * q + 3)) as f64;
            t * z2 * num / ((md + (2 * q + 2) as f64) * (md + (2 * q + 3) as f64))
        },
        policy,
    )?
    .guard(T::MAX_CANCELLATION)?;
    Ok((even, odd))
}

fn check_arg(m: Order, size: f64) -> Result<f64> {
    if size > E_HALF_MAX_ARG {
        return domain(format!("|x| must be at most {E_HALF_MAX_ARG}, got {size}"));
    }
    gamma_fn(m.value() + 1.0)
}

/// Half-index Gaussian `e_m^{(1/2)}(x) = Σ_r (−1)^r Γ(r/2+1) x^r/(r! Γ(m+r+1))`
/// for real `|x| ≤ 40`.
///
/// Alternating for `x > 0`; every term is positive for `x < 0`.
pub fn e_half_eval(m: Order, x: f64) -> Result<f64> {
    check_finite(x)?;
    let g = check_arg(m, x.abs())?;
    let (even, odd) = halves(m.value(), Dd::new(x), &TruncationPolicy::default())?;
    let weight = HALF_SQRT_PI / (Dd::new(m.value()) + 1.0);
    Ok((even.value - weight * odd.value).to_f64() / g)
}

/// `e_m^{(1/2)}(z)` at complex `|z| ≤ 40`, e.g. on the imaginary axis.
pub fn e_half_eval_complex(m: Order, z: Complex64) -> Result<Complex64> {
    check_finite(z.re)?;
    check_finite(z.im)?;
    let g = check_arg(m, z.norm())?;
    let zd = DdComplex { re: Dd::new(z.re), im: Dd::new(z.im) };
    let (even, odd) = halves(m.value(), zd, &TruncationPolicy::default())?;
    let weight = HALF_SQRT_PI / (Dd::new(m.value()) + 1.0);
    Ok((even.value - odd.value * weight).to_c64() / g)
}

/// `Re e_m^{(1/2)}(iy)`: on the imaginary axis only the even terms are real,
/// `Σ_q (−1)^q q! y^{2q}/((2q)! Γ(m+2q+1))`.
pub fn e_half_imag_re(m: Order, y: f64) -> Result<f64> {
    check_finite(y)?;
    let g = check_arg(m, y.abs())?;
    even_imag(m.value(), y).map(|v| v / g)
}

/// `Γ(m+1)·Re e_m^{(1/2)}(iy)` with no bound on `|y|`; callers keep the
/// cancellation guard as their safety net.
pub(crate) fn even_imag(m: f64, y: f64) -> Result<f64> {
    let y2 = Dd::new(y).sqr();
    let md = Dd::new(m);
    let r = sum_ratio_series(
        Dd::ONE,
        |t, q| {
            let num = Dd::new((q + 1) as f64) / ((2 * q + 1) * (2 * q + 2)) as f64;
            -(t * y2 * num) / ((md + (2 * q + 1) as f64) * (md + (2 * q + 2) as f64))
        },
        &TruncationPolicy::default(),
    )?
    .guard(Dd::MAX_CANCELLATION)?;
    Ok(r.value.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(m: f64) -> Order {
        Order::new(m).unwrap()
    }

    #[test]
    fn half_sqrt_pi_constant() {
        let v = HALF_SQRT_PI * HALF_SQRT_PI * 4.0 - Dd::new(std::f64::consts::PI);
        // π itself is only an f64 here; compare to its rounding error
        assert!(v.to_f64().abs() < 2e-16);
        assert!(HALF_SQRT_PI.lo.abs() <= 0.5 * f64::EPSILON * HALF_SQRT_PI.hi);
    }

    #[test]
    fn origin() {
        assert_eq!(e_half_eval(o(0.0), 0.0).unwrap(), 1.0);
        assert_eq!(e_half_eval(o(1.0), 0.0).unwrap(), 1.0);
        assert!((e_half_eval(o(2.0), 0.0).unwrap() - 0.5).abs() < 1e-16);
    }

    #[test]
    fn direct_terms_at_small_argument() {
        // brute force Σ_r (−1)^r Γ(r/2+1) x^r/(r! Γ(m+r+1))
        let (m, x) = (0.5, 0.7f64);
        let mut s = 0.0;
        let mut fact = 1.0;
        for r in 0..40 {
            if r > 0 {
                fact *= r as f64;
            }
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            s += sign * gamma_fn(r as f64 / 2.0 + 1.0).unwrap() * x.powi(r) / (fact * gamma_fn(m + r as f64 + 1.0).unwrap());
        }
        assert!((e_half_eval(o(m), x).unwrap() - s).abs() < 1e-15);
    }

    #[test]
    fn negative_argument_is_all_positive_growth() {
        let a = e_half_eval(o(0.0), -1.0).unwrap();
        let b = e_half_eval(o(0.0), -3.0).unwrap();
        assert!(a > 1.0 && b > a);
    }

    #[test]
    fn complex_path_on_real_axis() {
        for &x in &[-4.0, 0.3, 2.5, 9.0] {
            let c = e_half_eval_complex(o(1.5), Complex64::new(x, 0.0)).unwrap();
            let r = e_half_eval(o(1.5), x).unwrap();
            assert!((c.re - r).abs() < 1e-15 * r.abs().max(1.0));
            assert_eq!(c.im, 0.0);
        }
    }

    #[test]
    fn even_fast_path_matches_complex_path() {
        for &m in &[0.0, 0.5, 1.0, 2.0] {
            for &y in &[0.1, 1.0, 4.0, 12.0, 20.0] {
                let c = e_half_eval_complex(o(m), Complex64::new(0.0, y)).unwrap();
                let f = e_half_imag_re(o(m), y).unwrap();
                assert!((c.re - f).abs() <= 1e-12 * f.abs().max(1.0), "m={m} y={y}");
            }
        }
    }

    #[test]
    fn argument_cap() {
        assert!(e_half_eval(o(0.0), 40.5).is_err());
        assert!(e_half_eval_complex(o(0.0), Complex64::new(0.0, 41.0)).is_err());
    }
}
