use crate::core_math::dd::Dd;
use crate::core_math::gamma::ln_gamma;
use crate::core_math::series::{sum_ratio_series, Neumaier, Summand, TruncationPolicy};
use crate::error::Result;
use crate::ntf::{check_finite, Order};

/// Up to this `x²` the alternating series is summed directly.
const DIRECT_LIMIT: f64 = 8.0;

/// Gaussian-like `e_m(x) = Σ_r (−1)^r x^{2r}/(1+m)_r = ₁F₁(1; m+1; −x²)`, with
/// `e_0(x) = e^{−x²}`.
///
/// Small `x²` uses the series itself. Larger `x²` uses Kummer's transformation
/// `e^{−x²} [1 + Σ_{r≥1} m/(m+r) · x^{2r}/r!]`, whose terms are all of one sign
/// for `m > 0`, and far out the asymptotic expansion of the bracketed sum.
pub fn e_m_eval(m: Order, x: f64) -> Result<f64> {
    check_finite(x)?;
    let m = m.value();
    let lambda = x * x;
    if lambda <= DIRECT_LIMIT {
        let l = Dd::new(x).sqr();
        let r = sum_ratio_series(Dd::ONE, |t, r| -(t * l) / (Dd::new(m) + (r + 1) as f64), &TruncationPolicy::default())?
            .guard(Dd::MAX_CANCELLATION)?;
        return Ok(r.value.to_f64());
    }
    let tail = if lambda > 60.0 + 2.0 * m.abs() {
        asymptotic_tail(m, lambda).map_or_else(|| poisson_tail(m, lambda), Ok)?
    } else {
        poisson_tail(m, lambda)?
    };
    Ok((-lambda).exp() + tail)
}

/// `Σ_{r≥1} m/(m+r) · e^{−λ} λ^r/r!`.
///
/// The Poisson weights are built up from `e^{−λ}` while that is representable,
/// otherwise outward from the mode.
fn poisson_tail(m: f64, lambda: f64) -> Result<f64> {
    if m == 0.0 {
        return Ok(0.0);
    }
    let mut acc = Neumaier::default();
    if lambda < 700.0 {
        let mut p = (-lambda).exp();
        let mut peak = p;
        let mut r = 0.0;
        loop {
            r += 1.0;
            p *= lambda / r;
            peak = peak.max(p);
            acc.add(m / (m + r) * p);
            if r > lambda && p < 1e-18 * peak {
                return Ok(acc.value());
            }
        }
    }
    let mode = lambda.floor();
    let p_mode = (mode * lambda.ln() - lambda - ln_gamma(mode + 1.0)?).exp();
    let mut p = p_mode;
    let mut r = mode;
    while r >= 1.0 && p >= 1e-18 * p_mode {
        acc.add(m / (m + r) * p);
        p *= r / lambda;
        r -= 1.0;
    }
    let mut p = p_mode;
    let mut r = mode;
    while p >= 1e-18 * p_mode {
        p *= lambda / (r + 1.0);
        r += 1.0;
        acc.add(m / (m + r) * p);
    }
    Ok(acc.value())
}

/// `(m/λ) Σ_k (1−m)_k λ^{−k}`, up to an exponentially small remainder;
/// `None` when the terms stop shrinking before reaching full precision.
fn asymptotic_tail(m: f64, lambda: f64) -> Option<f64> {
    let mut term = 1.0f64;
    let mut acc = Neumaier::default();
    for k in 0..400 {
        acc.add(term);
        let next = term * (1.0 - m + k as f64) / lambda;
        if next.abs() <= 1e-17 * acc.value().abs() {
            return Some(m / lambda * acc.value());
        }
        if next.abs() > term.abs() {
            return None;
        }
        term = next;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(m: f64) -> Order {
        Order::new(m).unwrap()
    }

    #[test]
    fn gaussian_member() {
        for i in 0..=100 {
            let x = -5.0 + 0.1 * i as f64;
            let e = e_m_eval(o(0.0), x).unwrap();
            let g = (-x * x).exp();
            assert!((e - g).abs() <= 1e-13 * g.max(1e-300), "{x}: {e} {g}");
        }
        assert_eq!(e_m_eval(o(0.0), 40.0).unwrap(), (-1600f64).exp());
    }

    #[test]
    fn origin_and_unit_point() {
        assert_eq!(e_m_eval(o(2.5), 0.0).unwrap(), 1.0);
        assert!((e_m_eval(o(0.0), 1.0).unwrap() - (-1f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn m_one_closed_form() {
        // e_1(x) = (1 − e^{−x²})/x²
        for &x in &[0.5f64, 2.0, 2.9, 3.5, 7.0, 9.0, 30.0] {
            let want = -(-x * x).exp_m1() / (x * x);
            let got = e_m_eval(o(1.0), x).unwrap();
            assert!((got - want).abs() < 1e-14 * want, "{x}: {got} {want}");
        }
    }

    #[test]
    fn branches_agree_at_their_borders() {
        for &m in &[-0.5, 0.7, 3.0] {
            let x = DIRECT_LIMIT.sqrt();
            let direct = e_m_eval(o(m), x).unwrap();
            let kummer = (-x * x).exp() + poisson_tail(m, x * x).unwrap();
            assert!((direct - kummer).abs() < 1e-14, "m={m}");
            let l: f64 = 61.0 + 2.0 * m.abs();
            let a = asymptotic_tail(m, l).unwrap();
            let b = poisson_tail(m, l).unwrap();
            assert!((a - b).abs() < 1e-13 * b.abs(), "m={m} {a} {b}");
        }
    }
}
