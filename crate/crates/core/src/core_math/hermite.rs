/// Two-variable Hermite polynomial
/// `H_n(x, y) = n! Σ_{r ≤ n/2} x^{n−2r} y^r / ((n−2r)! r!)`.
///
/// The integer coefficients `n!/((n−2r)! r!)` are built by recurrence, so the
/// result is exact whenever they and the powers are representable.
pub fn hermite2(n: u32, x: f64, y: f64) -> f64 {
    let n = n as usize;
    let mut coef = 1.0;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for r in 0..=n / 2 {
        let t = coef * x.powi((n - 2 * r) as i32) * y.powi(r as i32);
        let s = sum + t;
        comp += if sum.abs() >= t.abs() { (sum - s) + t } else { (t - s) + sum };
        sum = s;
        let k = (n - 2 * r) as f64;
        coef *= k * (k - 1.0) / (r + 1) as f64;
    }
    sum + comp
}

/// `H_n(x, y)/n!` for every `n ≤ n_max`, avoiding the factorial blow-up.
///
/// Each entry is `Σ_r a_{n−2r} b_r` with `a_k = x^k/k!` and `b_r = y^r/r!`.
pub fn hermite2_scaled_table(n_max: usize, x: f64, y: f64) -> Vec<f64> {
    let mut a = vec![1.0; n_max + 1];
    let mut b = vec![1.0; n_max / 2 + 1];
    for k in 1..=n_max {
        a[k] = a[k - 1] * x / k as f64;
    }
    for r in 1..b.len() {
        b[r] = b[r - 1] * y / r as f64;
    }
    (0..=n_max)
        .map(|n| {
            let mut sum = 0.0;
            let mut comp = 0.0;
            for r in 0..=n / 2 {
                let t = a[n - 2 * r] * b[r];
                let s = sum + t;
                comp += if sum.abs() >= t.abs() { (sum - s) + t } else { (t - s) + sum };
                sum = s;
            }
            sum + comp
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_math::gamma::factorial;

    #[test]
    fn low_orders() {
        assert_eq!(hermite2(0, 3.7, -2.0), 1.0);
        assert_eq!(hermite2(5, 1.5, 0.0), 1.5f64.powi(5));
        assert_eq!(hermite2(3, 1.0, 2.0), 13.0);
        assert_eq!(hermite2(2, 2.0, 3.0), 4.0 + 6.0);
        assert_eq!(hermite2(4, 1.0, 1.0), 1.0 + 12.0 + 12.0);
    }

    #[test]
    fn recurrence() {
        for &(x, y) in &[(0.7, 0.25), (-1.3, 2.0), (2.0, -0.5)] {
            for n in 1..30u32 {
                let lhs = hermite2(n + 1, x, y);
                let rhs = x * hermite2(n, x, y) + 2.0 * n as f64 * y * hermite2(n - 1, x, y);
                // every term of both sides is bounded by the all-positive sum
                let scale = hermite2(n + 1, x.abs(), y.abs());
                assert!((lhs - rhs).abs() <= 1e-12 * scale, "n={n} x={x} y={y}");
            }
        }
    }

    #[test]
    fn scaled_table_matches_direct() {
        let t = hermite2_scaled_table(20, 1.3, 0.125);
        for (n, v) in t.iter().enumerate() {
            let d = hermite2(n as u32, 1.3, 0.125) / factorial(n as u32);
            assert!((v - d).abs() <= 1e-14 * d.abs().max(1e-300), "n={n}");
        }
    }
}
