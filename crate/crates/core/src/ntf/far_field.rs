//! `d^k/dx^k exp_m(ix)` for large `|x|`.
//!
//! For `m > 0`, `exp_m(ix) = m ∫₀¹ (1−t)^{m−1} e^{ixt} dt`. Rotating the contour
//! from `t = 1` into the upper half plane splits the k-th derivative into an
//! oscillatory endpoint part and a Laplace-type remainder:
//!
//! ```text
//! Osc_k(z) = z^{−m} e^{i(z − mπ/2)} Σ_j C(k,j) i^{k−j} (−1/z)^j c_j,   c_j = Γ(m+1)·(m)_j
//! Alg_k(y) = m (i/y) (−1/y)^k ∫₀^∞ τ^k (1 − iτ/y)^{m−1} e^{−τ} dτ
//! ```
//!
//! Both continue analytically to `−1 < m ≤ 0`. The split is exact; the only
//! approximation is the 64-point Gauss–Laguerre rule for the remainder, which
//! is accurate to ~1e−13 relative for `y ≥ 15` and `m < y/2.5`.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::core_math::gamma::{cos_pi, ln_gamma, sin_pi};
use crate::core_math::gauss_rules::{gauss_laguerre, GaussRule};

/// Beyond this |x| the evaluators switch from the power series.
pub(crate) const FAR_FIELD_START: f64 = 30.0;

const LAGUERRE_NODES: usize = 64;

/// Whether `(m, x)` is inside the far-field region. Large `m` keeps the
/// power series, whose cancellation shrinks as `m` grows.
pub(crate) fn in_far_field(m: f64, x: f64) -> bool {
    x.abs() > FAR_FIELD_START && m < x.abs() / 2.5
}

fn laguerre() -> &'static GaussRule {
    static RULE: OnceLock<GaussRule> = OnceLock::new();
    RULE.get_or_init(|| gauss_laguerre(LAGUERRE_NODES, 0.0))
}

/// `(m)_j` for `j = 0..=k`; the common factor `Γ(m+1)` is applied with the power of `z`.
fn endpoint_coefficients(m: f64, k: u32) -> Vec<f64> {
    let mut c = Vec::with_capacity(k as usize + 1);
    let mut v = 1.0;
    for j in 0..=k {
        c.push(v);
        v *= m + j as f64;
    }
    c
}

/// Oscillatory endpoint part at complex `z` (principal branch, `Re z > 0`).
pub(crate) fn osc(m: f64, k: u32, z: Complex64) -> Complex64 {
    let c = endpoint_coefficients(m, k);
    let lg = ln_gamma(m + 1.0).unwrap_or(f64::INFINITY);
    // Γ(m+1) z^{−m} e^{iz}
    let amp = (Complex64::new(lg, 0.0) - z.ln() * m + Complex64::i() * z).exp();
    let phase = Complex64::new(cos_pi(0.5 * m), -sin_pi(0.5 * m));
    let inv = -z.inv();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut inv_pow = Complex64::new(1.0, 0.0);
    let mut binom = 1.0;
    for j in 0..=k {
        sum += i_pow(k - j) * inv_pow * (binom * c[j as usize]);
        inv_pow *= inv;
        binom = binom * (k - j) as f64 / (j + 1) as f64;
    }
    amp * phase * sum
}

/// Laplace-type part at real `y > 0`.
pub(crate) fn alg(m: f64, k: u32, y: f64) -> Complex64 {
    alg_upto(m, k, y)[k as usize]
}

/// `Alg_0(y) ..= Alg_k(y)`, sharing the kernel evaluations.
pub(crate) fn alg_upto(m: f64, k: u32, y: f64) -> Vec<Complex64> {
    let mut acc = vec![Complex64::new(0.0, 0.0); k as usize + 1];
    if m == 0.0 {
        return acc;
    }
    let rule = laguerre();
    for (&tau, &w) in rule.nodes.iter().zip(rule.weights.iter()) {
        let mut v = Complex64::new(1.0, -tau / y).powf(m - 1.0) * w;
        for a in acc.iter_mut() {
            *a += v;
            v *= tau;
        }
    }
    let mut pre = Complex64::new(0.0, m / y);
    for a in acc.iter_mut() {
        *a *= pre;
        pre *= -1.0 / y;
    }
    acc
}

/// `d^k/dx^k exp_m(ix)` for `|x|` in the far field.
pub(crate) fn exp_deriv(m: f64, k: u32, x: f64) -> Complex64 {
    if x < 0.0 {
        let v = exp_deriv(m, k, -x).conj();
        return if k % 2 == 1 { -v } else { v };
    }
    osc(m, k, Complex64::new(x, 0.0)) + alg(m, k, x)
}

fn i_pow(n: u32) -> Complex64 {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}
