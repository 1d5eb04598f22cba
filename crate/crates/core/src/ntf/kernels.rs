//! Double-double series kernels. Every term ratio is formed from exact sums
//! and products of the inputs, so the only error left is the final rounding
//! plus the cancellation the alternating sum itself causes.

use crate::core_math::dd::{Dd, DdComplex};
use crate::core_math::gamma::factorial;
use crate::core_math::series::{sum_ratio_series, SeriesResult, Summand, TruncationPolicy};
use crate::error::Result;

#[inline]
fn shifted(m: f64, k: usize) -> Dd {
    Dd::new(m) + k as f64
}

/// `Σ (−1)^r x^{2r}/(m+1)_{2r}`.
pub(crate) fn cos_series(m: f64, x: Dd, policy: &TruncationPolicy) -> Result<SeriesResult<Dd>> {
    let x2 = x.sqr();
    sum_ratio_series(
        Dd::ONE,
        |t, r| -(t * x2) / (shifted(m, 2 * r + 1) * shifted(m, 2 * r + 2)),
        policy,
    )?
    .guard(Dd::MAX_CANCELLATION)
}

/// `Σ (−1)^r x^{2r+1}/(m+1)_{2r+1}`.
pub(crate) fn sin_series(m: f64, x: Dd, policy: &TruncationPolicy) -> Result<SeriesResult<Dd>> {
    let x2 = x.sqr();
    sum_ratio_series(
        x / shifted(m, 1),
        |t, r| -(t * x2) / (shifted(m, 2 * r + 2) * shifted(m, 2 * r + 3)),
        policy,
    )?
    .guard(Dd::MAX_CANCELLATION)
}

/// `Σ (it)^r/(1+m)_r`.
pub(crate) fn exp_series(m: f64, t: Dd, policy: &TruncationPolicy) -> Result<SeriesResult<DdComplex>> {
    sum_ratio_series(DdComplex::ONE, |u, r| (u.mul_i() * t) / shifted(m, r + 1), policy)?
        .guard(DdComplex::MAX_CANCELLATION)
}

/// k-th derivative of the even (`odd = false`) or odd part of `exp_m(ix)`,
/// differentiated term by term:
/// `Σ_{n ≥ k} c_n n!/(n−k)! x^{n−k}` over `n` of the chosen parity.
pub(crate) fn termwise_deriv(
    m: f64,
    k: u32,
    x: Dd,
    odd: bool,
    policy: &TruncationPolicy,
) -> Result<SeriesResult<Dd>> {
    let k = k as usize;
    let parity = usize::from(odd);
    let n0 = if k % 2 == parity { k } else { k + 1 };
    let mut first = if (n0 / 2) % 2 == 0 { Dd::ONE } else { -Dd::ONE };
    for j in 0..k {
        first *= (n0 - j) as f64;
    }
    if n0 > k {
        first *= x;
    }
    for j in 0..n0 {
        first = first / shifted(m, j + 1);
    }
    let x2 = x.sqr();
    sum_ratio_series(
        first,
        |t, i| {
            let n = n0 + 2 * i;
            let falling = Dd::new(((n + 2) * (n + 1)) as f64) / ((n + 2 - k) * (n + 1 - k)) as f64;
            -(t * x2 * falling) / (shifted(m, n + 1) * shifted(m, n + 2))
        },
        policy,
    )?
    .guard(Dd::MAX_CANCELLATION)
}

/// `j_{m,α}(x) = Σ (−1)^r x^{2r} (1+r)_α/(1+m)_{2(r+α)}`.
pub(crate) fn j_series(m: f64, alpha: u32, x: Dd, policy: &TruncationPolicy) -> Result<SeriesResult<Dd>> {
    let a = alpha as usize;
    let mut first = Dd::new(factorial(alpha));
    for j in 0..2 * a {
        first = first / shifted(m, j + 1);
    }
    let x2 = x.sqr();
    sum_ratio_series(
        first,
        |t, r| {
            let growth = Dd::new((r + 1 + a) as f64) / ((r + 1) as f64);
            -(t * x2 * growth) / (shifted(m, 2 * r + 2 * a + 1) * shifted(m, 2 * r + 2 * a + 2))
        },
        policy,
    )?
    .guard(Dd::MAX_CANCELLATION)
}

/// `cos_m^{(k)}(x) = (−1)^k k! Σ_l (−1)^l (2x)^{k−2l}/((k−2l)! l!) · j_{m,k−l}(x)`.
pub(crate) fn bessel_deriv(m: f64, k: u32, x: Dd, policy: &TruncationPolicy) -> Result<Dd> {
    let two_x = x * 2.0;
    let mut acc = Dd::ZERO;
    for l in 0..=k / 2 {
        let p = k - 2 * l;
        let j = j_series(m, k - l, x, policy)?.value;
        let mut c = two_x.powi(p) / (factorial(p) * factorial(l));
        if l % 2 == 1 {
            c = -c;
        }
        acc += c * j;
    }
    let scale = if k % 2 == 1 { -factorial(k) } else { factorial(k) };
    Ok(acc * scale)
}
