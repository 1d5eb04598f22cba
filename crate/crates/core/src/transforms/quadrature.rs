//! Improper integrals on top of the adaptive Gauss–Kronrod driver.

use std::cell::RefCell;

use crate::core_math::gauss_kronrod::{integrate_breakpoints, AdaptiveLimits};
use crate::error::{domain, Error, Result};

/// Treatment of infinite limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailMap {
    /// `x = t/(1−t²)` on the line and `u = a + t/(1−t)` on a half line.
    /// Suited to tails that decay at least like `1/x²` without oscillating.
    Rational,
    /// Direct quadrature out to `cutoff`, then `averaging` rounds of averaging
    /// the integrand with its shift by `half_period`, which cancels an
    /// oscillation of that half period. The averaged remainder is integrated
    /// over 256 half periods and closed by a power-law fit, so the part of the
    /// integrand that does not oscillate must decay faster than `1/x`.
    ///
    /// Conditionally convergent tails converge to their value. Tails that
    /// oscillate with algebraically growing amplitude are summed in the same
    /// regularized sense as an Abel limit.
    Oscillatory { half_period: f64, cutoff: f64, averaging: u32 },
}

impl TailMap {
    /// Averaging for `e^{±ix}`-type tails: half period π, cutoff 30, eight rounds.
    pub fn oscillatory(half_period: f64) -> TailMap {
        TailMap::Oscillatory { half_period, cutoff: 30.0, averaging: 8 }
    }

    fn validate(self) -> Result<TailMap> {
        if let TailMap::Oscillatory { half_period, cutoff, averaging } = self {
            if !(half_period.is_finite() && half_period > 0.0) {
                return domain(format!("half_period must be positive, got {half_period}"));
            }
            if !(cutoff.is_finite() && cutoff >= 0.0) {
                return domain(format!("cutoff must be finite and non-negative, got {cutoff}"));
            }
            if !(1..=30).contains(&averaging) {
                return domain(format!("averaging must lie in 1..=30, got {averaging}"));
            }
        }
        Ok(self)
    }
}

/// Tolerances, depth cap and tail treatment of one integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    abs_tol: f64,
    rel_tol: f64,
    max_depth: u32,
    tail_map: TailMap,
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_depth: u32, tail_map: TailMap) -> Result<QuadratureSpec> {
        if !(abs_tol.is_finite() && abs_tol > 0.0) {
            return domain(format!("abs_tol must be positive, got {abs_tol}"));
        }
        if !(rel_tol.is_finite() && rel_tol > 0.0) {
            return domain(format!("rel_tol must be positive, got {rel_tol}"));
        }
        if max_depth == 0 {
            return domain("max_depth must be at least 1");
        }
        Ok(QuadratureSpec { abs_tol, rel_tol, max_depth, tail_map: tail_map.validate()? })
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }
    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }
    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }
    pub fn tail_map(&self) -> TailMap {
        self.tail_map
    }

    pub fn with_tail_map(self, tail_map: TailMap) -> Result<QuadratureSpec> {
        Self::new(self.abs_tol, self.rel_tol, self.max_depth, tail_map)
    }

    pub fn with_tolerances(self, abs_tol: f64, rel_tol: f64) -> Result<QuadratureSpec> {
        Self::new(abs_tol, rel_tol, self.max_depth, self.tail_map)
    }

    fn limits(&self, share: usize) -> AdaptiveLimits {
        AdaptiveLimits {
            abs_tol: self.abs_tol / share as f64,
            rel_tol: self.rel_tol,
            max_depth: self.max_depth,
            ..AdaptiveLimits::default()
        }
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { abs_tol: 1e-10, rel_tol: 1e-10, max_depth: 60, tail_map: TailMap::Rational }
    }
}

/// Adapts a fallible integrand to the driver: the first error is kept and
/// the integral is abandoned through a NaN sample.
struct Captured<F> {
    f: F,
    error: RefCell<Option<Error>>,
}

impl<F: Fn(f64) -> Result<f64>> Captured<F> {
    fn new(f: F) -> Self {
        Captured { f, error: RefCell::new(None) }
    }

    fn call(&self, x: f64) -> f64 {
        match (self.f)(x) {
            Ok(v) => v,
            Err(e) => {
                self.error.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        }
    }

    fn finish(&self, r: Result<f64>) -> Result<f64> {
        match self.error.borrow_mut().take() {
            Some(e) => Err(e),
            None => r,
        }
    }
}

fn adaptive(f: impl Fn(f64) -> f64, points: &[f64], lim: &AdaptiveLimits) -> Result<f64> {
    integrate_breakpoints(f, points, lim).map(|e| e.value)
}

/// `∫_a^∞ g` under the rational map.
fn rational_half_line(g: &dyn Fn(f64) -> f64, a: f64, lim: &AdaptiveLimits) -> Result<f64> {
    adaptive(
        |t| {
            let s = 1.0 - t;
            g(a + t / s) / (s * s)
        },
        &[0.0, 1.0],
        lim,
    )
}

/// Averaged remainder is integrated out to this many half periods.
const HORIZON_HALF_PERIODS: f64 = 256.0;

/// `∫_a^∞ g` by half-period averaging beyond `a`.
///
/// With `S g(x) = (g(x) + g(x+P))/2`, `∫_a^∞ g = ∫_a^∞ S g + ½∫_a^{a+P} g`;
/// `n` rounds leave `S^n g`, in which an oscillation of half period `P` with
/// algebraic amplitude is damped by `n` derivatives. `S^n g` is integrated to
/// the horizon `X = a + 256P`. Evaluating it much further would only expose
/// the `ulp(x)` phase error of the shifted arguments. Beyond `X` the averaged
/// integrand is taken as a power law in `x + nP/2`, the centre of the
/// averaging stencil, fitted at `X` and one doubling further out.
fn averaged_tail(g: &dyn Fn(f64) -> f64, a: f64, half_period: f64, rounds: u32, spec: &QuadratureSpec) -> Result<f64> {
    let n = rounds as usize;
    let lim = spec.limits(n + 3);
    // W_j = ∫ over the j-th half period
    let mut windows = Vec::with_capacity(n);
    for j in 0..n {
        let lo = a + j as f64 * half_period;
        windows.push(adaptive(g, &[lo, lo + half_period], &lim)?);
    }
    // Σ_{k<n} ½ ∫_a^{a+P} S^k g, with ∫_a^{a+P} S^k g = 2^{−k} Σ_j C(k,j) W_j
    let mut head = 0.0;
    let mut binom = vec![1.0f64];
    for k in 0..n {
        let mut s = 0.0;
        for (j, &c) in binom.iter().enumerate() {
            s += c * windows[j];
        }
        head += 0.5 * s / 2f64.powi(k as i32);
        let mut next = vec![1.0; k + 2];
        for j in 1..=k {
            next[j] = binom[j - 1] + binom[j];
        }
        binom = next;
    }
    // S^n g(x) = 2^{−n} Σ_j C(n,j) g(x + jP), with the same sum over |g|
    let scale = 2f64.powi(-(n as i32));
    let averaged_with_size = |x: f64| {
        let (mut s, mut size) = (0.0, 0.0);
        for (j, &c) in binom.iter().enumerate() {
            let v = g(x + j as f64 * half_period);
            s += c * v;
            size += c * v.abs();
        }
        (s * scale, size * scale)
    };
    let averaged = |x: f64| averaged_with_size(x).0;
    let horizon = a + HORIZON_HALF_PERIODS * half_period;
    let breaks: Vec<f64> = (0..=8).map(|k| a + (horizon - a) * k as f64 / 8.0).collect();
    let body = adaptive(averaged, &breaks, &lim)?;
    let span = n as f64 * half_period;
    Ok(head + body + power_law_tail(&averaged_with_size, horizon, 0.5 * span, span, &lim)?)
}

/// `∫_X^∞ v` for `v(x) ≈ C (x+s)^{−p}`, `p > 1`, from `v` at `x+s = u` and `2u`.
///
/// `v` also returns the size of the terms it cancelled. A value within the
/// rounding of the shifted phases (`ulp(x)` times that size) carries no
/// information, and when both samples are at that level the tail is zero.
#[allow(clippy::neg_cmp_op_on_partial_ord)] // a NaN ratio is an error
fn power_law_tail(v: &dyn Fn(f64) -> (f64, f64), x: f64, s: f64, span: f64, lim: &AdaptiveLimits) -> Result<f64> {
    let u = x + s;
    let x2 = 2.0 * u - s;
    let ((v1, size1), (v2, size2)) = (v(x), v(x2));
    if !(v1.is_finite() && v2.is_finite()) {
        return Err(Error::Quadrature("integrand produced a non-finite value".into()));
    }
    let floor = |at: f64, size: f64| 64.0 * (at + span) * f64::EPSILON * size;
    if v1.abs() <= floor(x, size1) && v2.abs() <= floor(x2, size2) {
        return Ok(0.0);
    }
    // a tail below the tolerance even for p = 2 is dropped
    if u * v1.abs() <= lim.abs_tol && 2.0 * u * v2.abs() <= lim.abs_tol {
        return Ok(0.0);
    }
    let ratio = v1 / v2;
    if !(ratio > 2.0) {
        return Err(Error::Quadrature(format!(
            "averaged integrand does not decay faster than 1/x beyond {x:.1} (ratio {ratio:.3} per doubling)"
        )));
    }
    let p = ratio.log2();
    Ok(u * v1 / (p - 1.0))
}

fn full_line(g: &dyn Fn(f64) -> f64, spec: &QuadratureSpec) -> Result<f64> {
    match spec.tail_map {
        TailMap::Rational => adaptive(
            |t| {
                let d = 1.0 - t * t;
                g(t / d) * (1.0 + t * t) / (d * d)
            },
            &[-1.0, 0.0, 1.0],
            &spec.limits(1),
        ),
        TailMap::Oscillatory { half_period, cutoff, averaging } => {
            let middle = adaptive(g, &[-cutoff, 0.0, cutoff], &spec.limits(3))?;
            let right = averaged_tail(g, cutoff, half_period, averaging, spec)?;
            let left = averaged_tail(&|x| g(-x), cutoff, half_period, averaging, spec)?;
            Ok(left + middle + right)
        }
    }
}

fn half_line(g: &dyn Fn(f64) -> f64, a: f64, spec: &QuadratureSpec) -> Result<f64> {
    match spec.tail_map {
        TailMap::Rational => rational_half_line(g, a, &spec.limits(1)),
        TailMap::Oscillatory { half_period, cutoff, averaging } => {
            let start = cutoff.max(a);
            let head = if start > a { adaptive(g, &[a, start], &spec.limits(2))? } else { 0.0 };
            Ok(head + averaged_tail(g, start, half_period, averaging, spec)?)
        }
    }
}

/// `∫_{−∞}^{∞} f(x) dx` with a fallible integrand.
pub fn try_integrate_improper(f: impl Fn(f64) -> Result<f64>, quad: &QuadratureSpec) -> Result<f64> {
    let c = Captured::new(f);
    let r = full_line(&|x| c.call(x), quad);
    c.finish(r)
}

/// `∫_{−∞}^{∞} f(x) dx` by adaptive Gauss–Kronrod quadrature after the
/// tail treatment chosen in `quad`. The estimated error is at most
/// `max(abs_tol, rel_tol·|result|)` per piece.
pub fn integrate_improper(f: impl Fn(f64) -> f64, quad: &QuadratureSpec) -> Result<f64> {
    full_line(&f, quad)
}

/// `∫_a^∞ f(x) dx` with a fallible integrand.
pub fn try_integrate_half_line(f: impl Fn(f64) -> Result<f64>, a: f64, quad: &QuadratureSpec) -> Result<f64> {
    if !a.is_finite() {
        return domain(format!("lower limit must be finite, got {a}"));
    }
    let c = Captured::new(f);
    let r = half_line(&|x| c.call(x), a, quad);
    c.finish(r)
}

/// `∫_a^∞ f(x) dx`.
pub fn integrate_half_line(f: impl Fn(f64) -> f64, a: f64, quad: &QuadratureSpec) -> Result<f64> {
    try_integrate_half_line(|x| Ok(f(x)), a, quad)
}

/// `∫_a^b f(x) dx` with a fallible integrand.
pub fn try_integrate_finite(f: impl Fn(f64) -> Result<f64>, a: f64, b: f64, quad: &QuadratureSpec) -> Result<f64> {
    let c = Captured::new(f);
    let r = adaptive(|x| c.call(x), &[a, b], &quad.limits(1));
    c.finish(r)
}

/// `∫_a^b f(x) dx`.
pub fn integrate_finite(f: impl Fn(f64) -> f64, a: f64, b: f64, quad: &QuadratureSpec) -> Result<f64> {
    adaptive(f, &[a, b], &quad.limits(1))
}
