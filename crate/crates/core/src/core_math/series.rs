//! Compensated summation of term sequences with a relative stop rule.

use num_complex::Complex64;

use super::dd::{Dd, DdComplex};
use crate::error::{Error, Result};

/// Stop rule for [`sum_series`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    rel_tol: f64,
    max_terms: usize,
    consecutive_small: usize,
}

impl TruncationPolicy {
    pub fn new(rel_tol: f64, max_terms: usize, consecutive_small: usize) -> Result<Self> {
        if !(rel_tol.is_finite() && rel_tol > 0.0) {
            return Err(Error::Domain(format!("rel_tol must be positive, got {rel_tol}")));
        }
        if rel_tol < f64::EPSILON {
            return Err(Error::Domain(format!("rel_tol {rel_tol} below working precision")));
        }
        if consecutive_small == 0 || max_terms < consecutive_small {
            return Err(Error::Domain(format!(
                "need max_terms ≥ consecutive_small ≥ 1, got {max_terms} and {consecutive_small}"
            )));
        }
        Ok(TruncationPolicy { rel_tol, max_terms, consecutive_small })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }
    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
    pub fn consecutive_small(&self) -> usize {
        self.consecutive_small
    }

    /// Runs the sum down to double-double resolution. Used where results are
    /// differenced and truncation must not depend on the argument.
    pub fn dd_full() -> Self {
        TruncationPolicy { rel_tol: 1e-32, max_terms: 2000, consecutive_small: 2 }
    }

    /// The same cap with a different tolerance.
    pub fn with_rel_tol(self, rel_tol: f64) -> Result<Self> {
        Self::new(rel_tol, self.max_terms, self.consecutive_small)
    }

    /// The same tolerance with a term cap of at least `max_terms`.
    pub fn with_min_terms(self, max_terms: usize) -> Self {
        TruncationPolicy { max_terms: self.max_terms.max(max_terms), ..self }
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy { rel_tol: 1e-15, max_terms: 500, consecutive_small: 3 }
    }
}

/// Outcome of a summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult<T> {
    pub value: T,
    pub terms_used: usize,
    pub converged: bool,
    /// `log10(Σ|t| / |Σt|)`, clamped to ≥ 0; infinite for an exact zero sum of
    /// nonzero terms.
    pub cancellation_digits: f64,
}

impl<T> SeriesResult<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SeriesResult<U> {
        SeriesResult {
            value: f(self.value),
            terms_used: self.terms_used,
            converged: self.converged,
            cancellation_digits: self.cancellation_digits,
        }
    }

    /// Refuses the result when more than `limit` digits cancelled.
    pub fn guard(self, limit: f64) -> Result<Self> {
        if self.cancellation_digits > limit {
            Err(Error::Cancellation { digits: self.cancellation_digits, limit })
        } else {
            Ok(self)
        }
    }
}

/// Digits an `f64` evaluation may lose and still keep four good digits.
pub const MAX_CANCELLATION_F64: f64 = 12.0;
/// Same allowance for double-double accumulation.
pub const MAX_CANCELLATION_DD: f64 = 28.0;

/// A scalar the engine can accumulate with compensation.
pub trait Summand: Copy {
    type Acc: Default;
    fn accumulate(acc: &mut Self::Acc, t: Self);
    fn total(acc: &Self::Acc) -> Self;
    fn magnitude(self) -> f64;
    /// Cancellation allowance appropriate to the precision of the type.
    const MAX_CANCELLATION: f64;
}

/// Neumaier running sum.
#[derive(Debug, Default, Clone, Copy)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    #[inline]
    pub fn add(&mut self, t: f64) {
        let s = self.sum + t;
        self.comp += if self.sum.abs() >= t.abs() { (self.sum - s) + t } else { (t - s) + self.sum };
        self.sum = s;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl Summand for f64 {
    type Acc = Neumaier;
    fn accumulate(acc: &mut Neumaier, t: f64) {
        acc.add(t);
    }
    fn total(acc: &Neumaier) -> f64 {
        acc.value()
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
    const MAX_CANCELLATION: f64 = MAX_CANCELLATION_F64;
}

impl Summand for Complex64 {
    type Acc = (Neumaier, Neumaier);
    fn accumulate(acc: &mut Self::Acc, t: Complex64) {
        acc.0.add(t.re);
        acc.1.add(t.im);
    }
    fn total(acc: &Self::Acc) -> Complex64 {
        Complex64::new(acc.0.value(), acc.1.value())
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
    const MAX_CANCELLATION: f64 = MAX_CANCELLATION_F64;
}

impl Summand for Dd {
    type Acc = Dd;
    fn accumulate(acc: &mut Dd, t: Dd) {
        *acc += t;
    }
    fn total(acc: &Dd) -> Dd {
        *acc
    }
    fn magnitude(self) -> f64 {
        self.hi.abs()
    }
    const MAX_CANCELLATION: f64 = MAX_CANCELLATION_DD;
}

impl Summand for DdComplex {
    type Acc = DdComplex;
    fn accumulate(acc: &mut DdComplex, t: DdComplex) {
        *acc = *acc + t;
    }
    fn total(acc: &DdComplex) -> DdComplex {
        *acc
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
    const MAX_CANCELLATION: f64 = MAX_CANCELLATION_DD;
}

fn cancellation(abs_sum: f64, sum_mag: f64) -> f64 {
    if abs_sum == 0.0 {
        0.0
    } else if sum_mag == 0.0 {
        f64::INFINITY
    } else {
        (abs_sum / sum_mag).log10().max(0.0)
    }
}

/// Sums `term(0), term(1), …` and reports the result whether or not the
/// stop rule fired.
pub fn sum_series_partial<T: Summand>(
    mut term: impl FnMut(usize) -> T,
    policy: &TruncationPolicy,
) -> SeriesResult<T> {
    let mut acc = T::Acc::default();
    let mut abs_sum = 0.0;
    let mut small = 0;
    for n in 0..policy.max_terms {
        let t = term(n);
        T::accumulate(&mut acc, t);
        let mag = t.magnitude();
        abs_sum += mag;
        let partial = T::total(&acc).magnitude();
        if mag <= policy.rel_tol * partial || mag == 0.0 {
            small += 1;
        } else {
            small = 0;
        }
        if small >= policy.consecutive_small {
            let value = T::total(&acc);
            return SeriesResult {
                value,
                terms_used: n + 1,
                converged: true,
                cancellation_digits: cancellation(abs_sum, value.magnitude()),
            };
        }
    }
    let value = T::total(&acc);
    SeriesResult {
        value,
        terms_used: policy.max_terms,
        converged: false,
        cancellation_digits: cancellation(abs_sum, value.magnitude()),
    }
}

/// Compensated summation under `policy`; a non-convergence error when the
/// term cap is reached first.
///
/// The stop rule fires once `consecutive_small` successive terms satisfy
/// `|t| ≤ rel_tol·|partial sum|`.
pub fn sum_series<T: Summand>(
    term: impl FnMut(usize) -> T,
    policy: &TruncationPolicy,
) -> Result<SeriesResult<T>> {
    let r = sum_series_partial(term, policy);
    if r.converged {
        Ok(r)
    } else {
        Err(Error::NonConvergence { terms: r.terms_used, partial: r.value.magnitude() })
    }
}

/// Sums a sequence produced by a ratio recurrence `t_{n+1} = t_n·ratio(n)`.
pub fn sum_ratio_series<T, R>(
    first: T,
    mut step: impl FnMut(T, usize) -> R,
    policy: &TruncationPolicy,
) -> Result<SeriesResult<T>>
where
    T: Summand,
    R: Into<T>,
{
    let mut t = first;
    sum_series(
        |n| {
            if n > 0 {
                t = step(t, n - 1).into();
            }
            t
        },
        policy,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_generator_converges_to_zero() {
        let r = sum_series(|_| 0.0f64, &TruncationPolicy::default()).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.converged);
        assert_eq!(r.cancellation_digits, 0.0);
    }

    #[test]
    fn cosine_series_at_one() {
        let policy = TruncationPolicy::default();
        let r = sum_ratio_series(
            1.0f64,
            |t, n| -t / (((2 * n + 1) * (2 * n + 2)) as f64),
            &policy,
        )
        .unwrap();
        assert!((r.value - 1f64.cos()).abs() < 1e-16);
        assert!(r.cancellation_digits > 0.0 && r.cancellation_digits < 1.0);
    }

    #[test]
    fn constant_generator_does_not_converge() {
        let e = sum_series(|_| 1.0f64, &TruncationPolicy::default()).unwrap_err();
        assert!(matches!(e, Error::NonConvergence { terms: 500, .. }));
    }

    #[test]
    fn finite_series_is_exact() {
        // 1/2 + 1/4 + … + 2^-40, then zeros
        let r = sum_series(
            |n| if n < 40 { 0.5f64.powi(n as i32 + 1) } else { 0.0 },
            &TruncationPolicy::default(),
        )
        .unwrap();
        assert_eq!(r.value, 1.0 - 0.5f64.powi(40));
    }

    #[test]
    fn total_cancellation_is_infinite() {
        let r = sum_series(
            |n| match n {
                0 => 1.0f64,
                1 => -1.0,
                _ => 0.0,
            },
            &TruncationPolicy::default(),
        )
        .unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.cancellation_digits.is_infinite());
        assert!(r.guard(12.0).is_err());
    }

    #[test]
    fn policy_validation() {
        assert!(TruncationPolicy::new(0.0, 10, 1).is_err());
        assert!(TruncationPolicy::new(1e-15, 2, 3).is_err());
        assert!(TruncationPolicy::new(1e-15, 3, 0).is_err());
        assert!(TruncationPolicy::new(1e-17, 30, 3).is_err());
        assert!(TruncationPolicy::new(f64::EPSILON, 30, 3).is_ok());
    }

    #[test]
    fn dd_summation_resolves_below_f64() {
        let r = sum_series(
            |n| match n {
                0 => Dd::new(1.0),
                1 => Dd::new(1e-20),
                2 => Dd::new(-1.0),
                _ => Dd::ZERO,
            },
            &TruncationPolicy::default(),
        )
        .unwrap();
        assert_eq!(r.value.to_f64(), 1e-20);
        assert!((r.cancellation_digits - (2e20f64).log10()).abs() < 1e-9);
    }
}
