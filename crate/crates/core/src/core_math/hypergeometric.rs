use super::dd::Dd;
use super::gamma::is_nonpositive_integer;
use super::series::{sum_ratio_series, SeriesResult, Summand, TruncationPolicy};
use crate::error::{Error, Result};

/// `₁F₂(1; b1, b2; z) = Σ_n zⁿ / ((b1)_n (b2)_n)`.
///
/// Terms are formed and summed in double-double, so the result is the
/// function at the given (rounded) arguments even when the alternating sum
/// cancels many digits.
pub fn hyp1f2(b1: f64, b2: f64, z: f64, policy: &TruncationPolicy) -> Result<SeriesResult<f64>> {
    Ok(hyp1f2_dd(Dd::new(b1), Dd::new(b2), Dd::new(z), policy)?.map(Dd::to_f64))
}

/// Double-double variant with the cancellation guard applied.
pub(crate) fn hyp1f2_dd(
    b1: Dd,
    b2: Dd,
    z: Dd,
    policy: &TruncationPolicy,
) -> Result<SeriesResult<Dd>> {
    for b in [b1, b2] {
        let v = b.to_f64();
        if is_nonpositive_integer(b.hi) && b.lo == 0.0 {
            return Err(Error::Pole(v));
        }
        if !v.is_finite() {
            return Err(Error::Domain(format!("hyp1f2 parameter {v}")));
        }
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("hyp1f2 argument {}", z.to_f64())));
    }
    sum_ratio_series(
        Dd::ONE,
        |t, n| {
            let n = n as f64;
            t * z / ((b1 + n) * (b2 + n))
        },
        policy,
    )?
    .guard(Dd::MAX_CANCELLATION)
}
