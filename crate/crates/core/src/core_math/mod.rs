//! Foundation numerics shared by every evaluator.

pub mod dd;
pub mod gamma;
pub mod gauss_kronrod;
pub mod gauss_rules;
pub mod hermite;
pub mod hypergeometric;
pub mod series;

pub use gamma::{factorial, gamma_fn, ln_gamma, pochhammer};
pub use hermite::hermite2;
pub use hypergeometric::hyp1f2;
pub use series::{sum_series, SeriesResult, TruncationPolicy};
