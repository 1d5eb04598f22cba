use thiserror::Error;

/// Failure modes shared by every evaluator, engine and command.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A Gamma-type argument sits on a pole.
    #[error("pole at {0}")]
    Pole(f64),

    /// The term cap was reached before the stop rule was satisfied.
    #[error("series did not converge within {terms} terms (last partial sum {partial})")]
    NonConvergence { terms: usize, partial: f64 },

    /// More digits were lost to cancellation than the working precision allows.
    #[error("cancellation lost {digits:.1} digits (limit {limit:.1})")]
    Cancellation { digits: f64, limit: f64 },

    /// Adaptive quadrature could not meet its tolerance.
    #[error("quadrature failed: {0}")]
    Quadrature(String),

    /// A closed form or option is not available for the requested index.
    #[error("unsupported index: {0}")]
    UnsupportedIndex(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
