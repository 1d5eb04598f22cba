pub mod cli;
pub mod core_math;
pub mod error;
pub mod gaussian_family;
pub mod ntf;
pub mod transforms;

pub use error::{Error, Result};
