//! Gaussian-like relatives of the family: the Lorentzian powers `os_m^{(ν)}`,
//! the Gaussian `e_m`, the half-index `e_m^{(1/2)}`, and the Gauss-transform
//! route back to `cos_m`.

pub mod e_half;
pub mod e_m;
pub mod gauss_transform;
pub mod os;
mod os_far;

pub use e_half::{e_half_eval, e_half_eval_complex, e_half_imag_re};
pub use e_m::e_m_eval;
pub use gauss_transform::cos_via_gauss_transform;
pub use os::{os_eval, os_integral, LorentzianPower};

use crate::error::{domain, Result};

/// Exponent `ν > 0` of the Lorentzian power.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PowerOrder(f64);

impl PowerOrder {
    pub fn new(nu: f64) -> Result<PowerOrder> {
        if nu.is_finite() && nu > 0.0 {
            Ok(PowerOrder(nu))
        } else {
            domain(format!("power order must satisfy nu > 0, got {nu}"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The integral over the line exists only for `ν > 1/2`.
    pub fn require_integrable(self) -> Result<PowerOrder> {
        if self.0 > 0.5 {
            Ok(self)
        } else {
            domain(format!("the integral needs nu > 1/2, got {}", self.0))
        }
    }
}

impl TryFrom<f64> for PowerOrder {
    type Error = crate::Error;
    fn try_from(nu: f64) -> Result<PowerOrder> {
        PowerOrder::new(nu)
    }
}
