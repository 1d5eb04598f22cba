//! The nearly-trigonometric family: `cos_m`, `sin_m`, `exp_m(i·)`, their
//! derivatives, closed forms, differential equations and the Lommel reduction.

pub mod closed_form;
pub mod deriv;
pub(crate) mod far_field;
pub(crate) mod kernels;
pub mod lommel;
pub mod ode;
pub mod precise;
pub mod trig;

pub use closed_form::{closed_form, ClosedFn};
pub use deriv::{cos_m_deriv, cos_m_deriv_termwise, j_small, sin_m_deriv};
pub use lommel::{lommel_ode_residual, lommel_s};
pub use ode::ode_residual;
pub use trig::{cos_m_eval, cos_m_series, exp_m_eval, sin_m_eval, sin_m_series};

use crate::error::{domain, Result};

/// Family index `m`, restricted to `m > −1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(m: f64) -> Result<Order> {
        if m.is_finite() && m > -1.0 {
            Ok(Order(m))
        } else {
            domain(format!("order m must satisfy m > -1, got {m}"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Integral identities need `m > 0`.
    pub fn require_positive(self) -> Result<Order> {
        if self.0 > 0.0 {
            Ok(self)
        } else {
            domain(format!("this operation needs m > 0, got {}", self.0))
        }
    }
}

impl TryFrom<f64> for Order {
    type Error = crate::Error;
    fn try_from(m: f64) -> Result<Order> {
        Order::new(m)
    }
}

/// Largest supported derivative order.
pub const MAX_DERIV_ORDER: u32 = 12;

/// Derivative order `k ≤ 12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DerivOrder(u32);

impl DerivOrder {
    pub fn new(k: u32) -> Result<DerivOrder> {
        if k <= MAX_DERIV_ORDER {
            Ok(DerivOrder(k))
        } else {
            domain(format!("derivative order {k} exceeds {MAX_DERIV_ORDER}"))
        }
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for DerivOrder {
    type Error = crate::Error;
    fn try_from(k: u32) -> Result<DerivOrder> {
        DerivOrder::new(k)
    }
}

pub(crate) fn check_finite(x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        domain(format!("argument must be finite, got {x}"))
    }
}
