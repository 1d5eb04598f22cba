use super::deriv::cos_m_deriv;
use super::{DerivOrder, Order};
use crate::error::{domain, Result};

/// Residual of `x²y'' + 2mxy' + (m² − m + x²)y − m(m−1)` at `y = cos_m`,
/// with the derivatives taken from [`cos_m_deriv`].
pub fn ode_residual(m: Order, x: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return domain(format!("ode residual needs a finite nonzero x, got {x}"));
    }
    let mv = m.value();
    let y = cos_m_deriv(m, DerivOrder::new(0)?, x)?;
    let y1 = cos_m_deriv(m, DerivOrder::new(1)?, x)?;
    let y2 = cos_m_deriv(m, DerivOrder::new(2)?, x)?;
    Ok(x * x * y2 + 2.0 * mv * x * y1 + (mv * mv - mv + x * x) * y - mv * (mv - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_vanishes() {
        for &(m, x) in &[(2.0, 1.0), (0.0, 0.7), (3.0, 2.5), (0.5, -9.0), (5.0, 10.0), (1.5, 40.0)] {
            let r = ode_residual(Order::new(m).unwrap(), x).unwrap();
            assert!(r.abs() <= 1e-10 * (1.0f64).max(x * x), "m={m} x={x} r={r}");
        }
    }

    #[test]
    fn origin_is_rejected() {
        assert!(ode_residual(Order::new(2.0).unwrap(), 0.0).is_err());
    }
}
