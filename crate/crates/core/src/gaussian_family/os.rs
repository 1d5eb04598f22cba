use std::sync::OnceLock;

use super::os_far::{applies, OsFarField};
use super::PowerOrder;
use crate::core_math::dd::Dd;
use crate::core_math::gamma::gamma_fn;
use crate::core_math::series::{sum_ratio_series, Summand, TruncationPolicy};
use crate::error::Result;
use crate::ntf::{check_finite, Order};

/// `os_m^{(ν)}` bound to one `(m, ν)`, so repeated evaluation (quadrature)
/// builds the far-field tables once.
pub struct LorentzianPower {
    m: Order,
    nu: PowerOrder,
    far: OnceLock<std::result::Result<OsFarField, crate::Error>>,
}

impl LorentzianPower {
    pub fn new(m: Order, nu: PowerOrder) -> LorentzianPower {
        LorentzianPower { m, nu, far: OnceLock::new() }
    }

    pub fn order(&self) -> Order {
        self.m
    }

    pub fn power(&self) -> PowerOrder {
        self.nu
    }

    /// `Σ_r (−1)^r (ν)_r/r! · x^{2r}/(1+m)_{2r}`; even in `x`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        check_finite(x)?;
        let (m, nu) = (self.m.value(), self.nu.value());
        if applies(m, nu, x) {
            let far = self.far.get_or_init(|| OsFarField::new(m, nu));
            return match far {
                Ok(f) => Ok(f.eval(x)),
                Err(e) => Err(e.clone()),
            };
        }
        series(m, nu, x.abs())
    }
}

fn series(m: f64, nu: f64, x: f64) -> Result<f64> {
    let x2 = Dd::new(x).sqr();
    let r = sum_ratio_series(
        Dd::ONE,
        |t, r| {
            let a = (Dd::new(nu) + r as f64) / (r + 1) as f64;
            -(t * x2 * a) / ((Dd::new(m) + (2 * r + 1) as f64) * (Dd::new(m) + (2 * r + 2) as f64))
        },
        &TruncationPolicy::default().with_min_terms(2000),
    )?
    .guard(Dd::MAX_CANCELLATION)?;
    Ok(r.value.to_f64())
}

/// Lorentzian power of the nearly cosine, `Σ_r (−1)^r (ν)_r x^{2r}/(r!(1+m)_{2r})`.
///
/// `ν = 1` gives `cos_m`. Beyond `|x| = 30` (for `m < 6`) the value comes from an
/// exact contour split instead of the power series.
pub fn os_eval(m: Order, nu: PowerOrder, x: f64) -> Result<f64> {
    LorentzianPower::new(m, nu).eval(x)
}

/// `∫ os_m^{(ν)} dx = m √π Γ(ν−1/2)/Γ(ν)` for `m > 0`, `ν > 1/2`.
pub fn os_integral(m: Order, nu: PowerOrder) -> Result<f64> {
    let m = m.require_positive()?.value();
    let nu = nu.require_integrable()?.value();
    Ok(m * std::f64::consts::PI.sqrt() * gamma_fn(nu - 0.5)? / gamma_fn(nu)?)
}
