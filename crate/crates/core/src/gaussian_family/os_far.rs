//! `os_m^{(ν)}(x)` for `x > 30`.
//!
//! Write `ν = n + δ` with `δ ∈ (0, 1]`. The operator
//! `Q = Π_{j<n} (1 + θ/(2(δ+j)))`, `θ = y d/dy`, maps `(δ)_r/r!` to `(ν)_r/r!`
//! on `y^{2r}`, so with `h = Q cos_m = Σ_k q_k y^k cos_m^{(k)}`:
//!
//! ```text
//! δ = 1:  os(x) = h(x)
//! δ < 1:  os(x) = C ∫₀^x y^{2δ−1} (x²−y²)^{−δ} h(y) dy,   C = 2 sin(πδ)/π
//! ```
//!
//! For the Abel integral `h` is taken from the power series on `[0, Y0]` and
//! split into `Osc + Alg` beyond. The `Alg` part is integrated on the real
//! axis; the `Osc` part is moved onto vertical rays from `Y0` and `x`, where it
//! decays like `e^{−τ}`. Every piece that does not depend on `x` is tabulated
//! once, so an evaluation costs a few hundred kernel calls.

use num_complex::Complex64;

use crate::core_math::dd::Dd;
use crate::core_math::gauss_rules::{gauss_jacobi, gauss_laguerre, GaussRule};
use crate::core_math::series::TruncationPolicy;
use crate::ntf::far_field::{alg_upto, exp_deriv, in_far_field, osc};
use crate::ntf::kernels::termwise_deriv;
use crate::ntf::MAX_DERIV_ORDER;
use crate::error::Result;

/// Start of the split; `Alg` is accurate for `y ≥ Y0` when `m < Y0/2.5`.
const Y0: f64 = 15.0;
const ABEL_NODES: usize = 64;
const ALG_NODES: usize = 32;
const RAY_NODES: usize = 64;

/// Whether the far-field route applies to `(m, ν, x)`.
pub(super) fn applies(m: f64, nu: f64, x: f64) -> bool {
    let n = split(nu).0;
    if n > MAX_DERIV_ORDER as usize {
        return false;
    }
    if nu.fract() == 0.0 {
        in_far_field(m, x)
    } else {
        x.abs() > 30.0 && m < Y0 / 2.5
    }
}

/// `ν = n + δ`, `δ ∈ (0, 1]`.
fn split(nu: f64) -> (usize, f64) {
    let n = nu.ceil() - 1.0;
    (n as usize, nu - n)
}

/// Coefficients `q_k` of `Q = Σ_k q_k y^k D^k`.
fn q_coefficients(n: usize, delta: f64) -> Vec<f64> {
    // polynomial in θ
    let mut p = vec![1.0];
    for j in 0..n {
        let c = 1.0 / (2.0 * (delta + j as f64));
        let mut next = vec![0.0; p.len() + 1];
        for (i, &a) in p.iter().enumerate() {
            next[i] += a;
            next[i + 1] += a * c;
        }
        p = next;
    }
    // θ^i = Σ_k S(i,k) y^k D^k with Stirling numbers of the second kind
    let mut s = vec![vec![0.0; n + 1]; n + 1];
    s[0][0] = 1.0;
    for i in 1..=n {
        for k in 1..=i {
            s[i][k] = k as f64 * s[i - 1][k] + s[i - 1][k - 1];
        }
    }
    (0..=n).map(|k| (k..=n).map(|i| p[i] * s[i][k]).sum()).collect()
}

pub(super) struct OsFarField {
    m: f64,
    delta: f64,
    q: Vec<f64>,
    c_delta: f64,
    /// Abel nodes `u = y²` on `[0, Y0²]` with `w·h(√u)/2` folded in.
    abel_u: Vec<f64>,
    abel_c: Vec<f64>,
    /// Ray from `Y0`: nodes and `w·e^τ·Osc(Y0 + iτ)`.
    ray_tau: Vec<f64>,
    ray_c: Vec<Complex64>,
    /// Ray from `x`, weight `τ^{−δ} e^{−τ}`.
    ray_x: GaussRule,
    legendre: GaussRule,
    jacobi_end: GaussRule,
}

impl OsFarField {
    pub(super) fn new(m: f64, nu: f64) -> Result<OsFarField> {
        let (n, delta) = split(nu);
        let q = q_coefficients(n, delta);
        let c_delta = 2.0 * (std::f64::consts::PI * delta).sin() / std::f64::consts::PI;
        let mut far = OsFarField {
            m,
            delta,
            q,
            c_delta,
            abel_u: Vec::new(),
            abel_c: Vec::new(),
            ray_tau: Vec::new(),
            ray_c: Vec::new(),
            ray_x: GaussRule { nodes: Vec::new(), weights: Vec::new() },
            legendre: gauss_jacobi(ALG_NODES, 0.0, 0.0),
            jacobi_end: GaussRule { nodes: Vec::new(), weights: Vec::new() },
        };
        if delta == 1.0 {
            return Ok(far);
        }
        let policy = TruncationPolicy::default();
        let u_max = Y0 * Y0;
        let abel = gauss_jacobi(ABEL_NODES, 0.0, delta - 1.0);
        let scale = 0.5 * (0.5 * u_max).powf(delta);
        for (&v, &w) in abel.nodes.iter().zip(abel.weights.iter()) {
            let u = 0.5 * u_max * (1.0 + v);
            let y = u.sqrt();
            let mut h = 0.0;
            for (k, &qk) in far.q.iter().enumerate() {
                let d = termwise_deriv(m, k as u32, Dd::new(y), false, &policy)?.value.to_f64();
                h += qk * y.powi(k as i32) * d;
            }
            far.abel_u.push(u);
            far.abel_c.push(w * scale * h);
        }
        let lag = gauss_laguerre(RAY_NODES, 0.0);
        for (&tau, &w) in lag.nodes.iter().zip(lag.weights.iter()) {
            let z = Complex64::new(Y0, tau);
            far.ray_tau.push(tau);
            far.ray_c.push(far.osc_sum(z) * (w * tau.exp()));
        }
        far.ray_x = gauss_laguerre(RAY_NODES, -delta);
        far.jacobi_end = gauss_jacobi(ALG_NODES, -delta, 0.0);
        Ok(far)
    }

    /// `Σ_k q_k z^k Osc_k(z)`.
    fn osc_sum(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut zk = Complex64::new(1.0, 0.0);
        for (k, &qk) in self.q.iter().enumerate() {
            acc += zk * osc(self.m, k as u32, z) * qk;
            zk *= z;
        }
        acc
    }

    /// `a(y) = Σ_k q_k y^k Re Alg_k(y)`.
    fn alg_sum(&self, y: f64) -> f64 {
        let parts = alg_upto(self.m, (self.q.len() - 1) as u32, y);
        let mut yk = 1.0;
        let mut acc = 0.0;
        for (&qk, p) in self.q.iter().zip(parts.iter()) {
            acc += qk * yk * p.re;
            yk *= y;
        }
        acc
    }

    /// `os_m^{(ν)}(x)` for `x > 30`.
    pub(super) fn eval(&self, x: f64) -> f64 {
        let x = x.abs();
        let d = self.delta;
        if d == 1.0 {
            let mut xk = 1.0;
            let mut acc = 0.0;
            for (k, &qk) in self.q.iter().enumerate() {
                acc += qk * xk * exp_deriv(self.m, k as u32, x).re;
                xk *= x;
            }
            return acc;
        }
        let x2 = x * x;

        // power-series segment
        let mut i1 = 0.0;
        for (&u, &c) in self.abel_u.iter().zip(self.abel_c.iter()) {
            i1 += c * (x2 - u).powf(-d);
        }

        // Alg on [Y0, x/2] in log spacing, then on [x/2, x] against (x−y)^{−δ}
        let mut i2 = 0.0;
        let half = 0.5 * x;
        let span = (half / Y0).ln();
        for (&v, &w) in self.legendre.nodes.iter().zip(self.legendre.weights.iter()) {
            let y = Y0 * (0.5 * span * (1.0 + v)).exp();
            i2 += w * 0.5 * span * y.powf(2.0 * d) * (x2 - y * y).powf(-d) * self.alg_sum(y);
        }
        let edge = (0.25 * x).powf(1.0 - d);
        for (&v, &w) in self.jacobi_end.nodes.iter().zip(self.jacobi_end.weights.iter()) {
            let y = 0.25 * x * (3.0 + v);
            i2 += w * edge * y.powf(2.0 * d - 1.0) * (x + y).powf(-d) * self.alg_sum(y);
        }

        // Osc on the two vertical rays
        let x2c = Complex64::new(x2, 0.0);
        let mut from_y0 = Complex64::new(0.0, 0.0);
        for (&tau, &c) in self.ray_tau.iter().zip(self.ray_c.iter()) {
            let z = Complex64::new(Y0, tau);
            from_y0 += c * z.powf(2.0 * d - 1.0) * (x2c - z * z).powf(-d);
        }
        let mut from_x = Complex64::new(0.0, 0.0);
        for (&tau, &w) in self.ray_x.nodes.iter().zip(self.ray_x.weights.iter()) {
            let z = Complex64::new(x, tau);
            // τ^δ (x² − z²)^{−δ} = (τ − 2ix)^{−δ}
            let weight = z.powf(2.0 * d - 1.0) * Complex64::new(tau, -2.0 * x).powf(-d);
            from_x += weight * self.osc_sum(z) * (w * tau.exp());
        }
        let i3 = (Complex64::i() * (from_y0 - from_x)).re;

        self.c_delta * (i1 + i2 + i3)
    }
}
