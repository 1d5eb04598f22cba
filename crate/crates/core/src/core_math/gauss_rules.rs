//! Fixed Gauss rules (Jacobi and generalized Laguerre) by Newton iteration on
//! the orthogonal-polynomial recurrences.

use super::gamma::gamma_fn;

/// Nodes and weights of an n-point rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// `Σ w_i f(x_i)`.
    pub fn apply<T>(&self, mut f: impl FnMut(f64) -> T) -> T
    where
        T: std::ops::Add<Output = T> + std::ops::Mul<f64, Output = T> + Default,
    {
        let mut acc = T::default();
        for (&x, &w) in self.nodes.iter().zip(self.weights.iter()) {
            acc = acc + f(x) * w;
        }
        acc
    }
}

/// Newton stops after three steps below this size.
const NEWTON_TOL: f64 = 1e-15;

/// `Γ(a+n)/Γ(c+n)` as `Γ(a+1)/Γ(c+1) · Π_{j=1}^{n−1} (a+j)/(c+j)`, avoiding
/// the cancellation of a lnΓ difference.
fn gamma_ratio(a: f64, c: f64, n: usize) -> f64 {
    let mut r = gamma_fn(a + 1.0).expect("a > -1") / gamma_fn(c + 1.0).expect("c > -1");
    for j in 1..n {
        r *= (a + j as f64) / (c + j as f64);
    }
    r
}

/// `(L_n^{(α)}(z), L_{n−1}^{(α)}(z))`.
fn laguerre_pair(n: usize, alpha: f64, z: f64) -> (f64, f64) {
    let (mut p1, mut p2) = (1.0, 0.0);
    for j in 1..=n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = ((2.0 * jf - 1.0 + alpha - z) * p2 - (jf - 1.0 + alpha) * p3) / jf;
    }
    (p1, p2)
}

/// Rule for `∫₀^∞ τ^α e^{−τ} f(τ) dτ`, `α > −1`.
pub fn gauss_laguerre(n: usize, alpha: f64) -> GaussRule {
    assert!(n >= 2 && alpha > -1.0);
    let nf = n as f64;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let mut z = 0.0f64;
    let norm = gamma_ratio(alpha, 0.0, n);
    for i in 0..n {
        z = match i {
            0 => (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * nf + 1.8 * alpha),
            1 => z + (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * nf),
            _ => {
                let ai = (i - 1) as f64;
                z + ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai)) * (z - nodes[i - 2])
                    / (1.0 + 0.3 * alpha)
            }
        };
        let mut polish = 3;
        for _ in 0..100 {
            let (p1, p2) = laguerre_pair(n, alpha, z);
            let pp = (nf * p1 - (nf + alpha) * p2) / z;
            let step = p1 / pp;
            z -= step;
            if step.abs() <= NEWTON_TOL * z.abs() {
                polish -= 1;
                if polish == 0 {
                    break;
                }
            }
        }
        let (p1, p2) = laguerre_pair(n, alpha, z);
        let pp = (nf * p1 - (nf + alpha) * p2) / z;
        nodes[i] = z;
        weights[i] = -norm / (pp * nf * p2);
    }
    GaussRule { nodes, weights }
}

/// `(P_n^{(α,β)}(z), P_{n−1}^{(α,β)}(z), last recurrence constant)`.
fn jacobi_pair(n: usize, a: f64, b: f64, z: f64) -> (f64, f64, f64) {
    let ab = a + b;
    let mut temp = 2.0 + ab;
    let mut p1 = (a - b + temp * z) / 2.0;
    let mut p2 = 1.0;
    for j in 2..=n {
        let jf = j as f64;
        let p3 = p2;
        p2 = p1;
        temp = 2.0 * jf + ab;
        let aa = 2.0 * jf * (jf + ab) * (temp - 2.0);
        let bb = (temp - 1.0) * (a * a - b * b + temp * (temp - 2.0) * z);
        let cc = 2.0 * (jf - 1.0 + a) * (jf - 1.0 + b) * temp;
        p1 = (bb * p2 - cc * p3) / aa;
    }
    (p1, p2, temp)
}

/// Rule for `∫_{−1}^{1} (1−x)^α (1+x)^β f(x) dx`, `α, β > −1`.
// 6.28 in the root guesses is an empirical fit, not 2π
#[allow(clippy::approx_constant)]
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> GaussRule {
    assert!(n >= 4 && a > -1.0 && b > -1.0);
    let nf = n as f64;
    let ab = a + b;
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let mut z = 0.0f64;
    // Γ(a+n)Γ(b+n)/(Γ(n+1)Γ(n+a+b+1))
    let norm = gamma_ratio(a, 1.0, n) * gamma_ratio(b, ab + 1.0, n);
    for i in 0..n {
        z = if i == 0 {
            let an = a / nf;
            let bn = b / nf;
            let r1 = (1.0 + a) * (2.78 / (4.0 + nf * nf) + 0.768 * an / nf);
            let r2 = 1.0 + 1.48 * an + 0.96 * bn + 0.452 * an * an + 0.83 * an * bn;
            1.0 - r1 / r2
        } else if i == 1 {
            let r1 = (4.1 + a) / ((1.0 + a) * (1.0 + 0.156 * a));
            let r2 = 1.0 + 0.06 * (nf - 8.0) * (1.0 + 0.12 * a) / nf;
            let r3 = 1.0 + 0.012 * b * (1.0 + 0.25 * a.abs()) / nf;
            z - (1.0 - z) * r1 * r2 * r3
        } else if i == 2 {
            let r1 = (1.67 + 0.28 * a) / (1.0 + 0.37 * a);
            let r2 = 1.0 + 0.22 * (nf - 8.0) / nf;
            let r3 = 1.0 + 8.0 * b / ((6.28 + b) * nf * nf);
            z - (x[0] - z) * r1 * r2 * r3
        } else if i == n - 2 {
            let r1 = (1.0 + 0.235 * b) / (0.766 + 0.119 * b);
            let r2 = 1.0 / (1.0 + 0.639 * (nf - 4.0) / (1.0 + 0.71 * (nf - 4.0)));
            let r3 = 1.0 / (1.0 + 20.0 * a / ((7.5 + a) * nf * nf));
            z + (z - x[n - 4]) * r1 * r2 * r3
        } else if i == n - 1 {
            let r1 = (1.0 + 0.37 * b) / (1.67 + 0.28 * b);
            let r2 = 1.0 / (1.0 + 0.22 * (nf - 8.0) / nf);
            let r3 = 1.0 / (1.0 + 8.0 * a / ((6.28 + a) * nf * nf));
            z + (z - x[n - 3]) * r1 * r2 * r3
        } else {
            3.0 * x[i - 1] - 3.0 * x[i - 2] + x[i - 3]
        };
        let mut polish = 3;
        for _ in 0..100 {
            let (p1, p2, temp) = jacobi_pair(n, a, b, z);
            let pp = (nf * (a - b - temp * z) * p1 + 2.0 * (nf + a) * (nf + b) * p2) / (temp * (1.0 - z) * (1.0 + z));
            let step = p1 / pp;
            z -= step;
            if step.abs() <= NEWTON_TOL {
                polish -= 1;
                if polish == 0 {
                    break;
                }
            }
        }
        let (p1, p2, temp) = jacobi_pair(n, a, b, z);
        let pp = (nf * (a - b - temp * z) * p1 + 2.0 * (nf + a) * (nf + b) * p2) / (temp * (1.0 - z) * (1.0 + z));
        x[i] = z;
        w[i] = norm * temp * 2f64.powf(ab) / (pp * p2);
    }
    GaussRule { nodes: x, weights: w }
}
