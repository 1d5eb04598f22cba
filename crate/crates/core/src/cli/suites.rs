use std::f64::consts::PI;

use clap::ValueEnum;

use super::report::{worst, Check, VerificationReport};
use crate::core_math::{hermite2, hyp1f2, pochhammer, TruncationPolicy};
use crate::error::Result;
use crate::gaussian_family::{cos_via_gauss_transform, e_m_eval, os_eval, os_integral, LorentzianPower, PowerOrder};
use crate::ntf::precise::{self, central_difference};
use crate::ntf::{
    closed_form, cos_m_deriv, cos_m_deriv_termwise, cos_m_eval, exp_m_eval, lommel_ode_residual, lommel_s, ode_residual,
    sin_m_eval, ClosedFn, DerivOrder, Order,
};
use crate::transforms::{
    convolve_gauss_direct, convolve_gauss_hermite, gaussian_second_moment, hilbert_pv, second_moment_diagnostic,
    try_integrate_improper, GaussianKernel, QuadratureSpec, TailMap,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Series,
    Odes,
    Transforms,
    Kk,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Series => "series",
            Suite::Odes => "odes",
            Suite::Transforms => "transforms",
            Suite::Kk => "kk",
        }
    }
}

/// Runs a suite. `Err` means an engine failed outright, as opposed to a check
/// that ran and missed its tolerance.
pub fn run_suite(suite: Suite) -> Result<VerificationReport> {
    let checks = match suite {
        Suite::All => {
            let mut all = series()?;
            all.extend(odes()?);
            all.extend(transforms()?);
            all.extend(kk()?);
            all
        }
        Suite::Series => series()?,
        Suite::Odes => odes()?,
        Suite::Transforms => transforms()?,
        Suite::Kk => kk()?,
    };
    Ok(VerificationReport::new(suite.name(), checks))
}

/// Deterministic low-discrepancy sample in `[lo, hi)`: the `i`-th point of the
/// additive recurrence with irrational step `step`.
pub fn weyl(i: usize, step: f64, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * ((i as f64 + 1.0) * step).fract()
}

const STEP_A: f64 = 0.618_033_988_749_894_9;
const STEP_B: f64 = 0.414_213_562_373_095_1;

fn o(m: f64) -> Result<Order> {
    Order::new(m)
}

fn k(k: u32) -> Result<DerivOrder> {
    DerivOrder::new(k)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn series() -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let grid: Vec<f64> = linspace(-20.0, 20.0, 200).into_iter().filter(|x| x.abs() >= 1e-4).collect();
    for (f, m) in [(ClosedFn::Cos, 1), (ClosedFn::Cos, 2), (ClosedFn::Cos, 3), (ClosedFn::Sin, 1), (ClosedFn::Sin, 2)] {
        let mut errs = Vec::new();
        for &x in &grid {
            let series = match f {
                ClosedFn::Cos => cos_m_eval(o(m as f64)?, x)?,
                ClosedFn::Sin => sin_m_eval(o(m as f64)?, x)?,
            };
            errs.push(rel(series, closed_form(f, m, x)?));
        }
        out.push(Check::upper(format!("closed_form_{f}{m}"), worst(errs), 1e-12));
    }

    let x_grid = linspace(0.1, 20.0, 200);
    let (c1, c2, c3) = (o(1.0)?, o(2.0)?, o(3.0)?);
    let (mut a, mut b, mut c) = (Vec::new(), Vec::new(), Vec::new());
    for &x in &x_grid {
        let h = cos_m_eval(c1, x / 2.0)?;
        a.push(rel(h * h, cos_m_eval(c2, x)?));
        b.push(rel(3.0 * sin_m_eval(c2, x)? / x, cos_m_eval(c3, x)?));
        c.push(rel(2.0 * sin_m_eval(c1, x)? / x, cos_m_eval(c2, x)?));
    }
    out.push(Check::upper("cos2_is_square_of_half_cos1", worst(a), 1e-11));
    out.push(Check::upper("cos3_from_sin2", worst(b), 1e-11));
    out.push(Check::upper("cos2_from_sin1", worst(c), 1e-11));

    let mut e = Vec::new();
    for i in 0..100 {
        let m = o(weyl(i, STEP_A, -0.9, 6.0))?;
        let x = weyl(i, STEP_B, -10.0, 10.0);
        let z = exp_m_eval(m, x)?;
        e.push((z.re - cos_m_eval(m, x)?).abs().max((z.im - sin_m_eval(m, x)?).abs()));
    }
    out.push(Check::upper("exp_m_parts_are_cos_m_and_sin_m", worst(e), 1e-13));

    let mut h = Vec::new();
    let mut l = Vec::new();
    for i in 0..100 {
        let m = weyl(i, STEP_A, 0.0, 6.0);
        let z = weyl(i, STEP_B, -10.0, 10.0);
        let f = hyp1f2((m + 1.0) / 2.0, (m + 2.0) / 2.0, -z * z / 4.0, &TruncationPolicy::default())?.value;
        h.push((f - cos_m_eval(o(m)?, z)?).abs());
        let (m, z) = (1.0 + m, 0.1 + z.abs());
        let s = lommel_s(m - 1.5, 0.5, z)?;
        l.push((m * (m - 1.0) * z.powf(0.5 - m) * s - cos_m_eval(o(m)?, z)?).abs());
    }
    out.push(Check::upper("hypergeometric_form", worst(h), 1e-12));
    out.push(Check::upper("lommel_reduction", worst(l), 1e-12));

    let mut comp = Vec::new();
    let mut dup = Vec::new();
    for i in 0..100 {
        let d = weyl(i, STEP_A, 0.0, 10.0).max(1e-3);
        let (r, s) = ((i % 11) as f64, ((i * 7) % 11) as f64);
        comp.push(rel(pochhammer(d, r)? * pochhammer(d + r, s)?, pochhammer(d, r + s)?));
        let x = weyl(i, STEP_B, 0.1, 10.0);
        let n = (i % 13) as f64;
        dup.push(rel(4f64.powf(n) * pochhammer(x / 2.0, n)? * pochhammer((x + 1.0) / 2.0, n)?, pochhammer(x, 2.0 * n)?));
    }
    out.push(Check::upper("pochhammer_composition", worst(comp), 1e-12));
    out.push(Check::upper("pochhammer_duplication", worst(dup), 1e-12));

    let mut rec = Vec::new();
    for i in 0..20 {
        let x = weyl(i, STEP_A, -3.0, 3.0);
        let y = weyl(i, STEP_B, -2.0, 2.0);
        for n in 1..30u32 {
            let lhs = hermite2(n + 1, x, y);
            let a = x * hermite2(n, x, y);
            let b = 2.0 * n as f64 * y * hermite2(n - 1, x, y);
            // the finite sum itself cancels for y < 0; H(|x|,|y|) sums its magnitudes
            rec.push((lhs - a - b).abs() / hermite2(n + 1, x.abs(), y.abs()));
        }
    }
    out.push(Check::upper("hermite2_recurrence", worst(rec), 1e-12));

    let mut tw = Vec::new();
    let mut fd = Vec::new();
    for &m in &[0.5, 2.0, 3.0, 5.0] {
        for &x in &[-7.5, -2.0, 0.3, 1.0, 4.0, 9.5] {
            for kk in 0..=4 {
                let a = cos_m_deriv(o(m)?, k(kk)?, x)?;
                let b = cos_m_deriv_termwise(o(m)?, k(kk)?, x)?;
                tw.push((a - b).abs() / b.abs().max(1.0));
                if kk <= 3 {
                    let h = 1e-5 * x.abs().max(1.0);
                    let d = central_difference(|t| precise::cos_m(o(m)?, t), kk, x, h)?;
                    fd.push((a - d).abs());
                }
            }
        }
    }
    out.push(Check::upper("derivative_bessel_form_vs_termwise", worst(tw), 1e-11));
    out.push(Check::upper("derivative_vs_central_differences", worst(fd), 1e-6));

    let m5 = o(5.0)?;
    let mut gap: f64 = 0.0;
    for x in linspace(0.0, 10.0, 401) {
        gap = gap.max((cos_m_deriv(m5, k(1)?, x)? + sin_m_eval(m5, x)?).abs());
    }
    out.push(Check::lower("derivative_differs_from_minus_sin_m5", gap, 0.01));

    let mut os = Vec::new();
    let mut gauss = Vec::new();
    for i in 0..100 {
        let m = o(weyl(i, STEP_A, -0.9, 6.0))?;
        let x = weyl(i, STEP_B, -30.0, 30.0);
        os.push((os_eval(m, PowerOrder::new(1.0)?, x)? - cos_m_eval(m, x)?).abs());
        let x = weyl(i, STEP_B, -5.0, 5.0);
        gauss.push((e_m_eval(o(0.0)?, x)? - (-x * x).exp()).abs());
    }
    out.push(Check::upper("os_at_nu_one_is_cos_m", worst(os), 1e-13));
    out.push(Check::upper("e_0_is_gaussian", worst(gauss), 1e-13));
    Ok(out)
}

fn odes() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let grid = linspace(-10.0, 10.0, 50);
    for &m in &[0.5, 2.0, 3.0, 5.0] {
        let mut r = Vec::new();
        for &x in &grid {
            r.push(ode_residual(o(m)?, x)?.abs() / x.powi(2).max(1.0));
        }
        out.push(Check::upper(format!("ode_residual_m{m}"), worst(r), 1e-8));
    }
    for &m in &[2.0, 3.0] {
        let mut r = Vec::new();
        for z in linspace(0.5, 10.0, 40) {
            r.push(lommel_ode_residual(o(m)?, z)?.abs() / z.powi(2).max(1.0));
        }
        out.push(Check::upper(format!("lommel_ode_residual_m{m}"), worst(r), 1e-7));
    }

    let (c1, c2, c3, s2) = (o(1.0)?, o(2.0)?, o(3.0)?, o(2.0)?);
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for x in linspace(0.1, 20.0, 100) {
        let lhs = central_difference(|t| precise::sin_m(s2, t), 1, x, 1e-5 * x.max(1.0))?;
        let rhs = (cos_m_eval(c3, x)? + x * cos_m_deriv(c3, k(1)?, x)?) / 3.0;
        a.push((lhs - rhs).abs());
        let lhs = cos_m_deriv(c2, k(1)?, x)?;
        let rhs = cos_m_eval(c1, x / 2.0)? * cos_m_deriv(c1, k(1)?, x / 2.0)?;
        b.push((lhs - rhs).abs());
    }
    out.push(Check::upper("sin2_derivative_identity", worst(a), 1e-8));
    out.push(Check::upper("cos2_derivative_identity", worst(b), 1e-8));

    let (mut p, mut q) = (Vec::new(), Vec::new());
    for x in linspace(-10.0, 10.0, 101) {
        let c = cos_m_eval(c2, x)?;
        let f = (2.0 - x * x * c) / 2.0;
        p.push((f - x.cos()).abs());
        let d1 = cos_m_deriv(c2, k(1)?, x)?;
        let d2 = cos_m_deriv(c2, k(2)?, x)?;
        let f2 = -(2.0 * c + 4.0 * x * d1 + x * x * d2) / 2.0;
        q.push((f2 + f).abs());
    }
    out.push(Check::upper("cosine_from_cos2", worst(p), 1e-12));
    out.push(Check::upper("cosine_from_cos2_solves_harmonic_equation", worst(q), 1e-10));
    Ok(out)
}

/// Quadrature for whole-line integrals of the family: its members oscillate
/// with half period π.
pub fn oscillatory_spec() -> QuadratureSpec {
    QuadratureSpec::default().with_tail_map(TailMap::oscillatory(PI)).expect("π is a valid half period")
}

fn transforms() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let osc = oscillatory_spec();
    let mut e = Vec::new();
    for &m in &[0.5, 1.0, 2.0, 3.0] {
        let i = try_integrate_improper(|x| cos_m_eval(o(m)?, x), &osc)?;
        e.push(rel(i, m * PI));
    }
    out.push(Check::upper("integral_of_cos_m_is_m_pi", worst(e), 1e-6));

    // (0.5, 2) grows like √x; its value is the summed (averaged) one
    let summed = osc.with_tolerances(1e-9, 1e-9)?;
    let mut e = Vec::new();
    for &(m, nu) in &[(1.0, 1.0), (2.0, 1.5), (3.0, 2.0), (0.5, 2.0)] {
        let f = LorentzianPower::new(o(m)?, PowerOrder::new(nu)?);
        let i = try_integrate_improper(|x| f.eval(x), &summed)?;
        e.push(rel(i, os_integral(o(m)?, PowerOrder::new(nu)?)?));
    }
    out.push(Check::upper("integral_of_os", worst(e), 1e-6));

    let q = QuadratureSpec::default();
    let mut e = Vec::new();
    for &m in &[0.0, 0.5, 1.0, 2.0] {
        for &x in &[0.5, 1.0, 2.0, 5.0] {
            e.push((cos_via_gauss_transform(o(m)?, x, &q)? - cos_m_eval(o(m)?, x)?).abs());
        }
    }
    out.push(Check::upper("gauss_transform_of_half_index_gaussian", worst(e), 1e-6));

    let mut e = Vec::new();
    for &m in &[1.0, 2.0, 3.0] {
        for &alpha in &[0.5, 1.0, 2.0] {
            for &x in &[0.0, 1.0, 3.0] {
                let kernel = GaussianKernel::new(alpha)?;
                let d = convolve_gauss_direct(o(m)?, kernel, x, &q)?;
                let h = convolve_gauss_hermite(o(m)?, kernel, x, &TruncationPolicy::default())?;
                e.push(rel(h, d));
            }
        }
    }
    out.push(Check::upper("convolution_hermite_vs_direct", worst(e), 1e-8));

    let mut e = Vec::new();
    for &r in &[10.0, 20.0, 40.0] {
        e.push((second_moment_diagnostic(o(2.0)?, r, &q)? - (4.0 * r - 4.0 * r.sin())).abs());
    }
    out.push(Check::upper("second_moment_m2_closed_form", worst(e), 1e-8));
    for &m in &[2.0, 3.0] {
        let mut growth = f64::INFINITY;
        for &r in &[10.0, 20.0, 40.0] {
            growth = growth.min(second_moment_diagnostic(o(m)?, 2.0 * r, &q)? / second_moment_diagnostic(o(m)?, r, &q)?);
        }
        out.push(Check::lower(format!("second_moment_m{m}_keeps_growing"), growth, 1.5));
    }
    out.push(Check::upper(
        "gaussian_second_moment",
        (gaussian_second_moment(&q)? - PI.sqrt() / 2.0).abs(),
        1e-10,
    ));
    Ok(out)
}

fn kk() -> Result<Vec<Check>> {
    let osc = oscillatory_spec();
    let mut out = Vec::new();
    for &m in &[1.0, 2.0, 3.0] {
        let mut e = Vec::new();
        for &w in &[0.5, 1.0, 2.0, 5.0] {
            let h = hilbert_pv(|x| cos_m_eval(o(m)?, x), w, &osc)?;
            e.push((h - sin_m_eval(o(m)?, w)?).abs());
        }
        out.push(Check::upper(format!("hilbert_of_cos_m{m}_is_sin_m{m}"), worst(e), 1e-4));
    }
    let q = QuadratureSpec::default();
    let mut e = Vec::new();
    for &w in &[0.0, 0.5, -0.5, 1.0, -1.0, 3.0, -3.0] {
        let h = hilbert_pv(|x| Ok(1.0 / (1.0 + x * x)), w, &q)?;
        e.push((h - w / (1.0 + w * w)).abs());
    }
    out.push(Check::upper("lorentzian_pair", worst(e), 1e-6));
    Ok(out)
}

/// Sign of the second dispersion identity as it comes out numerically:
/// `s = −(1/π) PV∫ sin_m(ω′)/(ω′−ω) dω′ / cos_m(ω)`, `+1` or `−1`.
pub fn measured_inverse_sign(m: Order, omega: f64) -> Result<f64> {
    let h = hilbert_pv(|x| sin_m_eval(m, x), omega, &oscillatory_spec())?;
    Ok((h / cos_m_eval(m, omega)?).signum())
}
