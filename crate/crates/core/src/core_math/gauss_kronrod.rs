//! Globally adaptive 10/21-point Gauss–Kronrod integration on finite intervals.

// Node and weight tables are quoted to 33 digits.
#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

// Kronrod abscissae on [−1, 1]; odd indices are the 10 Gauss nodes.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Integrand values the engine can accumulate.
pub trait QuadValue: Copy + Default + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn norm(self) -> f64;
    fn is_finite(self) -> bool;
}

impl QuadValue for f64 {
    fn norm(self) -> f64 {
        self.abs()
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

impl QuadValue for Complex64 {
    fn norm(self) -> f64 {
        Complex64::norm(self)
    }
    fn is_finite(self) -> bool {
        Complex64::is_finite(self)
    }
}

/// One 21-point rule on `[a, b]`: `(integral, error estimate)`.
pub fn qk21<T: QuadValue>(f: &impl Fn(f64) -> T, a: f64, b: f64) -> (T, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_g = T::default();
    let mut res_k = fc * WGK[10];
    let mut res_abs = fc.norm() * WGK[10];
    let mut fv1 = [T::default(); 10];
    let mut fv2 = [T::default(); 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k = res_k + (f1 + f2) * WGK[j];
        res_abs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            res_g = res_g + (f1 + f2) * WG[j / 2];
        }
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[10] * (fc - mean).norm();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }
    let scale = half.abs();
    let result = res_k * half;
    res_abs *= scale;
    res_asc *= scale;
    let mut err = ((res_k - res_g) * half).norm();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (result, err)
}

/// Tolerances and caps of the adaptive driver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptiveLimits {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum number of bisections applied to any one interval.
    pub max_depth: u32,
    pub max_intervals: usize,
}

impl Default for AdaptiveLimits {
    fn default() -> Self {
        AdaptiveLimits { abs_tol: 1e-10, rel_tol: 1e-10, max_depth: 60, max_intervals: 20_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T> {
    pub value: T,
    pub abs_error: f64,
    pub evaluations: usize,
}

struct Segment<T> {
    a: f64,
    b: f64,
    value: T,
    err: f64,
    depth: u32,
}

impl<T> PartialEq for Segment<T> {
    fn eq(&self, other: &Self) -> bool {
        self.err.total_cmp(&other.err) == Ordering::Equal
    }
}
impl<T> Eq for Segment<T> {}
impl<T> PartialOrd for Segment<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Segment<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Adaptive integration of `f` over consecutive breakpoints.
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate is at most `max(abs_tol, rel_tol·|I|)`. Intervals that hit
/// `max_depth` are frozen; if the criterion is still unmet once only frozen
/// intervals remain, the call fails.
pub fn integrate_breakpoints<T: QuadValue>(
    f: impl Fn(f64) -> T,
    points: &[f64],
    lim: &AdaptiveLimits,
) -> Result<Estimate<T>> {
    if points.len() < 2 {
        return Err(Error::Domain("need at least two breakpoints".into()));
    }
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Segment<T>> = Vec::new();
    let mut evaluations = 0;
    let mut total = T::default();
    let mut total_err = 0.0;
    let mut frozen_err = 0.0;
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Domain(format!("non-finite interval [{a}, {b}]")));
        }
        if a == b {
            continue;
        }
        let (value, err) = qk21(&f, a, b);
        evaluations += 21;
        total = total + value;
        total_err += err;
        heap.push(Segment { a, b, value, err, depth: 0 });
    }
    loop {
        if !total.is_finite() || !total_err.is_finite() {
            return Err(Error::Quadrature("integrand produced a non-finite value".into()));
        }
        let target = lim.abs_tol.max(lim.rel_tol * total.norm());
        if total_err <= target {
            break;
        }
        if frozen_err > target {
            return Err(Error::Quadrature(format!(
                "depth cap {} reached with error estimate {total_err:.3e} above {target:.3e}",
                lim.max_depth
            )));
        }
        let Some(seg) = heap.pop() else {
            return Err(Error::Quadrature(format!(
                "depth cap {} reached with error estimate {total_err:.3e} above {target:.3e}",
                lim.max_depth
            )));
        };
        let mid = 0.5 * (seg.a + seg.b);
        let too_small = (seg.b - seg.a).abs() <= 1e3 * f64::EPSILON * seg.a.abs().max(seg.b.abs());
        if seg.depth >= lim.max_depth || too_small || mid == seg.a || mid == seg.b {
            frozen_err += seg.err;
            frozen.push(seg);
            continue;
        }
        if heap.len() + frozen.len() >= lim.max_intervals {
            return Err(Error::Quadrature(format!(
                "interval cap {} reached with error estimate {total_err:.3e} above {target:.3e}",
                lim.max_intervals
            )));
        }
        let (v1, e1) = qk21(&f, seg.a, mid);
        let (v2, e2) = qk21(&f, mid, seg.b);
        evaluations += 42;
        total = total - seg.value + v1 + v2;
        total_err += e1 + e2 - seg.err;
        heap.push(Segment { a: seg.a, b: mid, value: v1, err: e1, depth: seg.depth + 1 });
        heap.push(Segment { a: mid, b: seg.b, value: v2, err: e2, depth: seg.depth + 1 });
    }
    // Re-sum from the pieces to drop the drift of the running totals.
    let mut value = T::default();
    let mut abs_error = 0.0;
    let mut pieces: Vec<&Segment<T>> = heap.iter().chain(frozen.iter()).collect();
    pieces.sort_by(|p, q| p.a.total_cmp(&q.a));
    for s in pieces {
        value = value + s.value;
        abs_error += s.err;
    }
    Ok(Estimate { value, abs_error, evaluations })
}

/// Adaptive integration over `[a, b]`.
pub fn integrate<T: QuadValue>(f: impl Fn(f64) -> T, a: f64, b: f64, lim: &AdaptiveLimits) -> Result<Estimate<T>> {
    integrate_breakpoints(f, &[a, b], lim)
}
