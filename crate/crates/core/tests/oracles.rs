//! Point values frozen from independent high-precision evaluations, plus a few
//! recomputed here in exact rational arithmetic.

// Reference values keep all the digits they were computed to.
#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use neartrig::gaussian_family::{e_half_eval, e_m_eval, os_eval, PowerOrder};
use neartrig::ntf::{cos_m_eval, exp_m_eval, sin_m_eval, Order};
use neartrig::transforms::{convolve_gauss_direct, convolve_gauss_hermite, fel_gain_curve, GaussianKernel, QuadratureSpec};
use neartrig::core_math::TruncationPolicy;

fn o(m: f64) -> Order {
    Order::new(m).unwrap()
}

fn assert_rel(got: f64, want: f64, tol: f64) {
    let err = (got - want).abs() / want.abs();
    assert!(err <= tol, "got {got:e}, want {want:e}, rel err {err:e} > {tol:e}");
}

/// Golden-section minimiser of a unimodal `f` on `[a, b]`.
fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-12 * b.abs().max(1.0) {
        let (c, d) = (b - g * (b - a), a + g * (b - a));
        if f(c) < f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    0.5 * (a + b)
}

#[test]
fn family_point_values() {
    assert_rel(cos_m_eval(o(3.0), 2.0).unwrap(), 0.818_026_929_880_738_728, 1e-15);
    assert_rel(sin_m_eval(o(2.0), 1.0).unwrap(), 0.317_058_030_384_206_986_694_995_356_739, 1e-15);
    assert_rel(cos_m_eval(o(2.0), PI).unwrap(), 0.405_284_734_569_351_085_775_517_852_838_911, 1e-15);
    assert_rel(exp_m_eval(o(2.0), 1.0).unwrap().re, 0.919_395_388_263_720_565, 1e-15);
    assert_rel(os_eval(o(0.0), PowerOrder::new(2.0).unwrap(), 1.0).unwrap(), 0.119_566_813_464_191_464, 1e-14);
}

#[test]
fn gaussian_family_point_values() {
    assert_rel(e_m_eval(o(-0.5), 1.0).unwrap(), -0.076_159_013_825_536_838_272_774_840_815, 1e-14);
    let neg_half = e_m_eval(o(-0.5), 3.0).unwrap();
    let zero = e_m_eval(o(0.0), 3.0).unwrap();
    assert_rel(neg_half, -0.069_626_183_663_349_724_055_6, 1e-13);
    assert_rel(zero, 1.234_098_040_866_795_5e-4, 1e-15);
    assert!(neg_half < zero);
}

/// `e_{−1/2}(1) = Σ_r (−1)^r/(1/2)_r`. From the second term on the series
/// alternates with decreasing terms, so the next term bounds the remainder.
#[test]
fn e_minus_half_at_one_from_rational_partial_sums() {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut sum = BigRational::zero();
    let mut poch = BigRational::one();
    let mut sign = BigRational::one();
    for r in 0..40u32 {
        sum += &sign / &poch;
        poch *= &half + BigRational::from_integer(BigInt::from(r));
        sign = -sign;
    }
    let remainder = (&sign / &poch).abs().to_f64().unwrap();
    assert!(remainder < 1e-30);
    let exact = sum.to_f64().unwrap();
    assert_rel(exact, -0.076_159_013_825_536_838_272_774_840_815, 1e-16);
    assert_rel(e_m_eval(o(-0.5), 1.0).unwrap(), exact, 1e-14);
}

#[test]
fn half_index_minimum() {
    let f = |x: f64| e_half_eval(o(0.0), x).unwrap();
    let x = golden_min(f, 0.0, 10.0);
    assert!((x - 4.099_620_619_565_149_667_574_811).abs() < 1e-6, "{x}");
    assert!((f(x) - -0.215_111_166_885_892_278_839_459_3).abs() < 1e-14, "{}", f(x));
}

#[test]
fn gain_curve_peak() {
    let x = golden_min(|x| -fel_gain_curve(x), 0.5, 6.0);
    assert!((x - 2.606_163_421_855_614_511_413).abs() < 1e-6, "{x}");
    assert!((fel_gain_curve(x) - 0.270_082_919_124_671_174_895_542).abs() < 1e-15);
}

#[test]
fn convolution_point_values() {
    let q = QuadratureSpec::default();
    let p = TruncationPolicy::default();
    let k1 = GaussianKernel::new(1.0).unwrap();
    let k05 = GaussianKernel::new(0.5).unwrap();
    let want = 1.702_135_569_214_211_827_672_928_178_768_844;
    assert_rel(convolve_gauss_direct(o(2.0), k1, 0.0, &q).unwrap(), want, 1e-13);
    assert_rel(convolve_gauss_hermite(o(2.0), k1, 0.0, &p).unwrap(), want, 1e-13);
    let want = 2.282_922_835_849_250_407_263_836_849_977;
    assert_rel(convolve_gauss_direct(o(3.0), k05, 1.0, &q).unwrap(), want, 1e-13);
    assert_rel(convolve_gauss_hermite(o(3.0), k05, 1.0, &p).unwrap(), want, 1e-13);
}

#[test]
fn lommel_point_value() {
    let s = neartrig::ntf::lommel_s(1.5, 0.5, 2.0).unwrap();
    assert_rel(6.0 * 2f64.powf(-2.5) * s, 0.818_026_929_880_738_728, 1e-12);
}
