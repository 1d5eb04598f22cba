use proptest::prelude::*;

use neartrig::cli::curve::{parse_csv, Curve};
use neartrig::core_math::{hermite2, pochhammer};
use neartrig::gaussian_family::{e_half_eval, e_m_eval, os_eval, PowerOrder};
use neartrig::ntf::{cos_m_deriv, cos_m_eval, exp_m_eval, sin_m_deriv, sin_m_eval, DerivOrder, Order};
use neartrig::transforms::fel_gain_curve;

fn o(m: f64) -> Order {
    Order::new(m).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

proptest! {
    #[test]
    fn cos_even_sin_odd(m in -0.95f64..8.0, x in -40.0f64..40.0) {
        prop_assert_eq!(cos_m_eval(o(m), x).unwrap(), cos_m_eval(o(m), -x).unwrap());
        prop_assert_eq!(sin_m_eval(o(m), x).unwrap(), -sin_m_eval(o(m), -x).unwrap());
    }

    #[test]
    fn exp_m_parts(m in -0.95f64..8.0, x in -40.0f64..40.0) {
        let z = exp_m_eval(o(m), x).unwrap();
        prop_assert!((z.re - cos_m_eval(o(m), x).unwrap()).abs() <= 1e-13);
        prop_assert!((z.im - sin_m_eval(o(m), x).unwrap()).abs() <= 1e-13);
    }

    #[test]
    fn order_zero_is_the_unit_circle(x in -200.0f64..200.0) {
        let (c, s) = (cos_m_eval(o(0.0), x).unwrap(), sin_m_eval(o(0.0), x).unwrap());
        prop_assert!((c - x.cos()).abs() <= 1e-14 && (s - x.sin()).abs() <= 1e-14);
    }

    #[test]
    fn bounded_by_one_for_positive_order(m in 0.0f64..8.0, x in -60.0f64..60.0) {
        prop_assert!(cos_m_eval(o(m), x).unwrap().abs() <= 1.0 + 1e-15);
    }

    #[test]
    fn derivative_parity(m in -0.5f64..6.0, x in 0.0f64..12.0, k in 0u32..4) {
        let k = DerivOrder::new(k).unwrap();
        let sign = if k.value() % 2 == 0 { 1.0 } else { -1.0 };
        let (a, b) = (cos_m_deriv(o(m), k, x).unwrap(), cos_m_deriv(o(m), k, -x).unwrap());
        prop_assert!((a - sign * b).abs() <= 1e-14 * a.abs().max(1.0));
        let (a, b) = (sin_m_deriv(o(m), k, x).unwrap(), sin_m_deriv(o(m), k, -x).unwrap());
        prop_assert!((a + sign * b).abs() <= 1e-14 * a.abs().max(1.0));
    }

    #[test]
    fn first_derivative_of_cos_zero_is_minus_sin(x in -30.0f64..30.0) {
        let d = cos_m_deriv(o(0.0), DerivOrder::new(1).unwrap(), x).unwrap();
        prop_assert!((d + x.sin()).abs() <= 1e-13);
    }

    #[test]
    fn os_at_nu_one_is_cos_m(m in -0.95f64..6.0, x in -30.0f64..30.0) {
        let v = os_eval(o(m), PowerOrder::new(1.0).unwrap(), x).unwrap();
        prop_assert!((v - cos_m_eval(o(m), x).unwrap()).abs() <= 1e-13);
    }

    #[test]
    fn os_is_even(m in -0.5f64..6.0, nu in 0.25f64..4.0, x in 0.0f64..30.0) {
        let nu = PowerOrder::new(nu).unwrap();
        prop_assert_eq!(os_eval(o(m), nu, x).unwrap(), os_eval(o(m), nu, -x).unwrap());
    }

    #[test]
    fn e_zero_is_gaussian(x in -8.0f64..8.0) {
        prop_assert!((e_m_eval(o(0.0), x).unwrap() - (-x * x).exp()).abs() <= 1e-15);
    }

    #[test]
    fn e_m_is_even_and_one_at_zero(m in -0.95f64..8.0, x in 0.0f64..20.0) {
        prop_assert_eq!(e_m_eval(o(m), 0.0).unwrap(), 1.0);
        prop_assert_eq!(e_m_eval(o(m), x).unwrap(), e_m_eval(o(m), -x).unwrap());
    }

    #[test]
    fn e_half_is_positive_on_the_left(m in 0.0f64..4.0, x in -10.0f64..0.0) {
        prop_assert!(e_half_eval(o(m), x).unwrap() > 0.0);
    }

    #[test]
    fn pochhammer_composition(d in 0.01f64..10.0, r in 0u32..12, s in 0u32..12) {
        let (r, s) = (r as f64, s as f64);
        let lhs = pochhammer(d, r).unwrap() * pochhammer(d + r, s).unwrap();
        prop_assert!(rel(lhs, pochhammer(d, r + s).unwrap()) <= 1e-12);
    }

    #[test]
    fn pochhammer_duplication(x in 0.1f64..10.0, n in 0u32..14) {
        let n = n as f64;
        let lhs = 4f64.powf(n) * pochhammer(x / 2.0, n).unwrap() * pochhammer((x + 1.0) / 2.0, n).unwrap();
        prop_assert!(rel(lhs, pochhammer(x, 2.0 * n).unwrap()) <= 1e-12);
    }

    #[test]
    fn hermite_recurrence(x in -3.0f64..3.0, y in -2.0f64..2.0, n in 1u32..30) {
        let lhs = hermite2(n + 1, x, y);
        let rhs = x * hermite2(n, x, y) + 2.0 * n as f64 * y * hermite2(n - 1, x, y);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * hermite2(n + 1, x.abs(), y.abs()));
    }

    #[test]
    fn gain_curve_is_odd(x in -50.0f64..50.0) {
        prop_assert_eq!(fel_gain_curve(x), -fel_gain_curve(-x));
    }

    #[test]
    fn csv_round_trip(values in prop::collection::vec(-1e300f64..1e300, 2..40), m in -0.9f64..10.0) {
        let grid: Vec<f64> = (0..values.len()).map(|i| i as f64 * 0.5 - 3.0).collect();
        let curve = Curve::new("cos_m", vec![("m".into(), m)], grid.clone(), values.clone()).unwrap();
        let parsed = parse_csv(&curve.to_csv()).unwrap();
        prop_assert_eq!(parsed.column("x").unwrap(), grid);
        prop_assert_eq!(parsed.column("value").unwrap(), values);
    }
}
