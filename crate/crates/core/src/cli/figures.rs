use super::curve::Curve;
use super::function::{linspace, sample, FnId, Function, Params};
use crate::error::{domain, Result};
use crate::ntf::{cos_m_eval, sin_m_eval, Order};

/// Points per figure curve.
pub const FIGURE_POINTS: usize = 1001;

/// Default abscissa range.
pub const DEFAULT_RANGE: (f64, f64) = (-20.0, 20.0);

/// Orders drawn in the two panels of figure 6.
pub const FIG6_ORDERS: [f64; 4] = [0.5, 1.0, 2.0, 3.0];

/// One CSV of a figure: `fig<id>_<label>.csv`.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureCurve {
    pub label: String,
    pub curve: Curve,
}

impl FigureCurve {
    pub fn file_name(&self, figure: u32) -> String {
        format!("fig{figure}_{}.csv", self.label)
    }
}

fn plain(id: FnId, m: Option<f64>, k: Option<u32>, range: (f64, f64)) -> Result<Curve> {
    let f = Function::new(id, Params { m, k, nu: None })?;
    let grid = linspace(range.0, range.1, FIGURE_POINTS)?;
    let values = sample(|x| f.eval(x), &grid)?;
    let params = f.params().into_iter().map(|(k, v)| (k.to_owned(), v)).collect();
    Curve::new(id.name(), params, grid, values)
}

fn labelled(label: String, curve: Result<Curve>) -> Result<FigureCurve> {
    Ok(FigureCurve { label, curve: curve? })
}

/// `−cos_m'(x)`; negation is exact, so the values are still library values.
fn minus_first_derivative(m: f64) -> Result<Curve> {
    let f = Function::new(FnId::CosMDeriv, Params { m: Some(m), k: Some(1), nu: None })?;
    let grid = linspace(DEFAULT_RANGE.0, DEFAULT_RANGE.1, FIGURE_POINTS)?;
    let values = sample(|x| f.eval(x).map(|v| -v), &grid)?;
    Curve::new(FnId::CosMDeriv.name(), vec![("m".into(), m), ("k".into(), 1.0), ("scale".into(), -1.0)], grid, values)
}

/// `e_m^{(1/2)}(−x)` against `x`.
fn e_half_reflected(m: f64) -> Result<Curve> {
    let order = Order::new(m)?;
    let grid = linspace(-1.0, 6.0, FIGURE_POINTS)?;
    let values = sample(|x| crate::gaussian_family::e_half_eval(order, -x), &grid)?;
    Curve::new(FnId::EHalf.name(), vec![("m".into(), m), ("argument_sign".into(), -1.0)], grid, values)
}

/// `(cos_m(t), sin_m(t))` for `t ∈ [0, 40]`.
fn locus(m: f64) -> Result<Curve> {
    let order = Order::new(m)?;
    let grid = linspace(0.0, 40.0, FIGURE_POINTS)?;
    let cos = sample(|t| cos_m_eval(order, t), &grid)?;
    let sin = sample(|t| sin_m_eval(order, t), &grid)?;
    Curve::with_columns("cos_m,sin_m", vec![("m".into(), m)], "t", grid, vec![("cos", cos), ("sin", sin)])
}

fn tag(m: f64) -> String {
    format!("m{m}")
}

/// Every curve named in the caption of figure `id`, in caption order.
///
/// Multi-panel figures prefix labels with the panel letter.
pub fn figure_curves(id: u32) -> Result<Vec<FigureCurve>> {
    let r = DEFAULT_RANGE;
    match id {
        1 => Ok(vec![
            labelled("cos_m3".into(), plain(FnId::CosM, Some(3.0), None, r))?,
            labelled("cos_m0.5".into(), plain(FnId::CosM, Some(0.5), None, r))?,
        ]),
        2 => {
            let mut out = Vec::new();
            for (panel, m) in [("a", 0.5), ("b", 5.0)] {
                out.push(labelled(format!("{panel}_cos_{}", tag(m)), plain(FnId::CosM, Some(m), None, r))?);
                out.push(labelled(format!("{panel}_sin_{}", tag(m)), plain(FnId::SinM, Some(m), None, r))?);
            }
            for (panel, m) in [("c", 0.5), ("d", 5.0)] {
                out.push(labelled(format!("{panel}_sin_{}", tag(m)), plain(FnId::SinM, Some(m), None, r))?);
                out.push(labelled(format!("{panel}_minus_cos_deriv_{}", tag(m)), minus_first_derivative(m))?);
            }
            Ok(out)
        }
        3 => [("a", 0.0), ("b", 0.5), ("c", 2.0)]
            .into_iter()
            .map(|(panel, m)| labelled(format!("{panel}_locus_{}", tag(m)), locus(m)))
            .collect(),
        4 => [-0.5, 0.5, 0.0]
            .into_iter()
            .map(|m| labelled(format!("e_{}", tag(m)), plain(FnId::EM, Some(m), None, (-4.0, 4.0))))
            .collect(),
        5 => [0.0, 0.5, 1.0].into_iter().map(|m| labelled(format!("e_half_{}", tag(m)), e_half_reflected(m))).collect(),
        6 => {
            let mut out = Vec::new();
            for m in FIG6_ORDERS {
                out.push(labelled(format!("left_cos_{}", tag(m)), plain(FnId::CosM, Some(m), None, r))?);
            }
            for m in FIG6_ORDERS {
                out.push(labelled(format!("right_sin_{}", tag(m)), plain(FnId::SinM, Some(m), None, r))?);
            }
            Ok(out)
        }
        _ => domain(format!("figure id must be 1..6, got {id}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_inventory() {
        let counts: Vec<usize> = (1..=6).map(|i| figure_curves(i).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 8, 3, 3, 3, 8]);
        assert!(figure_curves(0).is_err() && figure_curves(7).is_err());
        let f1 = figure_curves(1).unwrap();
        assert_eq!(f1[1].file_name(1), "fig1_cos_m0.5.csv");
        assert!(f1.iter().all(|c| c.curve.grid().len() == FIGURE_POINTS));
    }

    #[test]
    fn unit_circle_at_order_zero() {
        let f3 = figure_curves(3).unwrap();
        let c = &f3[0].curve;
        let worst = c
            .column("cos")
            .unwrap()
            .iter()
            .zip(c.column("sin").unwrap())
            .map(|(a, b)| (a * a + b * b - 1.0).abs())
            .fold(0.0, f64::max);
        assert!(worst <= 1e-12, "{worst}");
    }

    #[test]
    fn reflected_half_index_curve() {
        let f5 = figure_curves(5).unwrap();
        let c = &f5[0].curve;
        let i = 500;
        let want = crate::gaussian_family::e_half_eval(Order::new(0.0).unwrap(), -c.grid()[i]).unwrap();
        assert_eq!(c.column("value").unwrap()[i], want);
    }
}
