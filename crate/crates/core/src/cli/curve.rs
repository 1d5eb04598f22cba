use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A sampled function: a strictly increasing abscissa and one or more
/// same-length columns of finite values.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    fn_label: String,
    params: Vec<(String, f64)>,
    abscissa: &'static str,
    grid: Vec<f64>,
    columns: Vec<(&'static str, Vec<f64>)>,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

impl Curve {
    /// `x,value` curve of one function.
    pub fn new(fn_label: &str, params: Vec<(String, f64)>, grid: Vec<f64>, values: Vec<f64>) -> Result<Curve> {
        Curve::with_columns(fn_label, params, "x", grid, vec![("value", values)])
    }

    pub fn with_columns(
        fn_label: &str,
        params: Vec<(String, f64)>,
        abscissa: &'static str,
        grid: Vec<f64>,
        columns: Vec<(&'static str, Vec<f64>)>,
    ) -> Result<Curve> {
        if grid.is_empty() || columns.is_empty() {
            return invalid("a curve needs a grid and at least one column");
        }
        if !grid.windows(2).all(|w| w[0] < w[1]) || !grid.iter().all(|x| x.is_finite()) {
            return invalid("curve grid must be finite and strictly increasing");
        }
        for (name, values) in &columns {
            if values.len() != grid.len() {
                return invalid(format!("column {name} has {} values for {} grid points", values.len(), grid.len()));
            }
            if let Some(i) = values.iter().position(|v| !v.is_finite()) {
                return invalid(format!("column {name} is not finite at {}", grid[i]));
            }
        }
        Ok(Curve { fn_label: fn_label.to_owned(), params, abscissa, grid, columns })
    }

    pub fn fn_label(&self) -> &str {
        &self.fn_label
    }

    pub fn params(&self) -> &[(String, f64)] {
        &self.params
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns.iter().find(|(n, _)| *n == name).map(|(_, v)| v.as_slice())
    }

    /// `m=0.5,k=1`; empty without parameters.
    pub fn params_field(&self) -> String {
        let parts: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(",")
    }

    /// Comment line, header and one row per grid point, LF terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(48 * (self.grid.len() + 2));
        let _ = writeln!(out, "# fn={} params={} generated-by=neartrig", self.fn_label, self.params_field());
        out.push_str(self.abscissa);
        for (name, _) in &self.columns {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for (i, x) in self.grid.iter().enumerate() {
            out.push_str(&format_value(*x));
            for (_, values) in &self.columns {
                out.push(',');
                out.push_str(&format_value(values[i]));
            }
            out.push('\n');
        }
        out
    }
}

/// Round-trip form, 17 significant digits.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

/// A CSV file read back under the curve format.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedCsv {
    pub fn_label: String,
    pub params: Vec<(String, String)>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl ParsedCsv {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }
}

/// Reads and validates a curve CSV: the comment line, an `x,value` or
/// `t,cos,sin` header, LF endings, and a strictly increasing first column.
// negated comparisons reject NaN
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn parse_csv(text: &str) -> Result<ParsedCsv> {
    if text.contains('\r') {
        return invalid("CSV must use LF line endings");
    }
    let mut lines = text.lines();
    let first = lines.next().unwrap_or_default();
    let Some(meta) = first.strip_prefix("# fn=").and_then(|r| r.strip_suffix(" generated-by=neartrig")) else {
        return invalid(format!("bad comment line: {first}"));
    };
    let Some((fn_label, params)) = meta.split_once(" params=") else {
        return invalid(format!("comment line lacks params: {first}"));
    };
    let mut parsed_params = Vec::new();
    for kv in params.split(',').filter(|s| !s.is_empty()) {
        let Some((k, v)) = kv.split_once('=') else {
            return invalid(format!("bad parameter {kv}"));
        };
        parsed_params.push((k.to_owned(), v.to_owned()));
    }
    let header: Vec<String> = lines.next().unwrap_or_default().split(',').map(str::to_owned).collect();
    if header != ["x", "value"] && header != ["t", "cos", "sin"] {
        return invalid(format!("unknown header {}", header.join(",")));
    }
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for line in lines {
        let row = line
            .split(',')
            .map(|c| c.parse::<f64>().map_err(|_| Error::Domain(format!("bad number '{c}'"))))
            .collect::<Result<Vec<f64>>>()?;
        if row.len() != header.len() {
            return invalid(format!("row has {} fields, header has {}", row.len(), header.len()));
        }
        if let Some(prev) = rows.last() {
            if !(prev[0] < row[0]) {
                return invalid("first column must be strictly increasing");
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return invalid("CSV has no rows");
    }
    Ok(ParsedCsv { fn_label: fn_label.to_owned(), params: parsed_params, header, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Curve {
        Curve::new("cos_m", vec![("m".into(), 0.5), ("k".into(), 1.0)], vec![-1.0, 0.0, 2.5], vec![0.1, 1.0, 1.0 / 3.0]).unwrap()
    }

    #[test]
    fn csv_layout() {
        let csv = sample().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "# fn=cos_m params=m=0.5,k=1 generated-by=neartrig");
        assert_eq!(lines[1], "x,value");
        assert_eq!(lines[2], "-1.0000000000000000e0,1.0000000000000001e-1");
        assert_eq!(lines.len(), 5);
        assert!(csv.ends_with('\n') && !csv.contains('\r'));
    }

    #[test]
    fn csv_round_trips_exactly() {
        let c = sample();
        let p = parse_csv(&c.to_csv()).unwrap();
        assert_eq!(p.fn_label, "cos_m");
        assert_eq!(p.params, vec![("m".into(), "0.5".into()), ("k".into(), "1".into())]);
        assert_eq!(p.column("x").unwrap(), c.grid());
        assert_eq!(p.column("value").unwrap(), c.column("value").unwrap());
    }

    #[test]
    fn invariants() {
        assert!(Curve::new("f", vec![], vec![0.0, 0.0], vec![1.0, 1.0]).is_err());
        assert!(Curve::new("f", vec![], vec![0.0, 1.0], vec![1.0]).is_err());
        assert!(Curve::new("f", vec![], vec![0.0, 1.0], vec![1.0, f64::NAN]).is_err());
        assert_eq!(Curve::new("f", vec![], vec![0.0], vec![1.0]).unwrap().params_field(), "");
    }

    #[test]
    fn parser_rejects_malformed_files() {
        let good = sample().to_csv();
        assert!(parse_csv(&good.replace('\n', "\r\n")).is_err());
        assert!(parse_csv(&good.replace("generated-by=neartrig", "")).is_err());
        assert!(parse_csv(&good.replace("x,value", "x,y")).is_err());
        assert!(parse_csv("# fn=f params= generated-by=neartrig\nx,value\n").is_err());
        assert!(parse_csv("# fn=f params= generated-by=neartrig\nx,value\n1,2\n0,3\n").is_err());
        assert!(parse_csv("# fn=f params= generated-by=neartrig\nx,value\n1,2,3\n").is_err());
    }
}
