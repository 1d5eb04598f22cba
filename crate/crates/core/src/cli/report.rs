use serde::{Deserialize, Serialize};

/// One named identity check.
///
/// Most checks bound an error from above. Lower-bound checks (a quantity that
/// must exceed `tolerance`) carry the measured quantity in `max_error`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub max_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// Passes when `max_error ≤ tolerance`; NaN fails.
    pub fn upper(name: impl Into<String>, max_error: f64, tolerance: f64) -> Check {
        Check { name: name.into(), max_error, tolerance, pass: max_error <= tolerance }
    }

    /// Passes when `value > bound`.
    pub fn lower(name: impl Into<String>, value: f64, bound: f64) -> Check {
        Check { name: name.into(), max_error: value, tolerance: bound, pass: value > bound }
    }

    pub fn line(&self) -> String {
        format!(
            "{} {} max_error={:.3e} tolerance={:.1e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.max_error,
            self.tolerance
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub overall_pass: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, checks: Vec<Check>) -> VerificationReport {
        let overall_pass = checks.iter().all(|c| c.pass);
        VerificationReport { suite: suite.into(), checks, overall_pass }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields are plain data")
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self.checks.iter().map(|c| c.line() + "\n").collect();
        out.push_str(&format!("suite {}: {}\n", self.suite, if self.overall_pass { "PASS" } else { "FAIL" }));
        out
    }
}

/// Largest entry; NaN propagates so that it cannot pass a check.
pub fn worst(errors: impl IntoIterator<Item = f64>) -> f64 {
    errors.into_iter().fold(0.0, |acc, e| if e.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(e) })
}
