//! Uniform results of the checks in [`crate::verify`].

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// `{"check": name, "n": n, "status": .., "passed": bool, "witness": ..}`.
///
/// `passed` is false only for failures; a check that does not apply to `n`
/// is reported with status `not_applicable` and the reason as witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: Option<usize>,
    pub status: Status,
    pub passed: bool,
    pub witness: Option<Value>,
}

impl CheckReport {
    pub fn new(check: &str, n: Option<usize>, passed: bool, witness: Option<Value>) -> Self {
        let status = if passed { Status::Pass } else { Status::Fail };
        CheckReport { check: check.to_string(), n, status, passed, witness }
    }

    pub fn not_applicable(check: &str, n: Option<usize>, reason: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            n,
            status: Status::NotApplicable,
            passed: true,
            witness: Some(Value::String(reason.to_string())),
        }
    }
}

/// A fixed-width table, one row per report.
pub fn render_table(reports: &[CheckReport]) -> String {
    let width = reports.iter().map(|r| r.check.len()).max().unwrap_or(5).max(5);
    let mut out = String::new();
    let _ = writeln!(out, "{:<width$}  {:>2}  result", "check", "n");
    for r in reports {
        let n = r.n.map(|n| n.to_string()).unwrap_or_else(|| "-".into());
        let result = match r.status {
            Status::Pass => "pass".to_string(),
            Status::Fail => "FAIL".to_string(),
            Status::NotApplicable => match &r.witness {
                Some(Value::String(why)) => format!("not applicable ({why})"),
                _ => "not applicable".to_string(),
            },
        };
        let _ = writeln!(out, "{:<width$}  {n:>2}  {result}", r.check);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_and_json() {
        let rows = vec![
            CheckReport::new("kernel rank", Some(2), true, None),
            CheckReport::not_applicable("eigenvectors", Some(2), "needs n >= 4"),
            CheckReport::new("forks", None, false, Some(Value::from(3))),
        ];
        let t = render_table(&rows);
        assert_eq!(
            t,
            "check          n  result\nkernel rank    2  pass\neigenvectors   2  not applicable (needs n >= 4)\nforks          -  FAIL\n"
        );
        let j = serde_json::to_string(&rows[1]).unwrap();
        assert_eq!(j, r#"{"check":"eigenvectors","n":2,"status":"not_applicable","passed":true,"witness":"needs n >= 4"}"#);
    }
}
