use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    /// The result this check is about.
    #[serde(rename = "paper_ref")]
    pub anchor: String,
    pub status: Status,
    /// Largest absolute residual as a decimal string; `None` for exact checks.
    pub residual: Option<String>,
    pub params: Map<String, Value>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl CheckResult {
    /// An exact comparison; `detail` is kept when nonempty.
    pub fn exact(check: impl Into<String>, anchor: &str, pass: bool, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        let mut r = CheckResult::bare(check, anchor, if pass { Status::Pass } else { Status::Fail });
        if !detail.is_empty() {
            r.params.insert("detail".into(), Value::String(detail));
        }
        r
    }

    /// A numeric comparison, passing iff `residual < tol`.
    pub fn numeric(check: impl Into<String>, anchor: &str, residual: f64, tol: f64) -> Self {
        let pass = residual < tol;
        let mut r = CheckResult::bare(check, anchor, if pass { Status::Pass } else { Status::Fail });
        r.residual = Some(format!("{residual:.6e}"));
        r.params.insert("tol".into(), Value::from(tol));
        r
    }

    /// A check that could not be carried out.
    pub fn error(check: impl Into<String>, anchor: &str, err: impl std::fmt::Display) -> Self {
        let mut r = CheckResult::bare(check, anchor, Status::Fail);
        r.params.insert("error".into(), Value::String(err.to_string()));
        r
    }

    pub fn skipped(check: impl Into<String>, anchor: &str, reason: &str) -> Self {
        let mut r = CheckResult::bare(check, anchor, Status::Skipped);
        r.params.insert("reason".into(), Value::String(reason.into()));
        r
    }

    pub fn from_check(c: permgroup::Check, anchor: &str) -> Self {
        CheckResult::exact(c.name, anchor, c.pass, c.detail)
    }

    fn bare(check: impl Into<String>, anchor: &str, status: Status) -> Self {
        CheckResult {
            check: check.into(),
            anchor: anchor.to_string(),
            status,
            residual: None,
            params: Map::new(),
            seed: 0,
            elapsed_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn since(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The residual parsed back, for numeric checks.
    pub fn residual_value(&self) -> Option<f64> {
        self.residual.as_deref().and_then(|s| s.parse().ok())
    }
}

/// Runs `f` and stamps the elapsed time on its result.
pub fn timed(f: impl FnOnce() -> CheckResult) -> CheckResult {
    let start = Instant::now();
    let r = f();
    if r.elapsed_ms == 0 {
        r.since(start)
    } else {
        r
    }
}

/// Summary counts `(pass, fail, skipped)`.
pub fn tally(results: &[CheckResult]) -> (usize, usize, usize) {
    results.iter().fold((0, 0, 0), |(p, f, s), r| match r.status {
        Status::Pass => (p + 1, f, s),
        Status::Fail => (p, f + 1, s),
        Status::Skipped => (p, f, s + 1),
    })
}
