//! Structured outcome of an identity check.

use std::collections::BTreeMap;
use std::fmt::{Display, Write as _};
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub n: u64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckedRange {
    pub from: u64,
    pub to: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, i64>,
    pub range: CheckedRange,
    /// Number of individual comparisons made.
    pub comparisons: u64,
    pub status: Status,
    pub first_failure: Option<Failure>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Equality ignoring elapsed time.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.identity == other.identity
            && self.params == other.params
            && self.range == other.range
            && self.comparisons == other.comparisons
            && self.status == other.status
            && self.first_failure == other.first_failure
    }

    pub fn param_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Accumulates comparisons and keeps the failure with the smallest `n`.
#[derive(Debug)]
pub struct ReportBuilder {
    identity: String,
    params: BTreeMap<String, i64>,
    range: Option<CheckedRange>,
    comparisons: u64,
    failure: Option<Failure>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(identity: impl Into<String>) -> Self {
        Self {
            identity: identity.into(),
            params: BTreeMap::new(),
            range: None,
            comparisons: 0,
            failure: None,
            started: Instant::now(),
        }
    }

    pub fn param(mut self, name: &str, value: impl Into<i64>) -> Self {
        self.params.insert(name.to_string(), value.into());
        self
    }

    pub fn compare<L, R>(&mut self, check: &str, n: u64, lhs: L, rhs: R) -> bool
    where
        L: PartialEq<R> + Display,
        R: Display,
    {
        self.comparisons += 1;
        self.range = Some(match self.range {
            None => CheckedRange { from: n, to: n },
            Some(r) => CheckedRange {
                from: r.from.min(n),
                to: r.to.max(n),
            },
        });
        let ok = lhs == rhs;
        if !ok && self.failure.as_ref().map_or(true, |f| n < f.n) {
            self.failure = Some(Failure {
                check: check.to_string(),
                n,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        ok
    }

    /// Records a boolean property at `n` as a comparison against `true`.
    pub fn holds(&mut self, check: &str, n: u64, ok: bool) -> bool {
        self.compare(check, n, ok, true)
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            identity: self.identity,
            params: self.params,
            range: self.range.unwrap_or(CheckedRange { from: 0, to: 0 }),
            comparisons: self.comparisons,
            status: if self.failure.is_some() { Status::Fail } else { Status::Pass },
            first_failure: self.failure,
            elapsed_ms: self.started.elapsed().as_secs_f64() * 1e3,
        }
    }
}

/// Fixed-width table, one report per line.
pub fn render_table(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<6} {:<22} {:<28} {:>11} {:>8} {:>10}",
        "status", "identity", "params", "range", "checks", "ms"
    );
    for r in reports {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let _ = writeln!(
            out,
            "{:<6} {:<22} {:<28} {:>11} {:>8} {:>10.1}",
            status,
            r.identity,
            r.param_string(),
            format!("{}..{}", r.range.from, r.range.to),
            r.comparisons,
            r.elapsed_ms
        );
        if let Some(f) = &r.first_failure {
            let _ = writeln!(out, "       first failure [{}] at n={}: {} != {}", f.check, f.n, f.lhs, f.rhs);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_smallest_failure() {
        let mut b = ReportBuilder::new("demo").param("t", 2);
        assert!(b.compare("a", 0, 1, 1));
        assert!(!b.compare("a", 7, 3, 4));
        assert!(!b.compare("b", 5, 1, 2));
        assert!(!b.compare("a", 9, 0, 1));
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        let f = r.first_failure.unwrap();
        assert_eq!((f.check.as_str(), f.n, f.lhs.as_str(), f.rhs.as_str()), ("b", 5, "1", "2"));
        assert_eq!(r.range, CheckedRange { from: 0, to: 9 });
        assert_eq!(r.comparisons, 4);
    }

    #[test]
    fn pass_iff_no_failure() {
        let mut b = ReportBuilder::new("ok");
        b.holds("x", 3, true);
        let r = b.finish();
        assert!(r.passed());
        assert!(r.first_failure.is_none());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["status"], "pass");
        assert!(render_table(&[r]).contains("PASS"));
    }
}
