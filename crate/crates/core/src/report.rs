//! Check records collected by the verification routines.

use crate::linalg::{Difference, Matrix};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedByTruncation,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedByTruncation => "skipped-by-truncation",
        })
    }
}

/// One verified identity. Failing records always carry a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub check: String,
    /// The statement being checked, in words.
    pub anchor: String,
    pub subjects: String,
    pub degrees: String,
    pub status: Status,
    pub witness: Option<String>,
}

/// Collects records for one suite run on one subject.
#[derive(Clone, Debug)]
pub struct Checks {
    pub suite: String,
    pub anchor: String,
    pub subjects: String,
    pub records: Vec<CheckRecord>,
}

impl Checks {
    pub fn new(suite: &str, anchor: &str, subjects: impl Into<String>) -> Self {
        Self { suite: suite.into(), anchor: anchor.into(), subjects: subjects.into(), records: Vec::new() }
    }

    fn push(&mut self, check: &str, degrees: String, status: Status, witness: Option<String>) {
        self.records.push(CheckRecord {
            suite: self.suite.clone(),
            check: check.into(),
            anchor: self.anchor.clone(),
            subjects: self.subjects.clone(),
            degrees,
            status,
            witness,
        });
    }

    pub fn pass(&mut self, check: &str, degrees: impl Into<String>) {
        self.push(check, degrees.into(), Status::Pass, None);
    }

    pub fn fail(&mut self, check: &str, degrees: impl Into<String>, witness: impl Into<String>) {
        self.push(check, degrees.into(), Status::Fail, Some(witness.into()));
    }

    pub fn skip(&mut self, check: &str, degrees: impl Into<String>, reason: impl Into<String>) {
        self.push(check, degrees.into(), Status::SkippedByTruncation, Some(reason.into()));
    }

    /// Records pass when `witness` is `None`.
    pub fn expect_none<W: fmt::Display>(&mut self, check: &str, degrees: impl Into<String>, witness: Option<W>) {
        match witness {
            None => self.pass(check, degrees),
            Some(w) => self.fail(check, degrees, w.to_string()),
        }
    }

    pub fn matrices_equal(&mut self, check: &str, degrees: impl Into<String>, lhs: &Matrix, rhs: &Matrix) {
        let d: Option<Difference> = lhs.first_difference(rhs);
        self.expect_none(check, degrees, d);
    }

    /// Records the outcome of a fallible step; errors become failures.
    pub fn result<T>(&mut self, check: &str, degrees: impl Into<String>, r: crate::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(check, degrees, e.to_string());
                None
            }
        }
    }

    /// Largest degree `≤ top` for which `build` succeeds, with skip records above it.
    pub fn fit<T>(&mut self, what: &str, top: usize, build: impl Fn(usize) -> crate::Result<T>) -> Option<(usize, T)> {
        let mut t = top;
        loop {
            match build(t) {
                Ok(v) => {
                    if t < top {
                        self.skip(what, format!("{}..={top}", t + 1), "dimension cap");
                    }
                    return Some((t, v));
                }
                Err(e @ crate::Error::TruncationTooLarge { .. }) => {
                    if t == 0 {
                        self.skip(what, format!("0..={top}"), e.to_string());
                        return None;
                    }
                    t -= 1;
                }
                Err(e) => {
                    self.fail(what, format!("n≤{t}"), e.to_string());
                    return None;
                }
            }
        }
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| r.status == Status::Fail).count()
    }

    pub fn into_records(self) -> Vec<CheckRecord> {
        self.records
    }
}
/// `name (source → target)`, the subject line of a measuring's checks.
pub fn measuring_subject(m: &crate::algebra::Measuring) -> String {
    format!("{} ({} → {})", m.name, m.source.name, m.target.name)
}

