//! Verification reports and their markdown, CSV and JSON renderings.

use super::compute::Table;
use super::suites::SUITES;
use crate::report::{CheckRecord, Status};
use serde::Serialize;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub alias: String,
    pub subjects: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub summary: Vec<SuiteSummary>,
    pub records: Vec<CheckRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Md,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "md" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(crate::Error::UnknownName(format!("format {s}"))),
        }
    }
}

impl VerificationReport {
    /// Groups records by suite, in registry order.
    pub fn new(records: Vec<CheckRecord>) -> Self {
        let mut summary = Vec::new();
        for s in SUITES {
            let mine: Vec<&CheckRecord> = records.iter().filter(|r| r.suite == s.id).collect();
            if mine.is_empty() {
                continue;
            }
            let mut subjects: Vec<&str> = mine.iter().map(|r| r.subjects.as_str()).collect();
            subjects.dedup();
            let count = |st| mine.iter().filter(|r| r.status == st).count();
            summary.push(SuiteSummary {
                suite: s.id.into(),
                alias: s.alias.into(),
                subjects: subjects.len(),
                pass: count(Status::Pass),
                fail: count(Status::Fail),
                skipped: count(Status::SkippedByTruncation),
            });
        }
        Self { summary, records }
    }

    pub fn failures(&self) -> usize {
        self.summary.iter().map(|s| s.fail).sum()
    }

    pub fn failing(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Md => self.markdown(true),
            Format::Csv => self.csv(),
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
        }
    }

    fn summary_md(&self, out: &mut String) {
        out.push_str("| suite | alias | subjects | pass | fail | skipped |\n|---|---|---|---|---|---|\n");
        for s in &self.summary {
            let _ = writeln!(out, "| {} | {} | {} | {} | {} | {} |", s.suite, s.alias, s.subjects, s.pass, s.fail, s.skipped);
        }
    }

    /// Summary, failures and skips; with `full`, every record as well.
    pub fn markdown(&self, full: bool) -> String {
        let mut out = String::from("# Verification report\n\n");
        self.summary_md(&mut out);
        let total = |st| self.records.iter().filter(|r| r.status == st).count();
        let _ = writeln!(
            out,
            "\n{} checks: {} pass, {} fail, {} skipped-by-truncation.\n",
            self.records.len(),
            total(Status::Pass),
            total(Status::Fail),
            total(Status::SkippedByTruncation)
        );
        for (title, st) in [("Failures", Status::Fail), ("Skipped by truncation", Status::SkippedByTruncation)] {
            let rows: Vec<&CheckRecord> = self.records.iter().filter(|r| r.status == st).collect();
            if rows.is_empty() {
                continue;
            }
            let _ = writeln!(out, "## {title}\n");
            for r in rows {
                let _ = writeln!(out, "- `{}` {} [{}] {}: {}", r.suite, r.subjects, r.degrees, r.check, r.witness.as_deref().unwrap_or(""));
            }
            out.push('\n');
        }
        if full {
            out.push_str("## Checks\n\n| suite | statement | subjects | check | degrees | status |\n|---|---|---|---|---|---|\n");
            for r in &self.records {
                let _ = writeln!(out, "| {} | {} | {} | {} | {} | {} |", r.suite, md_cell(&r.anchor), md_cell(&r.subjects), md_cell(&r.check), r.degrees, r.status);
            }
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["suite", "statement", "subjects", "check", "degrees", "status", "witness"]).expect("in-memory write");
        for r in &self.records {
            let status = r.status.to_string();
            w.write_record([&r.suite, &r.anchor, &r.subjects, &r.check, &r.degrees, &status, r.witness.as_deref().unwrap_or("")]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Md => {
                let mut out = format!("### {}\n\ncertified: {}\n\n| {} |\n|{}\n", self.title, self.certified, self.columns.join(" | "), "---|".repeat(self.columns.len()));
                for r in &self.rows {
                    let _ = writeln!(out, "| {} |", r.join(" | "));
                }
                out
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
            }
            Format::Json => serde_json::to_string_pretty(self).expect("table serializes") + "\n",
        }
    }
}
