//! Versioned JSON reports.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// A computed result with no pass criterion attached.
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub status: Status,
    pub data: Value,
    /// One-line human summaries for text output.
    #[serde(skip)]
    pub summary: Vec<String>,
}

impl Check {
    pub fn new(name: &str, paper_ref: &str, status: Status, data: Value) -> Check {
        Check { name: name.into(), paper_ref: paper_ref.into(), status, data, summary: Vec::new() }
    }

    pub fn with_summary(mut self, line: impl Into<String>) -> Check {
        self.summary.push(line.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub config: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are plain JSON");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = writeln!(s, "[{}] {}", c.status.label(), c.name);
            for line in &c.summary {
                let _ = writeln!(s, "  {line}");
            }
        }
        s
    }
}
