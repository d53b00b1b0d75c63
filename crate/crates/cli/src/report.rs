//! Check records and the report that every command prints.

use std::fmt::Write as _;

use serde::Serialize;

/// Bumped whenever the JSON layout changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Mismatch,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Check {
    /// A comparison whose status is `lhs == rhs`.
    pub fn compare(name: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Check {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        let status = if lhs == rhs { Status::Ok } else { Status::Mismatch };
        Check { name: name.into(), status, lhs, rhs, note: None, timing_ms: None }
    }

    /// A check with an explicit verdict.
    pub fn verdict(name: impl Into<String>, ok: bool, lhs: impl ToString, rhs: impl ToString) -> Check {
        let status = if ok { Status::Ok } else { Status::Mismatch };
        Check { name: name.into(), status, lhs: lhs.to_string(), rhs: rhs.to_string(), note: None, timing_ms: None }
    }

    pub fn skipped(name: impl Into<String>, why: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Skipped, lhs: String::new(), rhs: String::new(), note: Some(why.into()), timing_ms: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }

    pub fn ok(&self) -> bool {
        self.status != Status::Mismatch
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl Report {
    pub fn new(command: Vec<String>, checks: Vec<Check>) -> Report {
        let status = if checks.iter().all(Check::ok) { Status::Ok } else { Status::Mismatch };
        Report { schema_version: SCHEMA_VERSION, command, checks, status }
    }

    pub fn ok(&self) -> bool {
        self.status == Status::Ok
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "[{}] {}", c.status.label(), c.name);
            if !c.lhs.is_empty() || !c.rhs.is_empty() {
                let _ = writeln!(out, "    lhs: {}", c.lhs);
                let _ = writeln!(out, "    rhs: {}", c.rhs);
            }
            if let Some(note) = &c.note {
                let _ = writeln!(out, "    note: {note}");
            }
            if let Some(t) = c.timing_ms {
                let _ = writeln!(out, "    time: {t:.1} ms");
            }
        }
        let failed = self.checks.iter().filter(|c| !c.ok()).count();
        let skipped = self.checks.iter().filter(|c| c.status == Status::Skipped).count();
        let _ = writeln!(out, "{}: {} checks, {failed} mismatched, {skipped} skipped", self.status.label(), self.checks.len());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_ignores_skipped() {
        let r = Report::new(vec![], vec![Check::compare("a", 1, 1), Check::skipped("b", "too large")]);
        assert!(r.ok());
        let r = Report::new(vec![], vec![Check::compare("a", 1, 2)]);
        assert!(!r.ok());
    }
}
