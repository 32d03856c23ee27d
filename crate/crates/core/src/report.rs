//! Structured check results, rendered as text or JSON.
//!
//! Field names are stable: `check`, `status`, `witness`, `reference`, plus
//! `notes` and nested `children`. Output contains no timings, so a report is
//! byte-identical across runs with the same inputs.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational output, no pass/fail meaning.
    Info,
    /// A value surfaced for attention, such as a printed alternative or a
    /// conjecture.
    Flagged,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
            Status::Flagged => "FLAG",
        }
    }

    pub fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    pub witness: Value,
    /// The statement being checked.
    pub reference: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Check>,
}

impl Check {
    pub fn new(check: impl Into<String>, status: Status, reference: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            status,
            witness: Value::Null,
            reference: reference.into(),
            notes: Vec::new(),
            children: Vec::new(),
        }
    }

    /// A check whose status is the conjunction of its children.
    pub fn group(
        check: impl Into<String>,
        reference: impl Into<String>,
        children: Vec<Check>,
    ) -> Self {
        let status = Status::of(children.iter().all(Check::passed));
        Self {
            children,
            ..Self::new(check, status, reference)
        }
    }

    pub fn witness(mut self, w: Value) -> Self {
        self.witness = w;
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    /// No `Fail` here or below.
    pub fn passed(&self) -> bool {
        self.status != Status::Fail && self.children.iter().all(Check::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.render(0, &mut out);
        out
    }

    fn render(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        out.push_str(&format!("{pad}[{}] {}", self.status.label(), self.check));
        if !self.reference.is_empty() {
            out.push_str(&format!(" ({})", self.reference));
        }
        out.push('\n');
        if !self.witness.is_null() {
            out.push_str(&format!("{pad}    witness: {}\n", self.witness));
        }
        for n in &self.notes {
            out.push_str(&format!("{pad}    note: {n}\n"));
        }
        for c in &self.children {
            c.render(depth + 1, out);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub title: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Truncation degree of the complexes involved, when one applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<u32>,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>, checks: Vec<Check>) -> Self {
        let status = Status::of(checks.iter().all(Check::passed));
        Self {
            title: title.into(),
            seed: None,
            truncation: None,
            status,
            checks,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_truncation(mut self, t: u32) -> Self {
        self.truncation = Some(t);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.title, self.status.label());
        if let Some(s) = self.seed {
            out.push_str(&format!("seed: {s}\n"));
        }
        if let Some(t) = self.truncation {
            out.push_str(&format!("truncation: {t}\n"));
        }
        for c in &self.checks {
            c.render(0, &mut out);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn status_propagates() {
        let ok = Check::new("a", Status::Pass, "x");
        let bad = Check::new("b", Status::Fail, "y").witness(json!({"n": 1}));
        let g = Check::group("g", "", vec![ok.clone(), bad]);
        assert!(!g.passed());
        assert_eq!(g.status, Status::Fail);
        let r = Report::new("r", vec![ok, Check::new("f", Status::Flagged, "")]);
        assert!(r.passed());
        let j = r.to_json();
        assert!(j.contains("\"check\": \"a\"") && j.contains("\"status\": \"flagged\""));
        assert!(r.to_text().contains("[FLAG] f"));
    }
}
