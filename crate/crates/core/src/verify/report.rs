use std::fmt;

use serde::Serialize;

use crate::algebra::SuperAlgebra;
use crate::field::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedHypothesis,
    /// Observations that are neither claims nor failures (discrepancy notes,
    /// closure-mode comparisons). Never affects the exit status.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::SkippedHypothesis => "skipped-hypothesis",
            Self::Info => "info",
        })
    }
}

/// Named values that let a check be replayed in isolation, plus a free-form note.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub items: Vec<(String, String)>,
    pub note: Option<String>,
}

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn note(text: impl Into<String>) -> Self {
        Self {
            items: Vec::new(),
            note: Some(text.into()),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.items.push((key.into(), value.to_string()));
        self
    }

    /// Adds an element as `label (coords)`.
    pub fn element(self, key: impl Into<String>, algebra: &SuperAlgebra, v: &Vector) -> Self {
        let shown = format!("{} {}", algebra.format_element(v), v);
        self.with(key, shown)
    }

    pub fn and_note(mut self, text: impl Into<String>) -> Self {
        self.note = Some(text.into());
        self
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty() && self.note.is_none()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.items.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if let Some(note) = &self.note {
            parts.push(note.clone());
        }
        if parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&parts.join("; "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub instance: String,
    pub claim: String,
    pub status: Status,
    pub witness: Witness,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}",
            self.suite, self.instance, self.claim, self.status, self.witness
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub info: usize,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends checks for one `(suite, instance)` pair.
    pub fn scope<'a>(&'a mut self, suite: &str, instance: &str) -> Scope<'a> {
        Scope {
            report: self,
            suite: suite.to_string(),
            instance: instance.to_string(),
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::SkippedHypothesis => t.skipped += 1,
                Status::Info => t.info += 1,
            }
        }
        t
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, instance: &str, claim: &str) -> Option<&Check> {
        self.checks
            .iter()
            .find(|c| c.instance == instance && c.claim == claim)
    }

    /// One tab-separated line per check, then a summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        let t = self.tally();
        out.push_str(&format!(
            "summary\tpass={}\tfail={}\tskipped-hypothesis={}\tinfo={}\n",
            t.pass, t.fail, t.skipped, t.info
        ));
        out
    }
}

pub struct Scope<'a> {
    report: &'a mut Report,
    suite: String,
    instance: String,
}

impl Scope<'_> {
    pub fn record(&mut self, claim: &str, status: Status, witness: Witness) -> Status {
        self.report.checks.push(Check {
            suite: self.suite.clone(),
            instance: self.instance.clone(),
            claim: claim.to_string(),
            status,
            witness,
        });
        status
    }

    /// Pass with `ok`'s note, or fail with `bad` as the witness.
    pub fn check(&mut self, claim: &str, result: Result<Witness, Witness>) -> Status {
        match result {
            Ok(w) => self.record(claim, Status::Pass, w),
            Err(w) => self.record(claim, Status::Fail, w),
        }
    }

    pub fn pass(&mut self, claim: &str, witness: Witness) -> Status {
        self.record(claim, Status::Pass, witness)
    }

    pub fn fail(&mut self, claim: &str, witness: Witness) -> Status {
        self.record(claim, Status::Fail, witness)
    }

    pub fn skip(&mut self, claim: &str, reason: impl Into<String>) -> Status {
        self.record(claim, Status::SkippedHypothesis, Witness::note(reason))
    }

    pub fn info(&mut self, claim: &str, witness: Witness) -> Status {
        self.record(claim, Status::Info, witness)
    }
}
