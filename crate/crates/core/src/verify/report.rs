use std::time::Instant;

use serde::{Deserialize, Serialize};

/// At most this many failing cases are kept per report.
pub const MAX_EXEMPLARS: usize = 8;

/// One failing check: what was evaluated and the two sides that disagreed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exemplar {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl Exemplar {
    pub fn new(input: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Exemplar {
            input: input.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub frame: String,
    pub window: i64,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub exemplars: Vec<Exemplar>,
    pub seed: u64,
    /// `None` when timing is suppressed for reproducible output.
    pub elapsed_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.failed == 0
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} [{}] window={} checked={} passed={} failed={} -> {}",
            self.suite,
            self.frame,
            self.window,
            self.checked,
            self.passed,
            self.failed,
            if self.passes() { "PASS" } else { "FAIL" }
        )
    }

    /// Folds another report's counts, exemplars and notes into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.passed += other.passed;
        self.failed += other.failed;
        for e in other.exemplars {
            if self.exemplars.len() < MAX_EXEMPLARS {
                self.exemplars.push(e);
            }
        }
        self.notes.extend(other.notes);
    }

    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

/// Outcome of a single check; `Err` carries the exemplar.
pub type Check = std::result::Result<(), Exemplar>;

/// Accumulates check outcomes in a fixed order.
pub struct Tally {
    suite: String,
    frame: String,
    window: i64,
    seed: u64,
    start: Instant,
    checked: u64,
    failed: u64,
    exemplars: Vec<Exemplar>,
    notes: Vec<String>,
}

impl Tally {
    pub fn new(suite: &str, frame: impl Into<String>, window: i64, seed: u64) -> Self {
        Tally {
            suite: suite.to_string(),
            frame: frame.into(),
            window,
            seed,
            start: Instant::now(),
            checked: 0,
            failed: 0,
            exemplars: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn record(&mut self, outcome: Check) {
        self.checked += 1;
        if let Err(e) = outcome {
            self.failed += 1;
            if self.exemplars.len() < MAX_EXEMPLARS {
                self.exemplars.push(e);
            }
        }
    }

    pub fn record_all(&mut self, outcomes: impl IntoIterator<Item = Check>) {
        for o in outcomes {
            self.record(o);
        }
    }

    /// Records `lhs == rhs`.
    pub fn compare<T: PartialEq + std::fmt::Display>(&mut self, input: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.record(check_eq(input, lhs, rhs));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            suite: self.suite,
            frame: self.frame,
            window: self.window,
            checked: self.checked,
            passed: self.checked - self.failed,
            failed: self.failed,
            exemplars: self.exemplars,
            seed: self.seed,
            elapsed_ms: Some(self.start.elapsed().as_millis() as u64),
            notes: self.notes,
        }
    }
}

pub fn check_eq<T: PartialEq + std::fmt::Display>(input: impl FnOnce() -> String, lhs: &T, rhs: &T) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Exemplar::new(input(), lhs, rhs))
    }
}

pub fn check_that(ok: bool, input: impl FnOnce() -> String, lhs: impl FnOnce() -> String, rhs: &str) -> Check {
    if ok {
        Ok(())
    } else {
        Err(Exemplar::new(input(), lhs(), rhs))
    }
}

/// Turns an evaluation error into a failed check.
pub fn check_result(input: impl FnOnce() -> String, r: crate::error::Result<Check>) -> Check {
    r.unwrap_or_else(|e| Err(Exemplar::new(input(), format!("error: {e}"), "no error")))
}
