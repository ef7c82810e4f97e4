//! Verification records shared by every suite.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// The outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    /// Stable identifier, e.g. `"capelli/N=2/k=2/words"`.
    pub id: String,
    /// The statement under test, named by content.
    pub anchor: String,
    pub passed: bool,
    /// Failures of conjectural statements are findings, not defects.
    pub conjecture: bool,
    /// First failing component and its residual.
    pub witness: Option<String>,
    /// Named values computed along the way (characters, ranks, counts).
    pub values: Vec<(String, String)>,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, passed: bool) -> Self {
        CheckRecord {
            id: id.into(),
            anchor: anchor.into(),
            passed,
            conjecture: false,
            witness: None,
            values: Vec::new(),
        }
    }

    pub fn pass(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        Self::new(id, anchor, true)
    }

    pub fn fail(id: impl Into<String>, anchor: impl Into<String>, witness: impl Into<String>) -> Self {
        let mut r = Self::new(id, anchor, false);
        r.witness = Some(witness.into());
        r
    }

    /// A record from an optional witness: `None` passes.
    pub fn from_witness(id: impl Into<String>, anchor: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(id, anchor),
            Some(w) => Self::fail(id, anchor, w),
        }
    }

    /// A record from a computation that may itself fail; errors become
    /// failing records carrying the error text.
    pub fn from_result<E: ToString>(
        id: impl Into<String>,
        anchor: impl Into<String>,
        r: Result<Option<String>, E>,
    ) -> Self {
        match r {
            Ok(w) => Self::from_witness(id, anchor, w),
            Err(e) => Self::fail(id, anchor, e.to_string()),
        }
    }

    pub fn conjectural(mut self) -> Self {
        self.conjecture = true;
        self
    }

    pub fn with_value(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.values.push((key.into(), value.to_string()));
        self
    }
}

/// An ordered list of records produced by one suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, r: CheckRecord) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    /// Failing records of non-conjectural statements.
    pub fn hard_failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed && !r.conjecture)
    }

    pub fn conjecture_failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed && r.conjecture)
    }
}
