//! Check records shared by every verification suite.

use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::RatFunc;
use crate::rep::{EntryMismatch, OperatorMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A resource cap stopped the check before it finished.
    CapExceeded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::CapExceeded => "cap-exceeded",
        }
    }
}

/// Outcome of one relation instance.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub suite: String,
    pub relation_id: String,
    pub status: Status,
    /// Proportionality constant for checks that compare up to a scalar.
    pub scalar_found: Option<RatFunc>,
    pub counterexample: Option<EntryMismatch>,
    /// For free-algebra checks: the offending word and its two coefficients.
    pub word_mismatch: Option<WordMismatch>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordMismatch {
    pub word: String,
    pub left: RatFunc,
    pub right: RatFunc,
}

impl CheckRecord {
    pub fn new(suite: &str, relation_id: &str, status: Status) -> Self {
        CheckRecord {
            suite: suite.into(),
            relation_id: relation_id.into(),
            status,
            scalar_found: None,
            counterexample: None,
            word_mismatch: None,
            note: None,
        }
    }

    pub fn pass(suite: &str, relation_id: &str) -> Self {
        Self::new(suite, relation_id, Status::Pass)
    }

    pub fn fail(suite: &str, relation_id: &str, note: impl Into<String>) -> Self {
        let mut r = Self::new(suite, relation_id, Status::Fail);
        r.note = Some(note.into());
        r
    }

    /// Entrywise comparison of two sides.
    pub fn compare(suite: &str, relation_id: &str, lhs: &OperatorMatrix, rhs: &OperatorMatrix) -> Self {
        if lhs.dim() != rhs.dim() {
            return Self::fail(suite, relation_id, "dimension mismatch");
        }
        match lhs.first_difference(rhs) {
            None => Self::pass(suite, relation_id),
            Some(m) => {
                let mut r = Self::new(suite, relation_id, Status::Fail);
                r.counterexample = Some(m);
                r
            }
        }
    }

    /// Checks that `m` vanishes.
    pub fn vanishes(suite: &str, relation_id: &str, m: &OperatorMatrix) -> Self {
        Self::compare(suite, relation_id, m, &OperatorMatrix::zero(m.dim()))
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_scalar(mut self, c: RatFunc) -> Self {
        self.scalar_found = Some(c);
        self
    }

    pub fn with_counterexample(mut self, m: EntryMismatch) -> Self {
        self.counterexample = Some(m);
        self
    }

    pub fn with_word_mismatch(mut self, word: String, left: RatFunc, right: RatFunc) -> Self {
        self.word_mismatch = Some(WordMismatch { word, left, right });
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Whether a failure points at a specific entry or word.
    pub fn is_located(&self) -> bool {
        self.counterexample.is_some() || self.word_mismatch.is_some()
    }
}

/// All records of a run, in a deterministic order.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn push(&mut self, r: CheckRecord) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, relation_id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.relation_id == relation_id)
    }
}

impl FromIterator<CheckRecord> for Report {
    fn from_iter<I: IntoIterator<Item = CheckRecord>>(iter: I) -> Self {
        Report { records: iter.into_iter().collect() }
    }
}
