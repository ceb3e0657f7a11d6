//! Exhaustive finite checks of the structural lemmas, runnable as suites.
//!
//! Every suite recomputes what it needs through [`oracle`], which works on
//! explicit gap lists, rather than through the bitmask paths it is checking.

mod kinship;
mod lemmas;
pub mod oracle;
mod sumset;

use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

pub use kinship::check_kinship;
pub use lemmas::{check_even_members, check_gap_bound, check_max_q};
pub use sumset::{check_sumset_lemma, sumset, SumsetReport};

/// A failed predicate with the objects that fail it, in canonical text form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub predicate: String,
    pub subjects: Vec<String>,
}

impl Witness {
    pub fn new(predicate: &str, subjects: impl IntoIterator<Item = impl ToString>) -> Self {
        Witness {
            predicate: predicate.to_string(),
            subjects: subjects.into_iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// Outcome of one suite. Passing means no violations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub range: String,
    pub checked: u64,
    pub skipped_degenerate: u64,
    pub violations: Vec<Witness>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn new(suite: &str, range: String) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            range,
            checked: 0,
            skipped_degenerate: 0,
            violations: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// Records one check of `predicate` on `subjects`.
    fn check<T: ToString>(&mut self, ok: bool, predicate: &str, subjects: impl FnOnce() -> Vec<T>) {
        self.checked += 1;
        if !ok {
            self.violations.push(Witness::new(predicate, subjects()));
        }
    }

    fn finish(mut self, started: std::time::Instant) -> Self {
        self.violations.sort();
        self.elapsed = started.elapsed();
        self
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Deterministic JSON rendering; the elapsed time is left out.
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "range": self.range,
            "counts": {
                "checked": self.checked,
                "skipped_degenerate": self.skipped_degenerate,
                "violations": self.violations.len(),
            },
            "witnesses": self.violations,
        })
    }

    /// One summary line, followed by one line per witness.
    pub fn to_text(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut out = format!(
            "{status} {} [{}] checked={} skipped_degenerate={} violations={}\n",
            self.suite,
            self.range,
            self.checked,
            self.skipped_degenerate,
            self.violations.len()
        );
        for w in &self.violations {
            out.push_str(&format!("  {}: {}\n", w.predicate, w.subjects.join(" | ")));
        }
        out
    }
}

fn genus_range(genera: &std::ops::RangeInclusive<u32>) -> String {
    format!("g={}..={}", genera.start(), genera.end())
}
