//! Pass/fail outcomes that carry a concrete witness on failure.

use serde::Serialize;

/// Outcome of a semantic check.
///
/// A failing verdict always carries a witness exhibiting the violation, and a
/// passing verdict never does; the enum makes that invariant structural.
/// Witnesses are chosen deterministically (first violation under a
/// lexicographic scan) so test output is stable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict<W> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    /// Maps the witness type, preserving the outcome.
    pub fn map_witness<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Pass => Verdict::Pass,
            Verdict::Fail(w) => Verdict::Fail(f(w)),
        }
    }
}

impl<W: Serialize> Verdict<W> {
    /// Witness rendered as a JSON value, for report assembly.
    pub fn witness_json(&self) -> Option<serde_json::Value> {
        self.witness()
            .map(|w| serde_json::to_value(w).expect("witness serializes"))
    }
}
