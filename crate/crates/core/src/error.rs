//! Input and arithmetic errors shared across the crate.

use thiserror::Error;

/// Precondition violations and arithmetic failures.
///
/// Semantic pass/fail outcomes (an axiom that does not hold, a set identity
/// that fails) are never errors; they are reported as [`crate::Verdict`]s.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("relation is not square: row {row} has {found} entries, expected {expected}")]
    RaggedRelation {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("element {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("table is not square: row {row} has {found} entries, expected {expected}")]
    RaggedTable {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("not a valid group table: {0}")]
    InvalidGroup(String),
    #[error("group has no identity element")]
    NoIdentity,
    #[error("declared order {declared} does not match table size {found}")]
    OrderMismatch { declared: usize, found: usize },
    #[error("unknown group '{0}'")]
    UnknownGroup(String),
    #[error("map is partial: {found} entries for a carrier of size {expected}")]
    PartialMap { found: usize, expected: usize },
    #[error("window radius {0} is negative")]
    NegativeRadius(i64),
    #[error("element {element} lies outside the window of radius {radius}")]
    OutsideWindow { element: String, radius: i64 },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("carrier size {size} exceeds the enumeration cap {cap}")]
    EnumerationCap { size: usize, cap: usize },
    #[error("sizes do not match: order relation on {poset} elements, group of order {group}")]
    SizeMismatch { poset: usize, group: usize },
    #[error("invalid file: {0}")]
    InvalidFile(String),
}
