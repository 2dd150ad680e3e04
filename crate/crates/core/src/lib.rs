//! Finite order theory meets topological algebra.
//!
//! A T0 Alexandroff topology on a set is the same thing as a partial order:
//! the minimal open neighbourhood of a point is its down-set, the minimal
//! closed set containing it is its up-set, and a map is continuous exactly
//! when it is order-preserving. This crate takes that dictionary literally
//! and machine-checks, at finite scale, what it says about groups carrying
//! such topologies:
//!
//! - [`poset`]: finite partial orders, minimal open/closed sets, Hasse
//!   diagrams, monotone-map checks, product orders.
//! - [`group`]: finite groups as Cayley tables, with a handful of builtins.
//! - [`xn`]: the group `Z x F_n` ordered by `(a,b) <= (c,d)` iff `a < c` or
//!   `(a,b) = (c,d)`, its compact windows `H_m`, and the set identities that
//!   force any continuous isomorphic image to carry the trivial topology.
//! - [`paratopo`]: multiplication/inversion monotonicity checks and the
//!   exhaustive classification of partial orders on small finite groups.
//! - [`theorem`]: machine-readable reports aggregating the checks above.

// Validation code scans dense matrices and reports index witnesses, so plain
// index loops are the clearest form throughout.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod group;
pub mod paratopo;
pub mod poset;
pub mod theorem;
pub mod verdict;
pub mod xn;

pub use error::Error;
pub use verdict::Verdict;

/// Shorthand for `Result` with this crate's [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
