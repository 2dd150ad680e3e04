//! Group-compatible orders: which partial orders on a finite group make
//! multiplication (and inversion) monotone, i.e. which T0 Alexandroff
//! topologies make it a paratopological or topological group.
//!
//! The production multiplication check uses the translation reduction:
//! multiplication is jointly monotone iff every left translation and every
//! right translation is monotone (one direction is specialization, the other
//! is `x*u <= x*v <= y*v`). That is O(k^3) instead of the O(k^4) quadruple
//! definition, which stays available as [`check_paratopological_by_definition`]
//! so the reduction itself can be tested rather than trusted.
//!
//! [`classify`] runs both checks over every labeled partial order on the
//! carrier. For a finite group only the antichain survives: from `e <= h`
//! translation gives the cycle `x <= xh <= xh^2 <= ... <= x`, which
//! antisymmetry collapses. The enumeration is capped at carriers of size 6.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::group::FiniteGroup;
use crate::poset::{MapViolation, Poset, PosetFile};
use crate::verdict::Verdict;
use crate::xn::{XnElement, XnGroup};
use crate::Result;

/// Largest carrier [`enumerate_posets`] and [`classify`] accept.
pub const ENUMERATION_CAP: usize = 6;

/// Quadruple `x <= y`, `u <= v` whose products violate `x*u <= y*v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MulViolation {
    pub x: usize,
    pub y: usize,
    pub u: usize,
    pub v: usize,
}

/// Why a (group, order) pair fails to be a topological group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TopologicalViolation {
    Multiplication(MulViolation),
    Inversion(MapViolation),
}

/// Pair of window elements of `X_n`, `p <= q` and `u <= v`, whose products
/// violate monotonicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WindowMulViolation {
    pub p: XnElement,
    pub q: XnElement,
    pub u: XnElement,
    pub v: XnElement,
}

/// How the comparable pairs fed to the window monotonicity check split by
/// strictness of each side.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct FourCaseCounts {
    pub both_strict: u64,
    pub both_equal: u64,
    pub first_strict: u64,
    pub second_strict: u64,
}

impl FourCaseCounts {
    pub fn all_nonempty(&self) -> bool {
        self.both_strict > 0
            && self.both_equal > 0
            && self.first_strict > 0
            && self.second_strict > 0
    }
}

/// Outcome of [`check_window_paratopological`]: the verdict plus the
/// per-case tallies of checked combinations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowCheck {
    pub verdict: Verdict<WindowMulViolation>,
    pub cases: FourCaseCounts,
}

/// Classification of every labeled partial order on a group's carrier.
///
/// `witnesses` lists the orders passing the multiplication check, in
/// enumeration order, as exchange-format pair lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub group_name: String,
    pub total_orders: u64,
    pub paratopological: u64,
    pub topological: u64,
    pub witnesses: Vec<PosetFile>,
}

fn check_sizes(group: &FiniteGroup, size: usize) -> Result<()> {
    if size != group.order() {
        return Err(Error::SizeMismatch {
            poset: size,
            group: group.order(),
        });
    }
    Ok(())
}

/// All left and right translations monotone; equivalent to the quadruple
/// definition, in O(k^3).
fn translations_monotone(group: &FiniteGroup, leq: &dyn Fn(usize, usize) -> bool) -> bool {
    let k = group.order();
    for g in 0..k {
        for x in 0..k {
            for y in 0..k {
                if !leq(x, y) {
                    continue;
                }
                if !leq(group.mul_unchecked(g, x), group.mul_unchecked(g, y)) {
                    return false;
                }
                if !leq(group.mul_unchecked(x, g), group.mul_unchecked(y, g)) {
                    return false;
                }
            }
        }
    }
    true
}

/// First quadruple violating `x <= y, u <= v => x*u <= y*v`, scanning
/// `(x, y, u, v)` lexicographically.
fn first_mul_violation(
    group: &FiniteGroup,
    leq: &dyn Fn(usize, usize) -> bool,
) -> Option<MulViolation> {
    let k = group.order();
    for x in 0..k {
        for y in 0..k {
            if !leq(x, y) {
                continue;
            }
            for u in 0..k {
                for v in 0..k {
                    if leq(u, v) && !leq(group.mul_unchecked(x, u), group.mul_unchecked(y, v)) {
                        return Some(MulViolation { x, y, u, v });
                    }
                }
            }
        }
    }
    None
}

/// First pair violating `x <= y => x^{-1} <= y^{-1}`.
fn first_inv_violation(
    group: &FiniteGroup,
    leq: &dyn Fn(usize, usize) -> bool,
) -> Option<MapViolation> {
    let k = group.order();
    for x in 0..k {
        for y in 0..k {
            if leq(x, y) && !leq(group.inv_unchecked(x), group.inv_unchecked(y)) {
                return Some(MapViolation {
                    first: x,
                    second: y,
                });
            }
        }
    }
    None
}

/// Whether multiplication is jointly monotone for the order, i.e. whether
/// the order's Alexandroff topology makes the group paratopological.
///
/// Decided by the translation reduction; on failure the witness is the
/// lexicographically first violating quadruple, the same one
/// [`check_paratopological_by_definition`] reports.
pub fn check_paratopological(group: &FiniteGroup, poset: &Poset) -> Result<Verdict<MulViolation>> {
    check_sizes(group, poset.size())?;
    let leq = |i: usize, j: usize| poset.leq(i, j);
    if translations_monotone(group, &leq) {
        Ok(Verdict::Pass)
    } else {
        let witness =
            first_mul_violation(group, &leq).expect("translation failure implies a quadruple");
        Ok(Verdict::Fail(witness))
    }
}

/// The O(k^4) definition of the multiplication check, kept as an oracle for
/// the translation reduction.
pub fn check_paratopological_by_definition(
    group: &FiniteGroup,
    poset: &Poset,
) -> Result<Verdict<MulViolation>> {
    check_sizes(group, poset.size())?;
    match first_mul_violation(group, &|i, j| poset.leq(i, j)) {
        None => Ok(Verdict::Pass),
        Some(w) => Ok(Verdict::Fail(w)),
    }
}

/// Paratopological plus monotone inversion: the order's topology makes the
/// group a topological group.
pub fn check_topological(
    group: &FiniteGroup,
    poset: &Poset,
) -> Result<Verdict<TopologicalViolation>> {
    let multiplication = check_paratopological(group, poset)?;
    if let Verdict::Fail(w) = multiplication {
        return Ok(Verdict::Fail(TopologicalViolation::Multiplication(w)));
    }
    match first_inv_violation(group, &|i, j| poset.leq(i, j)) {
        None => Ok(Verdict::Pass),
        Some(w) => Ok(Verdict::Fail(TopologicalViolation::Inversion(w))),
    }
}

/// Multiplication monotonicity on a window of `X_n`: every combination of
/// comparable pairs `p <= q`, `u <= v` drawn from `H_m` must satisfy
/// `p*u <= q*v`, products compared by the level order directly (they may
/// leave the window; the comparison does not care). Tallies the checked
/// combinations by strictness, the four cases of the underlying argument.
pub fn check_window_paratopological(x: &XnGroup, radius: i64) -> Result<WindowCheck> {
    let window = x.window(radius)?;
    let mut comparable: Vec<(XnElement, XnElement)> = Vec::new();
    for &p in window.elements() {
        for &q in window.elements() {
            if x.leq(p, q) {
                comparable.push((p, q));
            }
        }
    }
    let mut cases = FourCaseCounts::default();
    let mut verdict = Verdict::Pass;
    'scan: for &(p, q) in &comparable {
        for &(u, v) in &comparable {
            match (p != q, u != v) {
                (true, true) => cases.both_strict += 1,
                (false, false) => cases.both_equal += 1,
                (true, false) => cases.first_strict += 1,
                (false, true) => cases.second_strict += 1,
            }
            if !x.leq(x.mul(p, u)?, x.mul(q, v)?) {
                verdict = Verdict::Fail(WindowMulViolation { p, q, u, v });
                break 'scan;
            }
        }
    }
    Ok(WindowCheck { verdict, cases })
}

/// Per-unordered-pair choice for relation enumeration.
const INCOMPARABLE: u8 = 0;
const LESS: u8 = 1;
const GREATER: u8 = 2;
const BOTH: u8 = 3;

/// Every labeled partial order on `0..k`, exactly once, deterministically:
/// unordered pairs `(i, j)`, `i < j`, are assigned in order of increasing
/// `j` (then `i`), each choice one of incomparable / `i < j` / `j < i`, and
/// every triple is checked for transitivity as soon as its last pair is
/// assigned. The first order yielded is always the antichain.
pub fn enumerate_posets(k: usize) -> Result<Vec<Poset>> {
    let relations = enumerate_relations(k, false)?;
    Ok(relations
        .into_iter()
        .map(|rows| Poset::from_relation(&rows).expect("enumerator yields partial orders"))
        .collect())
}

/// Reflexive transitive relation on `0..size`; a partial order without the
/// antisymmetry requirement, i.e. an arbitrary (not necessarily T0)
/// Alexandroff topology on the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    size: usize,
    leq: Vec<bool>,
}

impl Preorder {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.size + j]
    }

    /// Non-reflexive related pairs in lexicographic order; mutually related
    /// pairs appear in both directions.
    pub fn to_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if i != j && self.leq(i, j) {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }
}

/// Every labeled preorder on `0..k`, by the same scheme as
/// [`enumerate_posets`] with the fourth per-pair choice of relating both
/// ways.
pub fn enumerate_preorders(k: usize) -> Result<Vec<Preorder>> {
    let relations = enumerate_relations(k, true)?;
    Ok(relations
        .into_iter()
        .map(|rows| Preorder {
            size: k,
            leq: rows.into_iter().flatten().collect(),
        })
        .collect())
}

fn enumerate_relations(k: usize, allow_both: bool) -> Result<Vec<Vec<Vec<bool>>>> {
    if k == 0 {
        return Err(Error::EmptyCarrier);
    }
    if k > ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            size: k,
            cap: ENUMERATION_CAP,
        });
    }
    let mut pairs = Vec::new();
    for j in 1..k {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut rows = vec![vec![false; k]; k];
    for i in 0..k {
        rows[i][i] = true;
    }
    let mut out = Vec::new();
    let choices: &[u8] = if allow_both {
        &[INCOMPARABLE, LESS, GREATER, BOTH]
    } else {
        &[INCOMPARABLE, LESS, GREATER]
    };
    assign(&pairs, 0, choices, &mut rows, &mut out);
    Ok(out)
}

fn assign(
    pairs: &[(usize, usize)],
    depth: usize,
    choices: &[u8],
    rows: &mut Vec<Vec<bool>>,
    out: &mut Vec<Vec<Vec<bool>>>,
) {
    let Some(&(i, j)) = pairs.get(depth) else {
        out.push(rows.clone());
        return;
    };
    for &choice in choices {
        rows[i][j] = choice == LESS || choice == BOTH;
        rows[j][i] = choice == GREATER || choice == BOTH;
        if triples_transitive(rows, i, j) {
            assign(pairs, depth + 1, choices, rows, out);
        }
    }
    rows[i][j] = false;
    rows[j][i] = false;
}

/// Transitivity of every triple `{x, i, j}` with `x < i`: exactly the
/// triples whose last-assigned pair is `(i, j)`, so checking them here
/// covers all triples by the end of the assignment.
fn triples_transitive(rows: &[Vec<bool>], i: usize, j: usize) -> bool {
    for x in 0..i {
        let triple = [x, i, j];
        for a in triple {
            for b in triple {
                for c in triple {
                    if a != b && b != c && rows[a][b] && rows[b][c] && !rows[a][c] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Runs both compatibility checks over every labeled partial order on the
/// group's carrier. Poset checks fan out to the current rayon pool; counts
/// and witness order do not depend on scheduling.
pub fn classify(group: &FiniteGroup) -> Result<ClassificationReport> {
    let posets = enumerate_posets(group.order())?;
    let flags: Vec<(bool, bool)> = posets
        .par_iter()
        .map(|poset| {
            let leq = |i: usize, j: usize| poset.leq(i, j);
            let para = translations_monotone(group, &leq);
            let topo = para && first_inv_violation(group, &leq).is_none();
            (para, topo)
        })
        .collect();
    let mut report = ClassificationReport {
        group_name: group.name().to_string(),
        total_orders: posets.len() as u64,
        paratopological: 0,
        topological: 0,
        witnesses: Vec::new(),
    };
    for (poset, &(para, topo)) in posets.iter().zip(&flags) {
        if para {
            report.paratopological += 1;
            report.witnesses.push(poset.to_file());
        }
        if topo {
            report.topological += 1;
        }
    }
    Ok(report)
}

/// The exploratory non-T0 variant of [`classify`]: every labeled preorder
/// on the carrier. Unlike the T0 case, degenerate compatible topologies
/// exist (relating everything both ways is the trivial topology, and coset
/// preorders of normal subgroups sit in between), so this mode only reports
/// counts; it asserts nothing. Witness pair lists may relate pairs in both
/// directions and are not valid partial-order files.
pub fn classify_preorders(group: &FiniteGroup) -> Result<ClassificationReport> {
    let preorders = enumerate_preorders(group.order())?;
    let flags: Vec<(bool, bool)> = preorders
        .par_iter()
        .map(|pre| {
            let leq = |i: usize, j: usize| pre.leq(i, j);
            let para = translations_monotone(group, &leq);
            let topo = para && first_inv_violation(group, &leq).is_none();
            (para, topo)
        })
        .collect();
    let mut report = ClassificationReport {
        group_name: group.name().to_string(),
        total_orders: preorders.len() as u64,
        paratopological: 0,
        topological: 0,
        witnesses: Vec::new(),
    };
    for (pre, &(para, topo)) in preorders.iter().zip(&flags) {
        if para {
            report.paratopological += 1;
            report.witnesses.push(PosetFile {
                size: pre.size(),
                leq: pre.to_pairs(),
            });
        }
        if topo {
            report.topological += 1;
        }
    }
    Ok(report)
}
