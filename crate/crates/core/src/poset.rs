//! Finite partial orders viewed as T0 Alexandroff spaces.
//!
//! The carrier is always `0..size`; display labels live with the callers.
//! The order relation is a dense boolean matrix, so membership queries are
//! O(1) and every check below is a plain scan. Open sets of the associated
//! topology are exactly the down-sets, `down_set(x)` is the minimal open
//! neighbourhood of `x`, and `up_set(x)` is the closure of `{x}`.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::verdict::Verdict;
use crate::Result;

/// First order-axiom violation found in a raw relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrderViolation {
    NotReflexive {
        element: usize,
    },
    NotAntisymmetric {
        first: usize,
        second: usize,
    },
    NotTransitive {
        first: usize,
        second: usize,
        third: usize,
    },
}

/// Pair `(x, y)` with `x <= y` whose images are not ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapViolation {
    pub first: usize,
    pub second: usize,
}

/// A validated finite partial order on the carrier `0..size`.
///
/// Immutable after construction; raw relations enter only through
/// [`validate_relation`] or one of the checked constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
}

/// Checks reflexivity, antisymmetry, and transitivity of a raw square
/// relation. The witness is the first violation in lexicographic scan order.
pub fn validate_relation(relation: &[Vec<bool>]) -> Result<Verdict<OrderViolation>> {
    let size = relation.len();
    if size == 0 {
        return Err(Error::EmptyCarrier);
    }
    for (row, entries) in relation.iter().enumerate() {
        if entries.len() != size {
            return Err(Error::RaggedRelation {
                row,
                found: entries.len(),
                expected: size,
            });
        }
    }
    for i in 0..size {
        if !relation[i][i] {
            return Ok(Verdict::Fail(OrderViolation::NotReflexive { element: i }));
        }
    }
    for i in 0..size {
        for j in i + 1..size {
            if relation[i][j] && relation[j][i] {
                return Ok(Verdict::Fail(OrderViolation::NotAntisymmetric {
                    first: i,
                    second: j,
                }));
            }
        }
    }
    for i in 0..size {
        for j in 0..size {
            if !relation[i][j] {
                continue;
            }
            for k in 0..size {
                if relation[j][k] && !relation[i][k] {
                    return Ok(Verdict::Fail(OrderViolation::NotTransitive {
                        first: i,
                        second: j,
                        third: k,
                    }));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

impl Poset {
    /// Builds a poset from a raw relation, rejecting anything that fails
    /// [`validate_relation`].
    pub fn from_relation(relation: &[Vec<bool>]) -> Result<Poset> {
        match validate_relation(relation)? {
            Verdict::Pass => Ok(Poset {
                size: relation.len(),
                leq: relation.iter().flatten().copied().collect(),
            }),
            Verdict::Fail(v) => Err(Error::NotPartialOrder(format!("{v:?}"))),
        }
    }

    /// Builds a poset of the given size from a comparison predicate.
    pub fn from_fn(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        let rows: Vec<Vec<bool>> = (0..size)
            .map(|i| (0..size).map(|j| leq(i, j)).collect())
            .collect();
        Poset::from_relation(&rows)
    }

    /// The discrete order: no two distinct elements comparable.
    pub fn antichain(size: usize) -> Poset {
        assert!(size > 0, "carrier must be nonempty");
        Poset::from_fn(size, |i, j| i == j).expect("antichain is a partial order")
    }

    /// The linear order `0 < 1 < ... < size-1`.
    pub fn chain(size: usize) -> Poset {
        assert!(size > 0, "carrier must be nonempty");
        Poset::from_fn(size, |i, j| i <= j).expect("chain is a partial order")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.size + j]
    }

    /// Strict comparability: `i < j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// The relation as rows, for callers that re-validate or serialize it.
    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        (0..self.size)
            .map(|i| self.leq[i * self.size..(i + 1) * self.size].to_vec())
            .collect()
    }

    fn check_index(&self, x: usize) -> Result<()> {
        if x >= self.size {
            return Err(Error::IndexOutOfRange {
                index: x,
                size: self.size,
            });
        }
        Ok(())
    }

    /// `{y : y <= x}`, the minimal open neighbourhood of `x`. Sorted.
    pub fn down_set(&self, x: usize) -> Result<Vec<usize>> {
        self.check_index(x)?;
        Ok((0..self.size).filter(|&y| self.leq(y, x)).collect())
    }

    /// `{y : y >= x}`, the minimal closed set containing `x`. Sorted.
    pub fn up_set(&self, x: usize) -> Result<Vec<usize>> {
        self.check_index(x)?;
        Ok((0..self.size).filter(|&y| self.leq(x, y)).collect())
    }

    /// Whether `set` is a down-set, i.e. open in the Alexandroff topology.
    pub fn is_open(&self, set: &[usize]) -> Result<bool> {
        let mut member = vec![false; self.size];
        for &x in set {
            self.check_index(x)?;
            member[x] = true;
        }
        for x in 0..self.size {
            if !member[x] {
                continue;
            }
            for y in 0..self.size {
                if self.leq(y, x) && !member[y] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The covering relation: the transitive reduction of the strict order,
    /// with edges in lexicographic order.
    pub fn covers(&self) -> HasseDiagram {
        let mut edges = Vec::new();
        for x in 0..self.size {
            for y in 0..self.size {
                if !self.lt(x, y) {
                    continue;
                }
                let skipped = (0..self.size).any(|z| self.lt(x, z) && self.lt(z, y));
                if !skipped {
                    edges.push((x, y));
                }
            }
        }
        HasseDiagram {
            size: self.size,
            edges,
        }
    }

    /// Componentwise order on the product carrier; the pair `(p, q)` gets
    /// index `p * other.size() + q`.
    pub fn product(&self, other: &Poset) -> Poset {
        let n = other.size;
        Poset::from_fn(self.size * n, |i, j| {
            self.leq(i / n, j / n) && other.leq(i % n, j % n)
        })
        .expect("product of partial orders is a partial order")
    }

    /// Connected components of the comparability graph, each sorted, listed
    /// by smallest member.
    pub fn comparability_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut components = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            let mut queue = vec![start];
            let mut component = Vec::new();
            seen[start] = true;
            while let Some(x) = queue.pop() {
                component.push(x);
                for y in 0..self.size {
                    if !seen[y] && x != y && (self.leq(x, y) || self.leq(y, x)) {
                        seen[y] = true;
                        queue.push(y);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// Reads the `{"size": k, "leq": [[i, j], ...]}` exchange format.
    ///
    /// Listed pairs may be strict or non-strict; reflexive pairs are implied.
    /// The relation is closed under transitivity and rejected if the closure
    /// violates antisymmetry.
    pub fn from_file(file: &PosetFile) -> Result<Poset> {
        if file.size == 0 {
            return Err(Error::EmptyCarrier);
        }
        let size = file.size;
        let mut rows = vec![vec![false; size]; size];
        for i in 0..size {
            rows[i][i] = true;
        }
        for &(i, j) in &file.leq {
            let bound = i.max(j);
            if bound >= size {
                return Err(Error::IndexOutOfRange { index: bound, size });
            }
            rows[i][j] = true;
        }
        transitive_close(&mut rows);
        Poset::from_relation(&rows)
    }

    /// The exchange-format counterpart of [`Poset::from_file`], listing the
    /// strict pairs in lexicographic order.
    pub fn to_file(&self) -> PosetFile {
        let mut leq = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if self.lt(i, j) {
                    leq.push((i, j));
                }
            }
        }
        PosetFile {
            size: self.size,
            leq,
        }
    }
}

/// Covering pairs of a poset: a directed edge `(x, y)` for every `x < y`
/// with nothing strictly between.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseDiagram {
    size: usize,
    edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Reflexive-transitive closure of the edges; inverse of
    /// [`Poset::covers`] on valid input.
    pub fn closure(&self) -> Result<Poset> {
        let mut rows = vec![vec![false; self.size]; self.size];
        for i in 0..self.size {
            rows[i][i] = true;
        }
        for &(x, y) in &self.edges {
            let bound = x.max(y);
            if bound >= self.size {
                return Err(Error::IndexOutOfRange {
                    index: bound,
                    size: self.size,
                });
            }
            rows[x][y] = true;
        }
        transitive_close(&mut rows);
        Poset::from_relation(&rows)
    }
}

/// Whether `map` (total, given as `map[x] = f(x)`) is order-preserving from
/// `domain` to `codomain`; continuity of the corresponding map of Alexandroff
/// spaces. The witness is the first violating pair.
pub fn is_monotone(
    domain: &Poset,
    codomain: &Poset,
    map: &[usize],
) -> Result<Verdict<MapViolation>> {
    if map.len() != domain.size() {
        return Err(Error::PartialMap {
            found: map.len(),
            expected: domain.size(),
        });
    }
    for &image in map {
        if image >= codomain.size() {
            return Err(Error::IndexOutOfRange {
                index: image,
                size: codomain.size(),
            });
        }
    }
    for x in 0..domain.size() {
        for y in 0..domain.size() {
            if domain.leq(x, y) && !codomain.leq(map[x], map[y]) {
                return Ok(Verdict::Fail(MapViolation {
                    first: x,
                    second: y,
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Warshall closure in place.
fn transitive_close(rows: &mut [Vec<bool>]) {
    let size = rows.len();
    for k in 0..size {
        for i in 0..size {
            if !rows[i][k] {
                continue;
            }
            for j in 0..size {
                if rows[k][j] {
                    rows[i][j] = true;
                }
            }
        }
    }
}

/// Serialized form of a poset: carrier size plus a pair list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub size: usize,
    pub leq: Vec<(usize, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(size: usize, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
        let mut rows = vec![vec![false; size]; size];
        for i in 0..size {
            rows[i][i] = true;
        }
        for &(i, j) in pairs {
            rows[i][j] = true;
        }
        rows
    }

    #[test]
    fn identity_relation_is_a_partial_order() {
        let verdict = validate_relation(&rows(3, &[])).unwrap();
        assert_eq!(verdict, Verdict::Pass);
    }

    #[test]
    fn antisymmetry_violation_is_caught_with_first_pair() {
        let verdict = validate_relation(&rows(2, &[(0, 1), (1, 0)])).unwrap();
        assert_eq!(
            verdict,
            Verdict::Fail(OrderViolation::NotAntisymmetric {
                first: 0,
                second: 1
            })
        );
    }

    #[test]
    fn transitivity_violation_is_caught_with_first_triple() {
        let verdict = validate_relation(&rows(3, &[(0, 1), (1, 2)])).unwrap();
        assert_eq!(
            verdict,
            Verdict::Fail(OrderViolation::NotTransitive {
                first: 0,
                second: 1,
                third: 2
            })
        );
    }

    #[test]
    fn missing_reflexive_pair_is_caught() {
        let mut r = rows(2, &[]);
        r[1][1] = false;
        let verdict = validate_relation(&r).unwrap();
        assert_eq!(
            verdict,
            Verdict::Fail(OrderViolation::NotReflexive { element: 1 })
        );
    }

    #[test]
    fn empty_and_ragged_relations_are_input_errors() {
        assert_eq!(validate_relation(&[]), Err(Error::EmptyCarrier));
        let ragged = vec![vec![true, false], vec![true]];
        assert!(matches!(
            validate_relation(&ragged),
            Err(Error::RaggedRelation { row: 1, .. })
        ));
    }

    #[test]
    fn down_set_of_antichain_is_singleton() {
        let p = Poset::antichain(4);
        for x in 0..4 {
            assert_eq!(p.down_set(x).unwrap(), vec![x]);
            assert_eq!(p.up_set(x).unwrap(), vec![x]);
        }
    }

    #[test]
    fn chain_down_and_up_sets() {
        let p = Poset::chain(3);
        assert_eq!(p.down_set(2).unwrap(), vec![0, 1, 2]);
        assert_eq!(p.up_set(0).unwrap(), vec![0, 1, 2]);
        assert_eq!(p.down_set(1).unwrap(), vec![0, 1]);
    }

    #[test]
    fn out_of_range_element_is_an_input_error() {
        let p = Poset::chain(3);
        assert_eq!(
            p.down_set(3),
            Err(Error::IndexOutOfRange { index: 3, size: 3 })
        );
        assert!(p.up_set(7).is_err());
        assert!(p.is_open(&[0, 5]).is_err());
    }

    #[test]
    fn open_sets_are_down_sets() {
        let p = Poset::chain(3);
        assert!(p.is_open(&[]).unwrap());
        assert!(p.is_open(&[0, 1]).unwrap());
        assert!(!p.is_open(&[1]).unwrap());
        assert!(p.is_open(&[0, 1, 2]).unwrap());
    }

    #[test]
    fn covers_of_chain_and_antichain() {
        assert_eq!(Poset::chain(3).covers().edges(), &[(0, 1), (1, 2)]);
        assert!(Poset::antichain(3).covers().edges().is_empty());
    }

    #[test]
    fn covers_skip_transitive_edges() {
        // 0 < 1 < 2 plus the implied 0 < 2: reduction drops (0, 2).
        let p = Poset::from_relation(&rows(3, &[(0, 1), (1, 2), (0, 2)])).unwrap();
        assert_eq!(p.covers().edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn identity_and_constant_maps_are_monotone() {
        let p = Poset::chain(4);
        let identity: Vec<usize> = (0..4).collect();
        assert!(is_monotone(&p, &p, &identity).unwrap().passed());
        assert!(is_monotone(&p, &p, &[2, 2, 2, 2]).unwrap().passed());
    }

    #[test]
    fn order_reversal_fails_with_first_pair() {
        let p = Poset::chain(2);
        let verdict = is_monotone(&p, &p, &[1, 0]).unwrap();
        assert_eq!(
            verdict,
            Verdict::Fail(MapViolation {
                first: 0,
                second: 1
            })
        );
    }

    #[test]
    fn partial_or_out_of_range_maps_are_input_errors() {
        let p = Poset::chain(3);
        assert!(matches!(
            is_monotone(&p, &p, &[0, 1]),
            Err(Error::PartialMap {
                found: 2,
                expected: 3
            })
        ));
        assert!(is_monotone(&p, &p, &[0, 1, 3]).is_err());
    }

    #[test]
    fn product_of_antichains_is_an_antichain() {
        let p = Poset::antichain(2).product(&Poset::antichain(3));
        assert_eq!(p, Poset::antichain(6));
    }

    #[test]
    fn product_of_two_chains_is_the_diamond() {
        let p = Poset::chain(2).product(&Poset::chain(2));
        // Oracle: enumerate all 16 pairs componentwise.
        let two = Poset::chain(2);
        let mut incomparable = 0;
        for i in 0..4 {
            for j in 0..4 {
                let expect = two.leq(i / 2, j / 2) && two.leq(i % 2, j % 2);
                assert_eq!(p.leq(i, j), expect, "pair ({i}, {j})");
                if i < j && !p.leq(i, j) && !p.leq(j, i) {
                    incomparable += 1;
                }
            }
        }
        assert_eq!(incomparable, 1);
        assert_eq!(p.covers().edges(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn one_element_factor_is_the_identity() {
        let p = Poset::from_relation(&rows(3, &[(0, 2), (1, 2)])).unwrap();
        assert_eq!(p.product(&Poset::antichain(1)), p);
    }

    #[test]
    fn components_of_antichain_and_chain() {
        assert_eq!(
            Poset::antichain(3).comparability_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(
            Poset::chain(4).comparability_components(),
            vec![vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn file_round_trip_and_closure() {
        // Non-strict listing with an implied transitive pair.
        let file = PosetFile {
            size: 3,
            leq: vec![(0, 1), (1, 2), (1, 1)],
        };
        let p = Poset::from_file(&file).unwrap();
        assert!(p.leq(0, 2), "closure adds 0 <= 2");
        assert_eq!(p, Poset::chain(3));
        assert_eq!(p.to_file().leq, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn file_with_antisymmetry_violation_is_rejected() {
        let file = PosetFile {
            size: 3,
            leq: vec![(0, 1), (1, 2), (2, 0)],
        };
        assert!(matches!(
            Poset::from_file(&file),
            Err(Error::NotPartialOrder(_))
        ));
    }

    #[test]
    fn file_with_out_of_range_pair_is_rejected() {
        let file = PosetFile {
            size: 2,
            leq: vec![(0, 5)],
        };
        assert_eq!(
            Poset::from_file(&file),
            Err(Error::IndexOutOfRange { index: 5, size: 2 })
        );
    }
}
