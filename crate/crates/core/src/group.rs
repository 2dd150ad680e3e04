//! Finite groups as Cayley tables.
//!
//! The identity is always element 0; ingested tables with the identity
//! elsewhere are re-indexed on load. Tables are validated exhaustively at
//! construction (closure, identity, associativity, inverses), so every
//! later lookup may assume a genuine group.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::verdict::Verdict;
use crate::Result;

/// Names accepted by [`FiniteGroup::builtin`].
pub const BUILTIN_GROUPS: [&str; 8] = ["trivial", "c2", "c3", "c4", "c5", "c6", "v4", "s3"];

/// First group-axiom violation found in a raw table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CayleyViolation {
    EntryOutOfRange {
        row: usize,
        col: usize,
        entry: usize,
    },
    NotIdentity {
        element: usize,
    },
    NotAssociative {
        first: usize,
        second: usize,
        third: usize,
    },
    NoInverse {
        element: usize,
    },
}

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

/// Checks the group axioms on a raw square table with identity expected at
/// index 0. The witness is the first violating cell, element, or triple.
pub fn validate_cayley(table: &[Vec<usize>]) -> Result<Verdict<CayleyViolation>> {
    let order = table.len();
    if order == 0 {
        return Err(Error::EmptyCarrier);
    }
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != order {
            return Err(Error::RaggedTable {
                row,
                found: entries.len(),
                expected: order,
            });
        }
    }
    for row in 0..order {
        for col in 0..order {
            let entry = table[row][col];
            if entry >= order {
                return Ok(Verdict::Fail(CayleyViolation::EntryOutOfRange {
                    row,
                    col,
                    entry,
                }));
            }
        }
    }
    for x in 0..order {
        if table[0][x] != x || table[x][0] != x {
            return Ok(Verdict::Fail(CayleyViolation::NotIdentity { element: x }));
        }
    }
    for i in 0..order {
        for j in 0..order {
            for k in 0..order {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Ok(Verdict::Fail(CayleyViolation::NotAssociative {
                        first: i,
                        second: j,
                        third: k,
                    }));
                }
            }
        }
    }
    for x in 0..order {
        let has_inverse = (0..order).any(|y| table[x][y] == 0 && table[y][x] == 0);
        if !has_inverse {
            return Ok(Verdict::Fail(CayleyViolation::NoInverse { element: x }));
        }
    }
    Ok(Verdict::Pass)
}

impl FiniteGroup {
    /// Builds a group from a raw table, rejecting anything that fails
    /// [`validate_cayley`].
    pub fn from_table(name: impl Into<String>, table: &[Vec<usize>]) -> Result<FiniteGroup> {
        match validate_cayley(table)? {
            Verdict::Pass => {}
            Verdict::Fail(v) => return Err(Error::InvalidGroup(format!("{v:?}"))),
        }
        let order = table.len();
        let inverse = (0..order)
            .map(|x| (0..order).find(|&y| table[x][y] == 0).expect("validated"))
            .collect();
        Ok(FiniteGroup {
            name: name.into(),
            order,
            table: table.iter().flatten().copied().collect(),
            inverse,
        })
    }

    /// One of the standard small groups: cyclic `c2..c6` (addition mod k),
    /// the Klein four-group `v4`, the symmetric group `s3`, or `trivial`.
    pub fn builtin(name: &str) -> Result<FiniteGroup> {
        let table: Vec<Vec<usize>> = match name {
            "trivial" => vec![vec![0]],
            "c2" => cyclic_table(2),
            "c3" => cyclic_table(3),
            "c4" => cyclic_table(4),
            "c5" => cyclic_table(5),
            "c6" => cyclic_table(6),
            "v4" => (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect(),
            "s3" => symmetric_3_table(),
            _ => return Err(Error::UnknownGroup(name.to_string())),
        };
        FiniteGroup::from_table(name, &table)
    }

    /// Reads the `{"name", "order", "table"}` exchange format, re-indexing
    /// so the identity lands at 0, and validates the result.
    pub fn from_file(file: &GroupFile) -> Result<FiniteGroup> {
        if file.table.len() != file.order {
            return Err(Error::OrderMismatch {
                declared: file.order,
                found: file.table.len(),
            });
        }
        let order = file.table.len();
        if order == 0 {
            return Err(Error::EmptyCarrier);
        }
        for (row, entries) in file.table.iter().enumerate() {
            if entries.len() != order {
                return Err(Error::RaggedTable {
                    row,
                    found: entries.len(),
                    expected: order,
                });
            }
            for &entry in entries {
                if entry >= order {
                    return Err(Error::InvalidGroup(format!(
                        "entry {entry} out of range in row {row}"
                    )));
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| file.table[e][x] == x && file.table[x][e] == x))
            .ok_or(Error::NoIdentity)?;
        // Swap labels 0 and the identity so the validated invariant holds.
        let relabel = |x: usize| match x {
            _ if x == identity => 0,
            0 => identity,
            _ => x,
        };
        let table: Vec<Vec<usize>> = (0..order)
            .map(|i| {
                (0..order)
                    .map(|j| relabel(file.table[relabel(i)][relabel(j)]))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(file.name.clone(), &table)
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            name: self.name.clone(),
            order: self.order,
            table: (0..self.order)
                .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
                .collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, x: usize, y: usize) -> Result<usize> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(self.table[x * self.order + y])
    }

    pub fn inv(&self, x: usize) -> Result<usize> {
        self.check_index(x)?;
        Ok(self.inverse[x])
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order)
            .all(|i| (0..self.order).all(|j| self.mul_unchecked(i, j) == self.mul_unchecked(j, i)))
    }

    /// Table lookup without the range check, for validated indices.
    pub(crate) fn mul_unchecked(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub(crate) fn inv_unchecked(&self, x: usize) -> usize {
        self.inverse[x]
    }

    fn check_index(&self, x: usize) -> Result<()> {
        if x >= self.order {
            return Err(Error::IndexOutOfRange {
                index: x,
                size: self.order,
            });
        }
        Ok(())
    }
}

fn cyclic_table(order: usize) -> Vec<Vec<usize>> {
    (0..order)
        .map(|i| (0..order).map(|j| (i + j) % order).collect())
        .collect()
}

/// Cayley table of the permutations of three letters, composition applying
/// the right factor first. Index order is the lexicographic order of the
/// one-line notations.
fn symmetric_3_table() -> Vec<Vec<usize>> {
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index_of = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
    perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index_of([p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect()
}

/// Serialized form of a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}
