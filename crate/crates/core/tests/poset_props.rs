//! Property tests for the poset layer.
//!
//! Random posets are built by transitively closing a random DAG on an
//! upper-triangular matrix and then relabeling by a random permutation, so
//! element labels carry no order information.

#![allow(clippy::needless_range_loop)]

use alextop::poset::{is_monotone, validate_relation, Poset};
use proptest::prelude::*;

fn close(rows: &mut [Vec<bool>]) {
    let k = rows.len();
    for mid in 0..k {
        for i in 0..k {
            if !rows[i][mid] {
                continue;
            }
            for j in 0..k {
                if rows[mid][j] {
                    rows[i][j] = true;
                }
            }
        }
    }
}

fn poset_from_parts(bits: &[bool], perm: &[usize]) -> Poset {
    let k = perm.len();
    let mut rows = vec![vec![false; k]; k];
    for i in 0..k {
        rows[i][i] = true;
    }
    let mut next = 0;
    for i in 0..k {
        for j in i + 1..k {
            if bits[next] {
                rows[i][j] = true;
            }
            next += 1;
        }
    }
    close(&mut rows);
    let relabeled: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| rows[perm_inverse(perm, i)][perm_inverse(perm, j)])
                .collect()
        })
        .collect();
    Poset::from_relation(&relabeled).expect("closed DAG is a partial order")
}

fn perm_inverse(perm: &[usize], value: usize) -> usize {
    perm.iter().position(|&x| x == value).unwrap()
}

fn arb_poset(max_size: usize) -> impl Strategy<Value = Poset> {
    (1..=max_size)
        .prop_flat_map(|k| {
            (
                proptest::collection::vec(any::<bool>(), k * (k - 1) / 2),
                Just((0..k).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(bits, perm)| poset_from_parts(&bits, &perm))
}

fn dual(p: &Poset) -> Poset {
    Poset::from_fn(p.size(), |i, j| p.leq(j, i)).expect("dual of a partial order")
}

proptest! {
    #[test]
    fn validation_accepts_every_generated_relation(p in arb_poset(8)) {
        prop_assert!(validate_relation(&p.to_rows()).unwrap().passed());
    }

    #[test]
    fn down_sets_dualize_to_up_sets(p in arb_poset(8)) {
        let d = dual(&p);
        for x in 0..p.size() {
            prop_assert_eq!(p.down_set(x).unwrap(), d.up_set(x).unwrap());
            prop_assert_eq!(p.up_set(x).unwrap(), d.down_set(x).unwrap());
        }
    }

    #[test]
    fn down_sets_are_open_and_complements_of_up_sets_are_open(p in arb_poset(8)) {
        for x in 0..p.size() {
            prop_assert!(p.is_open(&p.down_set(x).unwrap()).unwrap());
            let up = p.up_set(x).unwrap();
            let complement: Vec<usize> = (0..p.size()).filter(|y| !up.contains(y)).collect();
            prop_assert!(p.is_open(&complement).unwrap());
        }
    }

    #[test]
    fn every_open_set_is_a_union_of_down_sets(p in arb_poset(6), mask in any::<u64>()) {
        // Take an arbitrary subset; if it is open it must equal the union of
        // the minimal neighbourhoods of its points, and vice versa.
        let subset: Vec<usize> = (0..p.size()).filter(|&x| mask & (1 << x) != 0).collect();
        let mut union: Vec<usize> = subset
            .iter()
            .flat_map(|&x| p.down_set(x).unwrap())
            .collect();
        union.sort_unstable();
        union.dedup();
        prop_assert_eq!(p.is_open(&subset).unwrap(), union == subset);
    }

    #[test]
    fn hasse_round_trips(p in arb_poset(8)) {
        prop_assert_eq!(p.covers().closure().unwrap(), p);
    }

    #[test]
    fn monotone_maps_compose(p in arb_poset(5), q in arb_poset(5), seed in any::<u64>()) {
        // A map built from down-set sizes modulo the codomain is not always
        // monotone; filter to the monotone ones and compose with a constant.
        let f: Vec<usize> = (0..p.size())
            .map(|x| (x as u64 ^ seed) as usize % q.size())
            .collect();
        if is_monotone(&p, &q, &f).unwrap().passed() {
            let g = vec![q.size() - 1; q.size()];
            prop_assert!(is_monotone(&q, &q, &g).unwrap().passed());
            let composed: Vec<usize> = f.iter().map(|&y| g[y]).collect();
            prop_assert!(is_monotone(&p, &q, &composed).unwrap().passed());
        }
    }

    #[test]
    fn down_set_is_the_smallest_open_set_containing_the_point(p in arb_poset(12)) {
        // Any down-set that contains x contains down_set(x) wholesale.
        for x in 0..p.size() {
            let minimal = p.down_set(x).unwrap();
            for y in 0..p.size() {
                let candidate = p.down_set(y).unwrap();
                if candidate.contains(&x) {
                    prop_assert!(minimal.iter().all(|e| candidate.contains(e)));
                }
            }
        }
    }

    #[test]
    fn products_project_monotonically(p in arb_poset(4), q in arb_poset(4)) {
        let prod = p.product(&q);
        let left: Vec<usize> = (0..prod.size()).map(|i| i / q.size()).collect();
        let right: Vec<usize> = (0..prod.size()).map(|i| i % q.size()).collect();
        prop_assert!(is_monotone(&prod, &p, &left).unwrap().passed());
        prop_assert!(is_monotone(&prod, &q, &right).unwrap().passed());
    }

    #[test]
    fn product_groups_elements_in_either_order(p in arb_poset(4), q in arb_poset(4)) {
        // p x q and q x p agree through the index swap (i, j) -> (j, i).
        let pq = p.product(&q);
        let qp = q.product(&p);
        for i in 0..pq.size() {
            for j in 0..pq.size() {
                let (a, b) = (i / q.size(), i % q.size());
                let (c, d) = (j / q.size(), j % q.size());
                prop_assert_eq!(pq.leq(i, j), qp.leq(b * p.size() + a, d * p.size() + c));
            }
        }
    }

    #[test]
    fn file_round_trip_is_identity(p in arb_poset(8)) {
        prop_assert_eq!(Poset::from_file(&p.to_file()).unwrap(), p);
    }

    #[test]
    fn components_partition_the_carrier(p in arb_poset(8)) {
        let components = p.comparability_components();
        let mut seen = vec![false; p.size()];
        for component in &components {
            for &x in component {
                prop_assert!(!seen[x], "element {} in two components", x);
                seen[x] = true;
            }
        }
        prop_assert!(seen.into_iter().all(|s| s));
        // No comparable pair crosses components.
        for (ci, c) in components.iter().enumerate() {
            for (di, d) in components.iter().enumerate() {
                if ci == di {
                    continue;
                }
                for &x in c {
                    for &y in d {
                        prop_assert!(!p.leq(x, y));
                    }
                }
            }
        }
    }
}
