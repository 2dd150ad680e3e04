//! Second-implementation oracles for the enumeration and classification
//! layers: enumerate every per-pair assignment with no pruning, filter by a
//! locally written transitivity scan, and compare against the production
//! backtracking enumerator. Expected counts are frozen from these oracles.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use alextop::group::FiniteGroup;
use alextop::paratopo::{
    check_paratopological, check_paratopological_by_definition, check_topological, classify,
    classify_preorders, enumerate_posets, enumerate_preorders,
};
use alextop::poset::PosetFile;

fn transitive(rows: &[Vec<bool>]) -> bool {
    let k = rows.len();
    for i in 0..k {
        for j in 0..k {
            if !rows[i][j] {
                continue;
            }
            for l in 0..k {
                if rows[j][l] && !rows[i][l] {
                    return false;
                }
            }
        }
    }
    true
}

/// All reflexive relations choosable per unordered pair (3 poset choices,
/// 4 preorder choices), filtered by the local transitivity scan. Flattened
/// matrices, in plain counting order over an i-major pair list.
fn oracle_relations(k: usize, choices: u128) -> Vec<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    let total = choices.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut rest = code;
        let mut rows = vec![vec![false; k]; k];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in &pairs {
            match rest % choices {
                0 => {}
                1 => rows[i][j] = true,
                2 => rows[j][i] = true,
                _ => {
                    rows[i][j] = true;
                    rows[j][i] = true;
                }
            }
            rest /= choices;
        }
        if transitive(&rows) {
            out.push(rows.into_iter().flatten().collect());
        }
    }
    out
}

#[test]
fn poset_counts_match_the_oracle() {
    let expected = [1usize, 3, 19, 219, 4231];
    for (k, &count) in (1..=5).zip(&expected) {
        assert_eq!(oracle_relations(k, 3).len(), count, "oracle at k={k}");
        assert_eq!(
            enumerate_posets(k).unwrap().len(),
            count,
            "enumerator at k={k}"
        );
    }
}

#[test]
fn poset_enumeration_matches_the_oracle_as_a_set() {
    for k in 1..=4 {
        let oracle: BTreeSet<Vec<bool>> = oracle_relations(k, 3).into_iter().collect();
        let produced: BTreeSet<Vec<bool>> = enumerate_posets(k)
            .unwrap()
            .into_iter()
            .map(|p| p.to_rows().into_iter().flatten().collect())
            .collect();
        assert_eq!(produced, oracle, "k={k}");
    }
}

#[test]
fn preorder_counts_match_the_oracle() {
    let expected = [1usize, 4, 29, 355];
    for (k, &count) in (1..=4).zip(&expected) {
        assert_eq!(oracle_relations(k, 4).len(), count, "oracle at k={k}");
        assert_eq!(
            enumerate_preorders(k).unwrap().len(),
            count,
            "enumerator at k={k}"
        );
    }
    assert_eq!(enumerate_preorders(5).unwrap().len(), 6942);
}

#[test]
fn enumeration_is_deterministic() {
    let first = enumerate_posets(4).unwrap();
    let second = enumerate_posets(4).unwrap();
    assert_eq!(first, second);
}

#[test]
fn translation_reduction_agrees_with_the_quadruple_definition() {
    let groups = [("trivial", 1), ("c2", 2), ("c3", 3), ("c4", 4), ("v4", 4)];
    for (name, k) in groups {
        let g = FiniteGroup::builtin(name).unwrap();
        for poset in enumerate_posets(k).unwrap() {
            let fast = check_paratopological(&g, &poset).unwrap();
            let slow = check_paratopological_by_definition(&g, &poset).unwrap();
            assert_eq!(fast, slow, "{name} on {:?}", poset.to_file());
        }
    }
}

#[test]
fn topological_implies_paratopological() {
    let groups = [("c2", 2), ("c3", 3), ("c4", 4), ("v4", 4)];
    for (name, k) in groups {
        let g = FiniteGroup::builtin(name).unwrap();
        for poset in enumerate_posets(k).unwrap() {
            if check_topological(&g, &poset).unwrap().passed() {
                assert!(
                    check_paratopological_by_definition(&g, &poset)
                        .unwrap()
                        .passed(),
                    "{name} on {:?}",
                    poset.to_file()
                );
            }
        }
    }
}

#[test]
fn classification_of_order_four_and_five_groups() {
    for name in ["c4", "v4"] {
        let report = classify(&FiniteGroup::builtin(name).unwrap()).unwrap();
        assert_eq!(report.total_orders, 219, "{name}");
        assert_eq!(report.paratopological, 1, "{name}");
        assert_eq!(report.topological, 1, "{name}");
        assert_eq!(
            report.witnesses,
            vec![PosetFile {
                size: 4,
                leq: vec![]
            }],
            "{name}"
        );
    }

    let report = classify(&FiniteGroup::builtin("c5").unwrap()).unwrap();
    assert_eq!(
        (
            report.total_orders,
            report.paratopological,
            report.topological
        ),
        (4231, 1, 1)
    );
}

#[test]
#[ignore = "enumerates all 130023 labeled posets on 6 elements; run with --ignored"]
fn classification_of_order_six_groups() {
    for name in ["c6", "s3"] {
        let report = classify(&FiniteGroup::builtin(name).unwrap()).unwrap();
        assert_eq!(report.total_orders, 130023, "{name}");
        assert_eq!(report.paratopological, 1, "{name}");
        assert_eq!(report.topological, 1, "{name}");
        assert_eq!(
            report.witnesses,
            vec![PosetFile {
                size: 6,
                leq: vec![]
            }],
            "{name}"
        );
    }
}

#[test]
fn preorder_classification_counts_normal_subgroups() {
    // Compatible preorders on a finite group are exactly the coset
    // preorders of normal subgroups (x <= y iff x^{-1} y lies in the
    // subgroup), and all of them survive the inversion check too.
    let cases = [("c2", 4, 2), ("c3", 29, 2), ("c4", 355, 3), ("v4", 355, 5)];
    for (name, total, compatible) in cases {
        let report = classify_preorders(&FiniteGroup::builtin(name).unwrap()).unwrap();
        assert_eq!(report.total_orders, total, "{name}");
        assert_eq!(report.paratopological, compatible, "{name}");
        assert_eq!(report.topological, compatible, "{name}");
    }
}

#[test]
#[ignore = "enumerates all 209527 labeled preorders on 6 elements; run with --ignored"]
fn preorder_classification_on_order_six_groups() {
    // Normal subgroups: c6 has {e}, c2, c3, c6; s3 has {e}, a3, s3.
    for (name, compatible) in [("c6", 4), ("s3", 3)] {
        let report = classify_preorders(&FiniteGroup::builtin(name).unwrap()).unwrap();
        assert_eq!(report.total_orders, 209527, "{name}");
        assert_eq!(report.paratopological, compatible, "{name}");
        assert_eq!(report.topological, compatible, "{name}");
    }
}
