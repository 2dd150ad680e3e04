//! End-to-end verification reports.
//!
//! Each report aggregates the window-scale checks behind one mathematical
//! claim about `X_n` (or about finite groups directly), ties every check to
//! the statement it certifies via an anchor string, and serializes with
//! stable key order so repeated runs are byte-identical.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::group::FiniteGroup;
use crate::paratopo;
use crate::poset::{is_monotone, validate_relation, PosetFile};
use crate::verdict::Verdict;
use crate::xn::{XnElement, XnGroup};
use crate::Result;

pub const ANCHOR_ORDER: &str = "(a,b) <= (c,d) iff a < c, or a = c and b = d";
pub const ANCHOR_MULTIPLICATION: &str = "(a,b)(c,d) = (a+c, bd) is monotone in each argument";
pub const ANCHOR_WINDOW_SIZE: &str = "|H_m| = (2m+1)n";
pub const ANCHOR_INVERSION: &str = "(a,b)^{-1} = (-a, b^{-1}) reverses levels";
pub const ANCHOR_WINDOW_UNION: &str = "X_n is the increasing union of the windows H_m";
pub const ANCHOR_INVERSE_IDENTITY: &str =
    "U_{(a,b)}^{-1} = F_{(-a,b^{-1})}: the inverse of a minimal open set is closed";
pub const ANCHOR_COVER_POSITIVE: &str = "U_{(a,b)} ∪ F_{(-a,b^{-1})} = X_n for a >= 1";
pub const ANCHOR_COVER_ZERO: &str =
    "for a = 0 the union misses exactly {(0,y) : y != b, y != b^{-1}}";
pub const ANCHOR_COVER_NEGATIVE: &str = "U_{(-a,b^{-1})} ∪ F_{(a,b)} = X_n for a <= -1";
pub const ANCHOR_TRIVIALITY: &str =
    "every neighbourhood of f(a,b) contains f(U_{(a,b)}) and f(U_{(a,b)}^{-1}), so only the trivial topology remains";
pub const ANCHOR_DISCRETE_MUL: &str =
    "e <= h gives x <= xh <= xh^2 <= ... <= x, so a compatible order relates nothing";
pub const ANCHOR_DISCRETE_INV: &str = "inversion is monotone for the discrete order";
pub const ANCHOR_DISCRETE_WITNESS: &str = "the discrete topology is the antichain order";

/// What a report was computed for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Parameters {
    pub n: usize,
    pub group: String,
    pub m: Option<i64>,
}

/// One named check inside a report, tied to the statement it certifies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub verdict: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
    #[serde(skip)]
    passed: bool,
}

impl Check {
    fn from_verdict<W: Serialize>(name: &str, anchor: &str, verdict: &Verdict<W>) -> Check {
        Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            verdict: serde_json::to_value(verdict).expect("verdicts serialize"),
            detail: None,
            passed: verdict.passed(),
        }
    }

    fn with_detail(mut self, detail: Value) -> Check {
        self.detail = Some(detail);
        self
    }

    pub fn passed(&self) -> bool {
        self.passed
    }
}

/// Aggregated outcome of one verification run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub subject: String,
    pub parameters: Parameters,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    fn new(subject: &str, parameters: Parameters, checks: Vec<Check>) -> Report {
        let pass = checks.iter().all(Check::passed);
        Report {
            subject: subject.to_string(),
            parameters,
            checks,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Certifies, on the radius-`m` window, that `X_n` under the level order is
/// a paratopological group and not a topological one: the order is a valid
/// partial order, multiplication is jointly monotone, the window has the
/// declared size and sits inside the next one, and inversion fails
/// monotonicity with an explicit witness.
///
/// Meaningful for `m >= 1`; a radius-0 window is a single level, where the
/// inversion check cannot find its witness and the report honestly fails.
pub fn verify_proposition(fiber: &FiniteGroup, m: i64) -> Result<Report> {
    let x = XnGroup::new(fiber.clone());
    let window = x.window(m)?;
    let poset = x.window_poset(m)?;

    let order_check = Check::from_verdict(
        "window-order-is-partial-order",
        ANCHOR_ORDER,
        &validate_relation(&poset.to_rows())?,
    );

    let window_check = paratopo::check_window_paratopological(&x, m)?;
    let multiplication_check = Check::from_verdict(
        "multiplication-monotone",
        ANCHOR_MULTIPLICATION,
        &window_check.verdict,
    )
    .with_detail(json!({ "cases": window_check.cases }));

    let expected_size = (2 * m as i128 + 1) * x.n() as i128;
    let size_verdict = if window.len() as i128 == expected_size {
        Verdict::Pass
    } else {
        Verdict::Fail(json!({ "expected": expected_size as i64, "found": window.len() }))
    };
    let size_check = Check::from_verdict("window-size", ANCHOR_WINDOW_SIZE, &size_verdict)
        .with_detail(json!({ "expected": expected_size as i64, "found": window.len() }));

    let mut inverse_map = Vec::with_capacity(window.len());
    for &p in window.elements() {
        inverse_map.push(window.index(x.inv(p)?)?);
    }
    let inversion_check = match is_monotone(&poset, &poset, &inverse_map)? {
        Verdict::Fail(pair) => {
            let first = window.element(pair.first)?;
            let second = window.element(pair.second)?;
            Check::from_verdict(
                "inversion-not-monotone",
                ANCHOR_INVERSION,
                &Verdict::<Value>::Pass,
            )
            .with_detail(json!({ "witness": [first, second] }))
        }
        Verdict::Pass => Check::from_verdict(
            "inversion-not-monotone",
            ANCHOR_INVERSION,
            &Verdict::Fail("inversion is monotone on this window".to_string()),
        ),
    };

    let outer = x.window(
        m.checked_add(1)
            .ok_or(crate::Error::Overflow("window radius"))?,
    )?;
    let mut nesting_verdict = Verdict::Pass;
    for &p in window.elements() {
        if !outer.contains(p) {
            nesting_verdict = Verdict::Fail(p);
            break;
        }
    }
    let nesting_check =
        Check::from_verdict("windows-nested", ANCHOR_WINDOW_UNION, &nesting_verdict)
            .with_detail(json!({ "inner": window.len(), "outer": outer.len() }));

    Ok(Report::new(
        "proposition",
        Parameters {
            n: x.n(),
            group: fiber.name().to_string(),
            m: Some(m),
        },
        vec![
            order_check,
            multiplication_check,
            size_check,
            inversion_check,
            nesting_check,
        ],
    ))
}

/// Certifies, on the radius-`m` window, the set-level facts that force any
/// topological group receiving a continuous isomorphism from `X_n` to carry
/// the trivial topology: the inverse identity for every element, the exact
/// covering behaviour in all three level bands, and that saturating any
/// single point under `U`/`F` propagation fills the whole window.
///
/// Meaningful for `m >= 1`; radius 0 leaves nothing to propagate through.
pub fn verify_theorem(fiber: &FiniteGroup, m: i64) -> Result<Report> {
    let x = XnGroup::new(fiber.clone());
    let window = x.window(m)?;
    let full: BTreeSet<XnElement> = window.elements().iter().copied().collect();

    let mut identity_verdict = Verdict::Pass;
    for &p in window.elements() {
        if let Verdict::Fail(w) = x.inverse_identity_check(p, m)? {
            identity_verdict = Verdict::Fail(json!({ "element": p, "difference": w }));
            break;
        }
    }
    let identity_check = Check::from_verdict(
        "inverse-of-open-is-closed",
        ANCHOR_INVERSE_IDENTITY,
        &identity_verdict,
    )
    .with_detail(json!({ "elements": window.len() }));

    let mut above_checked = 0u64;
    let mut above_verdict = Verdict::Pass;
    for &p in window.elements().iter().filter(|p| p.a >= 1) {
        above_checked += 1;
        let cover = x.covering_check(p, m)?;
        if !cover.full {
            above_verdict = Verdict::Fail(json!({ "element": p, "missing": cover.missing }));
            break;
        }
    }
    let above_check = Check::from_verdict(
        "covering-above-level-zero",
        ANCHOR_COVER_POSITIVE,
        &above_verdict,
    )
    .with_detail(json!({ "elements": above_checked }));

    let mut zero_verdict = Verdict::Pass;
    for b in 0..x.n() {
        let p = XnElement::new(0, b);
        let cover = x.covering_check(p, m)?;
        let b_inverse = x.fiber().inv(b)?;
        let expected: BTreeSet<XnElement> = (0..x.n())
            .filter(|&y| y != b && y != b_inverse)
            .map(|y| XnElement::new(0, y))
            .collect();
        if cover.missing != expected {
            zero_verdict = Verdict::Fail(json!({
                "element": p,
                "missing": cover.missing,
                "expected": expected,
            }));
            break;
        }
    }
    let zero_check =
        Check::from_verdict("covering-at-level-zero", ANCHOR_COVER_ZERO, &zero_verdict)
            .with_detail(json!({ "elements": x.n() }));

    let mut below_checked = 0u64;
    let mut below_verdict = Verdict::Pass;
    for &p in window.elements().iter().filter(|p| p.a <= -1) {
        below_checked += 1;
        let literal = x.covering_check(p, m)?;
        let swapped = x.covering_check(x.inv(p)?, m)?;
        if !swapped.full {
            below_verdict =
                Verdict::Fail(json!({ "element": p, "swapped_missing": swapped.missing }));
            break;
        }
        if literal.full {
            below_verdict = Verdict::Fail(json!({
                "element": p,
                "unexpected": "literal union covers the window",
            }));
            break;
        }
    }
    let below_check = Check::from_verdict(
        "covering-below-level-zero-swapped",
        ANCHOR_COVER_NEGATIVE,
        &below_verdict,
    )
    .with_detail(json!({ "elements": below_checked }));

    let mut saturation_verdict = Verdict::Pass;
    for &p in window.elements() {
        let reached = x.saturate(&BTreeSet::from([p]), m)?;
        if reached != full {
            saturation_verdict = Verdict::Fail(json!({
                "element": p,
                "reached": reached.len(),
                "window": full.len(),
            }));
            break;
        }
    }
    let saturation_check = Check::from_verdict(
        "saturation-fills-window",
        ANCHOR_TRIVIALITY,
        &saturation_verdict,
    )
    .with_detail(json!({ "elements": window.len() }));

    Ok(Report::new(
        "theorem",
        Parameters {
            n: x.n(),
            group: fiber.name().to_string(),
            m: Some(m),
        },
        vec![
            identity_check,
            above_check,
            zero_check,
            below_check,
            saturation_check,
        ],
    ))
}

/// Certifies the finite T0 analogue of "trivial or discrete": over every
/// labeled partial order on the group's carrier, exactly one order makes
/// multiplication monotone, it also makes inversion monotone, and it is the
/// antichain, i.e. the discrete topology.
pub fn verify_finite_discreteness(group: &FiniteGroup) -> Result<Report> {
    let classification = paratopo::classify(group)?;

    let para_verdict = if classification.paratopological == 1 {
        Verdict::Pass
    } else {
        Verdict::Fail(json!({ "paratopological": classification.paratopological }))
    };
    let para_check = Check::from_verdict(
        "paratopological-count-is-one",
        ANCHOR_DISCRETE_MUL,
        &para_verdict,
    )
    .with_detail(json!({ "total_orders": classification.total_orders }));

    let topo_verdict = if classification.topological == 1 {
        Verdict::Pass
    } else {
        Verdict::Fail(json!({ "topological": classification.topological }))
    };
    let topo_check = Check::from_verdict(
        "topological-count-is-one",
        ANCHOR_DISCRETE_INV,
        &topo_verdict,
    );

    let antichain = PosetFile {
        size: group.order(),
        leq: Vec::new(),
    };
    let witness_verdict = if classification.witnesses == vec![antichain] {
        Verdict::Pass
    } else {
        Verdict::Fail(json!({ "witnesses": classification.witnesses }))
    };
    let witness_check = Check::from_verdict(
        "surviving-order-is-discrete",
        ANCHOR_DISCRETE_WITNESS,
        &witness_verdict,
    );

    Ok(Report::new(
        "discreteness",
        Parameters {
            n: group.order(),
            group: group.name().to_string(),
            m: None,
        },
        vec![para_check, topo_check, witness_check],
    ))
}
