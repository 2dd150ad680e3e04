//! The group `Z x F` with the level order, truncated to finite windows.
//!
//! For a finite fiber group `F` of order n, the carrier is all pairs
//! `(a, b)` with `a` an integer level and `b` a fiber index. The order is
//! `(a,b) <= (c,d)` iff `a < c` or `(a,b) = (c,d)`: distinct elements on a
//! common level are incomparable, and anything on a lower level sits below
//! everything above. Multiplication `(a,b)(c,d) = (a+c, bd)` is monotone in
//! both arguments; inversion `(a,b)^{-1} = (-a, b^{-1})` reverses levels and
//! so is antitone, which is exactly what makes the associated Alexandroff
//! topology paratopological but not a group topology.
//!
//! Every computation here is restricted to a window `H_m`, the elements with
//! `-m <= a <= m`. The order is level-local, so windows are faithful: the
//! minimal open set `U_p` (down-set) and minimal closed set `F_p` (up-set)
//! intersected with `H_m` have the closed forms
//!
//! ```text
//! U_(a,b) = { (x,y) : x < a } with (a,b) adjoined
//! F_(a,b) = { (x,y) : x > a } with (a,b) adjoined
//! ```
//!
//! and inversion maps `H_m` onto itself, so the set identity
//! `U_(a,b)^{-1} = F_(-a,b^{-1})` can be checked exactly inside the window.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::group::FiniteGroup;
use crate::poset::Poset;
use crate::verdict::Verdict;
use crate::Result;

/// A point `(a, b)`: integer level `a`, fiber index `b`.
///
/// The derived `Ord` is the lexicographic storage order used for windows and
/// serialized sets. It is a total order and is NOT the level order of the
/// topology; use [`XnGroup::leq`] for that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XnElement {
    pub a: i64,
    pub b: usize,
}

impl XnElement {
    pub fn new(a: i64, b: usize) -> XnElement {
        XnElement { a, b }
    }
}

impl fmt::Display for XnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl FromStr for XnElement {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<XnElement, String> {
        let malformed = || format!("expected an element of the form '(a,b)', got '{s}'");
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(malformed)?;
        let (a, b) = inner.split_once(',').ok_or_else(malformed)?;
        let a = a.trim().parse::<i64>().map_err(|_| malformed())?;
        let b = b.trim().parse::<usize>().map_err(|_| malformed())?;
        Ok(XnElement { a, b })
    }
}

impl Serialize for XnElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The finite window `H_m`: all elements with `-m <= a <= m`.
///
/// Elements are materialized in lexicographic order, so the element at
/// position `i` has level `i / n - m` and fiber index `i % n`. The window is
/// closed under inversion, since inversion negates the level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    n: usize,
    radius: i64,
    elements: Vec<XnElement>,
}

impl Window {
    fn new(n: usize, radius: i64) -> Result<Window> {
        if radius < 0 {
            return Err(Error::NegativeRadius(radius));
        }
        let levels = radius
            .checked_mul(2)
            .and_then(|d| d.checked_add(1))
            .and_then(|l| usize::try_from(l).ok())
            .ok_or(Error::Overflow("window size"))?;
        let size = levels
            .checked_mul(n)
            .ok_or(Error::Overflow("window size"))?;
        let mut elements = Vec::with_capacity(size);
        for a in -radius..=radius {
            for b in 0..n {
                elements.push(XnElement { a, b });
            }
        }
        Ok(Window {
            n,
            radius,
            elements,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[XnElement] {
        &self.elements
    }

    pub fn contains(&self, p: XnElement) -> bool {
        -self.radius <= p.a && p.a <= self.radius && p.b < self.n
    }

    /// Position of `p` in element order: `(p.a + radius) * n + p.b`.
    pub fn index(&self, p: XnElement) -> Result<usize> {
        if !self.contains(p) {
            return Err(Error::OutsideWindow {
                element: p.to_string(),
                radius: self.radius,
            });
        }
        Ok((p.a + self.radius) as usize * self.n + p.b)
    }

    pub fn element(&self, index: usize) -> Result<XnElement> {
        self.elements
            .get(index)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index,
                size: self.elements.len(),
            })
    }
}

/// Union coverage of a window, with the exact complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageResult {
    pub full: bool,
    pub missing: BTreeSet<XnElement>,
}

/// `Z x F` for a finite fiber group `F`, with the level order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XnGroup {
    fiber: FiniteGroup,
}

impl XnGroup {
    pub fn new(fiber: FiniteGroup) -> XnGroup {
        XnGroup { fiber }
    }

    pub fn fiber(&self) -> &FiniteGroup {
        &self.fiber
    }

    /// Order of the fiber; the `n` in `X_n`.
    pub fn n(&self) -> usize {
        self.fiber.order()
    }

    pub fn identity(&self) -> XnElement {
        XnElement { a: 0, b: 0 }
    }

    pub fn mul(&self, p: XnElement, q: XnElement) -> Result<XnElement> {
        let a =
            p.a.checked_add(q.a)
                .ok_or(Error::Overflow("level addition"))?;
        Ok(XnElement {
            a,
            b: self.fiber.mul(p.b, q.b)?,
        })
    }

    pub fn inv(&self, p: XnElement) -> Result<XnElement> {
        let a = p.a.checked_neg().ok_or(Error::Overflow("level negation"))?;
        Ok(XnElement {
            a,
            b: self.fiber.inv(p.b)?,
        })
    }

    /// The level order: `p <= q` iff `p.a < q.a` or `p = q`.
    pub fn leq(&self, p: XnElement, q: XnElement) -> bool {
        p.a < q.a || p == q
    }

    pub fn window(&self, radius: i64) -> Result<Window> {
        Window::new(self.n(), radius)
    }

    fn check_in_window(&self, p: XnElement, radius: i64) -> Result<()> {
        if radius < 0 {
            return Err(Error::NegativeRadius(radius));
        }
        if p.a < -radius || p.a > radius || p.b >= self.n() {
            return Err(Error::OutsideWindow {
                element: p.to_string(),
                radius,
            });
        }
        Ok(())
    }

    /// The window part of `U_p` by closed form: every element strictly below
    /// level `p.a`, plus `p` itself. The minimal open neighbourhood of `p`.
    pub fn u_set(&self, p: XnElement, radius: i64) -> Result<BTreeSet<XnElement>> {
        self.check_in_window(p, radius)?;
        let mut set = self.level_band(-radius, p.a - 1);
        set.insert(p);
        Ok(set)
    }

    /// The window part of `F_p` by closed form: every element strictly above
    /// level `p.a`, plus `p` itself. The closure of `{p}` in the window.
    pub fn f_set(&self, p: XnElement, radius: i64) -> Result<BTreeSet<XnElement>> {
        self.check_in_window(p, radius)?;
        let mut set = self.level_band(p.a + 1, radius);
        set.insert(p);
        Ok(set)
    }

    /// All window elements with level in `lo..=hi` (clamped to the window by
    /// the callers).
    fn level_band(&self, lo: i64, hi: i64) -> BTreeSet<XnElement> {
        let mut set = BTreeSet::new();
        for a in lo..=hi {
            for b in 0..self.n() {
                set.insert(XnElement { a, b });
            }
        }
        set
    }

    /// Checks `U_p^{-1} = F_{p^{-1}}` inside the window: the elementwise
    /// inverse of the minimal open set of `p` against the minimal closed set
    /// of `p^{-1}`. Exact, because inversion maps the window onto itself.
    /// The witness is the smallest element of the symmetric difference.
    pub fn inverse_identity_check(&self, p: XnElement, radius: i64) -> Result<Verdict<XnElement>> {
        let image: BTreeSet<XnElement> = self
            .u_set(p, radius)?
            .into_iter()
            .map(|q| self.inv(q))
            .collect::<Result<_>>()?;
        let expected = self.f_set(self.inv(p)?, radius)?;
        match image.symmetric_difference(&expected).next() {
            None => Ok(Verdict::Pass),
            Some(&w) => Ok(Verdict::Fail(w)),
        }
    }

    /// Computes the window part of the union `U_p` with `F_{p^{-1}}` and
    /// reports exactly what it misses. For `p.a >= 1` the union is the whole window; for
    /// `p.a = 0` it misses `{(0,y) : y != b, y != b^{-1}}`; for `p.a <= -1`
    /// it misses the levels between `p.a` and `-p.a` apart from `p` and
    /// `p^{-1}` themselves, while the swapped union (this check applied to
    /// `p^{-1}`) is full.
    pub fn covering_check(&self, p: XnElement, radius: i64) -> Result<CoverageResult> {
        let mut union = self.u_set(p, radius)?;
        union.extend(self.f_set(self.inv(p)?, radius)?);
        let missing: BTreeSet<XnElement> = self
            .window(radius)?
            .elements()
            .iter()
            .copied()
            .filter(|q| !union.contains(q))
            .collect();
        Ok(CoverageResult {
            full: missing.is_empty(),
            missing,
        })
    }

    /// `H_m` as a finite poset under [`XnGroup::leq`], indexed by
    /// [`Window::index`].
    pub fn window_poset(&self, radius: i64) -> Result<Poset> {
        let window = self.window(radius)?;
        let elements = window.elements();
        Ok(
            Poset::from_fn(elements.len(), |i, j| self.leq(elements[i], elements[j]))
                .expect("level order restricted to a window is a partial order"),
        )
    }

    /// Least fixed point of `T -> T u U(T) u F(T)` inside the window: the
    /// smallest superset of `seed` containing the minimal open set and the
    /// closure of each of its points. Any open set around a continuous
    /// isomorphic image of a seed point must contain the image of the
    /// result, so a saturation that fills the window certifies that only the
    /// trivial topology is available there.
    pub fn saturate(&self, seed: &BTreeSet<XnElement>, radius: i64) -> Result<BTreeSet<XnElement>> {
        for &p in seed {
            self.check_in_window(p, radius)?;
        }
        let mut result = seed.clone();
        let mut frontier: Vec<XnElement> = result.iter().copied().collect();
        while let Some(p) = frontier.pop() {
            let mut reached = self.u_set(p, radius)?;
            reached.extend(self.f_set(p, radius)?);
            for q in reached {
                if result.insert(q) {
                    frontier.push(q);
                }
            }
        }
        Ok(result)
    }
}
