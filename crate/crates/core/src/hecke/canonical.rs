//! The canonical (Kazhdan-Lusztig) basis: for every w the unique bar-fixed
//! element c_w = sum p_{y,w} T_y with p_{w,w} = 1, p_{y,w} in vZ[v] for
//! y < w, and support inside the Bruhat interval below w.

use std::collections::{BTreeMap, HashMap};

use crate::coxeter::{bruhat_leq, CoxeterGroup, Element, Side};
use crate::error::Result;
use crate::exactmath::LaurentPoly;
use crate::hecke::elt::HeckeElt;

/// Memo table of canonical basis elements, expanded in the standard basis.
/// Keyed on demand; every stored entry has passed the defining conditions.
/// The fingerprint ties a table to the group it was computed for, so a cache
/// loaded from disk can never be silently reused against the wrong group.
#[derive(Debug, Clone)]
pub struct CanonicalCache {
    fingerprint: String,
    entries: HashMap<Element, HeckeElt>,
}

impl CanonicalCache {
    pub fn new(fingerprint: impl Into<String>) -> Self {
        Self {
            fingerprint: fingerprint.into(),
            entries: HashMap::new(),
        }
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, w: &Element) -> Option<&HeckeElt> {
        self.entries.get(w)
    }

    /// Entries sorted by (length, word) of the indexing element.
    pub fn sorted_entries(&self) -> Vec<(&Element, &HeckeElt)> {
        let mut v: Vec<_> = self.entries.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub(crate) fn insert(&mut self, w: Element, c: HeckeElt) {
        self.entries.insert(w, c);
    }
}

/// The canonical basis element c_w, memoized in `cache`.
///
/// Algorithm: take the smallest left descent s of w. For weight(s) = 0,
/// c_w = T_s c_{sw} (left translation by the weight-zero parabolic preserves
/// the basis). For weight(s) = 1, start from c_s c_{sw} with
/// c_s = T_s + v, then peel: while some coefficient at y != w escapes vZ[v],
/// subtract b_y c_y where b_y is the bar-invariant completion of the
/// offending coefficient, taking y of maximal (length, word) first. Any
/// bar-invariant triangular correction scheme lands on the same element, by
/// uniqueness.
pub fn canonical<G: CoxeterGroup>(
    group: &G,
    cache: &mut CanonicalCache,
    w: &Element,
) -> Result<HeckeElt> {
    if let Some(c) = cache.get(w) {
        return Ok(c.clone());
    }
    let c = compute(group, cache, w)?;
    assert_canonical_shape(group, w, &c)?;
    cache.insert(w.clone(), c.clone());
    Ok(c)
}

fn compute<G: CoxeterGroup>(
    group: &G,
    cache: &mut CanonicalCache,
    w: &Element,
) -> Result<HeckeElt> {
    if w.is_identity() {
        return Ok(HeckeElt::unit());
    }
    let s = group
        .smallest_descent(w, Side::Left)?
        .expect("non-identity element has a left descent");
    let sw = group.mul_gen(w, s, Side::Left)?;
    let c_sw = canonical(group, cache, &sw)?;
    if group.weight(s) == 0 {
        return c_sw.mul_gen(group, s, Side::Left);
    }

    // h = c_s * c_{sw} = T_s c_{sw} + v c_{sw}; bar-fixed with top term T_w.
    let mut h = &c_sw.mul_gen(group, s, Side::Left)? + &c_sw.scaled(&LaurentPoly::v());
    let mut guard = 0usize;
    loop {
        guard += 1;
        assert!(guard <= 10_000, "peeling failed to terminate");
        let bad = h
            .terms()
            .rev()
            .find(|(y, p)| *y != w && !p.in_v_zv())
            .map(|(y, p)| (y.clone(), p.clone()));
        let Some((y, p)) = bad else { break };
        let b = p.bar_invariant_completion();
        let c_y = canonical(group, cache, &y)?;
        h = &h - &c_y.scaled(&b);
    }
    Ok(h)
}

/// The defining conditions, checked on every element before it is cached:
/// unit coefficient at the top, all lower coefficients in vZ[v] and supported
/// below w in Bruhat order, and invariance under the bar involution.
fn assert_canonical_shape<G: CoxeterGroup>(group: &G, w: &Element, c: &HeckeElt) -> Result<()> {
    assert!(c.coeff(w).is_one(), "c_{w} must have unit top coefficient");
    for (y, p) in c.terms() {
        if y == w {
            continue;
        }
        assert!(p.in_v_zv(), "coefficient of T[{y}] in c[{w}] escapes vZ[v]: {p}");
        assert!(
            bruhat_leq(group, y, w)?,
            "support element {y} of c[{w}] is not below {w}"
        );
    }
    assert!(c.bar(group)? == *c, "c[{w}] is not bar-invariant");
    Ok(())
}

/// Coordinates of `h` in the canonical basis, by back-substitution from the
/// longest support element downward. The round trip is asserted before
/// returning, so the coordinates reproduce `h` exactly.
pub fn expand_in_canonical<G: CoxeterGroup>(
    group: &G,
    cache: &mut CanonicalCache,
    h: &HeckeElt,
) -> Result<BTreeMap<Element, LaurentPoly>> {
    let mut rem = h.clone();
    let mut out: BTreeMap<Element, LaurentPoly> = BTreeMap::new();
    while let Some((x, a)) = rem.top_term().map(|(x, a)| (x.clone(), a.clone())) {
        let c_x = canonical(group, cache, &x)?;
        rem = &rem - &c_x.scaled(&a);
        out.insert(x, a);
    }
    let mut back = HeckeElt::zero();
    for (x, a) in &out {
        back = &back + &canonical(group, cache, x)?.scaled(a);
    }
    assert!(back == *h, "canonical expansion failed to reproduce the input");
    Ok(out)
}
