//! The reflection subgroup W' generated by the weight-one reflections.
//!
//! W' is itself a Coxeter group whose simple reflections S' are the
//! weight-one reflections r with n_1(r) = 1; equivalently the conjugates
//! w s w^-1 of weight-one generators s by elements w of the weight-zero
//! parabolic. Both constructions are computed and compared. Each r in S'
//! has a reduced palindromic word: weight-zero prefix, weight-one middle
//! letter, reversed prefix. The restriction of n_1 to W' is its length
//! function, which is what lets every W'-computation delegate to W.

use std::collections::{BTreeMap, BTreeSet};

use crate::coxeter::{
    enumerate_parabolic, labeled_inversion_count, positive_roots, reflection_of_root,
    CoxeterGroup, CoxeterSystem, Element, Side,
};
use crate::error::{Error, Result};

/// One simple reflection of W', with its palindromic form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SprimeReflection {
    /// The reflection as a W-element.
    pub element: Element,
    /// Weight-zero prefix of the palindrome.
    pub prefix: Vec<u8>,
    /// The weight-one middle generator.
    pub middle: u8,
}

impl SprimeReflection {
    /// prefix . middle . reversed prefix — a reduced word for the reflection.
    pub fn palindrome_word(&self) -> Vec<u8> {
        let mut w = self.prefix.clone();
        w.push(self.middle);
        w.extend(self.prefix.iter().rev());
        w
    }
}

/// Enumeration caps for building subgroup data.
#[derive(Debug, Clone)]
pub struct SubgroupCaps {
    pub root_cap: usize,
    pub parabolic_cap: usize,
    /// Depth bound on the W'-length of enumerated subgroup elements.
    pub n1_cap: usize,
    pub count_cap: usize,
    /// Order searches for induced matrix entries give up here and record
    /// infinity. Finite desk-scale cases stay well below it.
    pub order_cap: u32,
}

impl Default for SubgroupCaps {
    fn default() -> Self {
        Self {
            root_cap: 2000,
            parabolic_cap: 2000,
            n1_cap: 12,
            count_cap: 2000,
            order_cap: 12,
        }
    }
}

/// The simple reflections S', sorted by (length, word) of the W-element.
#[derive(Debug, Clone)]
pub struct SprimeSet {
    pub reflections: Vec<SprimeReflection>,
    /// True when the root enumeration behind the Dyer filter was truncated.
    pub roots_truncated: bool,
}

/// Compute S' by both characterizations and check they agree:
/// (a) weight-one reflections r with n_1(r) = 1, from the root enumeration;
/// (b) conjugates w s w^-1 with s weight-one and w in the weight-zero
///     parabolic (which must be finite).
/// Palindromic forms come from minimal conjugation witnesses and are
/// verified to be reduced with the unique weight-one letter in the middle.
pub fn compute_sprime(sys: &CoxeterSystem, caps: &SubgroupCaps) -> Result<SprimeSet> {
    let s0 = sys.generators_of_weight(0);
    let s1 = sys.generators_of_weight(1);
    let parabolic = enumerate_parabolic(sys, &s0, caps.parabolic_cap)?;

    // (b) Conjugates, keeping the first witness in (length, word) order;
    // a minimal witness makes the palindrome reduced.
    let mut by_elt: BTreeMap<Element, (Element, u8)> = BTreeMap::new();
    for w in &parabolic {
        for &s in &s1 {
            let mut word = w.word().to_vec();
            word.push(s as u8);
            word.extend(w.inverse_word());
            let r = sys.normalize_word(&word)?;
            by_elt.entry(r).or_insert_with(|| (w.clone(), s as u8));
        }
    }

    // (a) Dyer filter over the enumerated weight-one reflections.
    let roots = positive_roots(sys, caps.root_cap)?;
    let mut filtered: BTreeSet<Element> = BTreeSet::new();
    for root in roots.roots.iter().filter(|r| r.label() == 1) {
        let refl = reflection_of_root(sys, root)?;
        if labeled_inversion_count(sys, &refl, 1) == 1 {
            filtered.insert(refl);
        }
    }

    let conjugates: BTreeSet<Element> = by_elt.keys().cloned().collect();
    if !filtered.is_subset(&conjugates) || (!roots.truncated && filtered != conjugates) {
        return Err(Error::VerificationFailed {
            check: "sprime-two-ways",
            detail: format!(
                "Dyer filter gave {{{}}} but parabolic conjugation gave {{{}}}",
                join(&filtered),
                join(&conjugates)
            ),
        });
    }

    let mut reflections = Vec::with_capacity(by_elt.len());
    for (r, (w, s)) in by_elt {
        let refl = SprimeReflection { element: r.clone(), prefix: w.word().to_vec(), middle: s };
        let pal = refl.palindrome_word();
        if pal.len() != r.len() || sys.normalize_word(&pal)? != r {
            return Err(Error::VerificationFailed {
                check: "sprime-palindrome",
                detail: format!("witness of {r} does not spell a reduced palindrome"),
            });
        }
        if labeled_inversion_count(sys, &r, 1) != 1 {
            return Err(Error::VerificationFailed {
                check: "sprime-n1",
                detail: format!("conjugate {r} has n_1 != 1"),
            });
        }
        if !sys.mul(&r, &r)?.is_identity() {
            return Err(Error::VerificationFailed {
                check: "sprime-involution",
                detail: format!("{r} is not an involution"),
            });
        }
        reflections.push(refl);
    }
    Ok(SprimeSet { reflections, roots_truncated: roots.truncated })
}

fn join(set: &BTreeSet<Element>) -> String {
    set.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
}

/// Induced Coxeter matrix over S': each off-diagonal entry is the order of
/// r r' in W, found by repeated multiplication; 0 records infinity when the
/// search passes `order_cap`. Entries may exceed 6 — the induced system
/// needs no geometric representation of its own.
pub fn induced_matrix(
    sys: &CoxeterSystem,
    set: &SprimeSet,
    order_cap: u32,
) -> Result<Vec<Vec<u32>>> {
    let n = set.reflections.len();
    let mut matrix = vec![vec![1u32; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let p = sys.mul(&set.reflections[i].element, &set.reflections[j].element)?;
            let mut acc = p.clone();
            let mut ord = 1u32;
            while !acc.is_identity() {
                ord += 1;
                if ord > order_cap {
                    ord = 0;
                    break;
                }
                acc = sys.mul(&acc, &p)?;
            }
            matrix[i][j] = ord;
            matrix[j][i] = ord;
        }
    }
    Ok(matrix)
}

/// Enumerated elements of W' up to a W'-length bound. Each element is stored
/// both as its ShortLex-least word over S' indices and as its W-element.
#[derive(Debug, Clone)]
pub struct SubgroupElements {
    /// (S'-word, W-element) pairs sorted by (W'-length, S'-word).
    pub list: Vec<(Element, Element)>,
    by_sword: BTreeMap<Element, Element>,
    by_welt: BTreeMap<Element, Element>,
    pub truncated: bool,
}

impl SubgroupElements {
    pub fn ambient_of(&self, sword: &Element) -> Option<&Element> {
        self.by_sword.get(sword)
    }

    pub fn sword_of(&self, welt: &Element) -> Option<&Element> {
        self.by_welt.get(welt)
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }
}

/// Breadth-first enumeration of W' over the S' generators. Layer d holds
/// exactly the elements of W'-length d, and the first word reaching an
/// element is its ShortLex-least S'-word (parents are expanded in word order
/// with letters ascending). For every element the S'-word length is checked
/// against n_1 of its W-element.
pub fn enumerate_subgroup(
    sys: &CoxeterSystem,
    set: &SprimeSet,
    n1_cap: usize,
    count_cap: usize,
) -> Result<SubgroupElements> {
    let e = Element::identity();
    let mut by_sword = BTreeMap::new();
    let mut by_welt = BTreeMap::new();
    let mut list = vec![(e.clone(), e.clone())];
    by_sword.insert(e.clone(), e.clone());
    by_welt.insert(e.clone(), e);
    let mut frontier: Vec<(Element, Element)> = vec![list[0].clone()];
    let mut depth = 0usize;
    while !frontier.is_empty() && depth < n1_cap {
        let mut next = Vec::new();
        for (sword, welt) in &frontier {
            for (j, r) in set.reflections.iter().enumerate() {
                let mut word = welt.word().to_vec();
                word.extend(r.palindrome_word());
                let new_welt = sys.normalize_word(&word)?;
                if by_welt.contains_key(&new_welt) {
                    continue;
                }
                if list.len() == count_cap {
                    return Err(Error::CapExceeded {
                        what: format!("subgroup enumeration exceeds {count_cap} elements"),
                    });
                }
                let mut sw = sword.word().to_vec();
                sw.push(j as u8);
                let new_sword = Element::from_canonical_word(sw);
                by_sword.insert(new_sword.clone(), new_welt.clone());
                by_welt.insert(new_welt.clone(), new_sword.clone());
                list.push((new_sword.clone(), new_welt.clone()));
                next.push((new_sword, new_welt));
            }
        }
        frontier = next;
        depth += 1;
    }
    let truncated = !frontier.is_empty();
    for (sword, welt) in &list {
        if sword.len() != labeled_inversion_count(sys, welt, 1) {
            return Err(Error::VerificationFailed {
                check: "n1-is-subgroup-length",
                detail: format!("element {welt}: S'-length {} != n_1", sword.len()),
            });
        }
    }
    let mut list = list;
    list.sort();
    Ok(SubgroupElements { list, by_sword, by_welt, truncated })
}

/// Everything known about W': S' with palindromes, the induced Coxeter
/// matrix, and the enumerated elements. Immutable once built.
#[derive(Debug, Clone)]
pub struct SubgroupData {
    sprime: Vec<SprimeReflection>,
    roots_truncated: bool,
    matrix: Vec<Vec<u32>>,
    elements: SubgroupElements,
}

impl SubgroupData {
    pub fn build(sys: &CoxeterSystem, caps: &SubgroupCaps) -> Result<Self> {
        let set = compute_sprime(sys, caps)?;
        let matrix = induced_matrix(sys, &set, caps.order_cap)?;
        let elements = enumerate_subgroup(sys, &set, caps.n1_cap, caps.count_cap)?;
        Ok(Self {
            sprime: set.reflections,
            roots_truncated: set.roots_truncated,
            matrix,
            elements,
        })
    }

    pub fn sprime(&self) -> &[SprimeReflection] {
        &self.sprime
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn elements(&self) -> &SubgroupElements {
        &self.elements
    }

    pub fn roots_truncated(&self) -> bool {
        self.roots_truncated
    }

    /// Index of a W-element in S', if it is one of the simple reflections.
    pub fn sprime_index(&self, r: &Element) -> Option<usize> {
        self.sprime.iter().position(|q| &q.element == r)
    }

    /// |W'| when fully enumerated; None when the enumeration was truncated.
    pub fn order(&self) -> Option<usize> {
        (!self.elements.truncated).then_some(self.elements.list.len())
    }
}

/// The permutation r -> g r g^-1 of S' induced by an element of the
/// weight-zero parabolic; failure to land in S' (or to be a bijection) is a
/// verification failure, reported as an error rather than a panic.
pub fn conjugate_sprime(
    sys: &CoxeterSystem,
    data: &SubgroupData,
    g: &Element,
) -> Result<Vec<usize>> {
    if g.word().iter().any(|&s| sys.weights()[s as usize] != 0) {
        return Err(Error::NotInParabolic);
    }
    let n = data.sprime.len();
    let mut perm = Vec::with_capacity(n);
    for r in &data.sprime {
        let mut word = g.word().to_vec();
        word.extend_from_slice(r.element.word());
        word.extend(g.inverse_word());
        let c = sys.normalize_word(&word)?;
        match data.sprime_index(&c) {
            Some(j) => perm.push(j),
            None => {
                return Err(Error::NotPreserved {
                    detail: format!("{g} conjugates {} to {c}, outside S'", r.element),
                })
            }
        }
    }
    let mut seen = vec![false; n];
    for &j in &perm {
        if seen[j] {
            return Err(Error::NotPreserved {
                detail: format!("conjugation by {g} is not injective on S'"),
            });
        }
        seen[j] = true;
    }
    Ok(perm)
}

/// W' presented as a Coxeter group over the S' indices, with constant weight
/// one. Products are computed in W through the palindromic words and mapped
/// back through the element table; lengths are n_1 of the ambient element,
/// so length queries work even where the table stops.
#[derive(Debug, Clone, Copy)]
pub struct InducedGroup<'a> {
    sys: &'a CoxeterSystem,
    data: &'a SubgroupData,
}

impl<'a> InducedGroup<'a> {
    pub fn new(sys: &'a CoxeterSystem, data: &'a SubgroupData) -> Self {
        Self { sys, data }
    }

    pub fn data(&self) -> &SubgroupData {
        self.data
    }

    fn ambient(&self, x: &Element) -> Result<Element> {
        for &j in x.word() {
            if usize::from(j) >= self.data.sprime.len() {
                return Err(Error::GeneratorOutOfRange {
                    gen: usize::from(j),
                    rank: self.data.sprime.len(),
                });
            }
        }
        self.data
            .elements
            .ambient_of(x)
            .cloned()
            .ok_or(Error::NotInSubgroup)
    }

    fn ambient_product(&self, x: &Element, j: usize, side: Side) -> Result<Element> {
        let welt = self.ambient(x)?;
        let pal = self.data.sprime[j].palindrome_word();
        let mut word = Vec::with_capacity(welt.len() + pal.len());
        match side {
            Side::Right => {
                word.extend_from_slice(welt.word());
                word.extend(pal);
            }
            Side::Left => {
                word.extend(pal);
                word.extend_from_slice(welt.word());
            }
        }
        self.sys.normalize_word(&word)
    }
}

impl CoxeterGroup for InducedGroup<'_> {
    fn rank(&self) -> usize {
        self.data.sprime.len()
    }

    fn weight(&self, _s: usize) -> u8 {
        1
    }

    fn mul_gen(&self, x: &Element, s: usize, side: Side) -> Result<Element> {
        if s >= self.rank() {
            return Err(Error::GeneratorOutOfRange { gen: s, rank: self.rank() });
        }
        let product = self.ambient_product(x, s, side)?;
        self.data
            .elements
            .sword_of(&product)
            .cloned()
            .ok_or_else(|| Error::CapExceeded {
                what: format!(
                    "subgroup element {product} is beyond the enumerated W'-ball"
                ),
            })
    }

    fn gen_raises_length(&self, x: &Element, s: usize, side: Side) -> Result<bool> {
        if s >= self.rank() {
            return Err(Error::GeneratorOutOfRange { gen: s, rank: self.rank() });
        }
        let product = self.ambient_product(x, s, side)?;
        let n1 = self.sys.weighted_letter_count(product.word(), 1);
        Ok(n1 > x.len())
    }
}
