//! Coxeter systems, the group-operations trait, ShortLex normalization and
//! Bruhat order.

use std::collections::BTreeSet;

use crate::coxeter::element::Element;
use crate::error::{Error, Result};
use crate::exactmath::QuadScalar;

/// Which side a generator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

pub const DEFAULT_LENGTH_CAP: usize = 128;

/// A Coxeter system (W,S) with a weight function L: S -> {0,1} and the Gram
/// matrix of its geometric representation, B(alpha_s, alpha_t) = -cos(pi/m_st).
///
/// Matrix entries are 1 on the diagonal and {2,..,6} or 0 (= infinity) off it;
/// these are exactly the orders whose cosines live in Q(sqrt2,sqrt3,sqrt5).
/// Immutable after construction and safe to share across threads.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    rank: usize,
    matrix: Vec<Vec<u32>>,
    weights: Vec<u8>,
    gram: Vec<Vec<QuadScalar>>,
    length_cap: usize,
}

impl CoxeterSystem {
    /// Validate a Coxeter matrix and weight vector and build the system.
    ///
    /// A weight function must be constant on generators joined by an odd
    /// bond, since s and t are then conjugate.
    pub fn new(matrix: Vec<Vec<u32>>, weights: Vec<u8>) -> Result<Self> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(Error::BadRank);
        }
        if matrix.iter().any(|row| row.len() != rank) {
            return Err(Error::NonSymmetricMatrix);
        }
        for s in 0..rank {
            if matrix[s][s] != 1 {
                return Err(Error::BadDiagonal(s));
            }
            for t in 0..rank {
                if matrix[s][t] != matrix[t][s] {
                    return Err(Error::NonSymmetricMatrix);
                }
                let m = matrix[s][t];
                if s != t && m != 0 && !(2..=6).contains(&m) {
                    return Err(Error::UnsupportedOrder { s, t, m });
                }
            }
        }
        if weights.len() != rank || weights.iter().any(|&w| w > 1) {
            return Err(Error::BadWeight);
        }
        for s in 0..rank {
            for t in (s + 1)..rank {
                let m = matrix[s][t];
                if m % 2 == 1 && m != 0 && weights[s] != weights[t] {
                    return Err(Error::OddEdgeWeightMismatch { s, t, m });
                }
            }
        }
        let gram = (0..rank)
            .map(|s| {
                (0..rank)
                    .map(|t| -&QuadScalar::cos_pi_over(matrix[s][t]).expect("validated entry"))
                    .collect()
            })
            .collect();
        Ok(Self {
            rank,
            matrix,
            weights,
            gram,
            length_cap: DEFAULT_LENGTH_CAP,
        })
    }

    pub fn with_length_cap(mut self, cap: usize) -> Self {
        self.length_cap = cap;
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn order(&self, s: usize, t: usize) -> u32 {
        self.matrix[s][t]
    }

    pub fn weights(&self) -> &[u8] {
        &self.weights
    }

    pub fn gram(&self) -> &[Vec<QuadScalar>] {
        &self.gram
    }

    pub fn length_cap(&self) -> usize {
        self.length_cap
    }

    /// Generators of the given weight, in index order.
    pub fn generators_of_weight(&self, e: u8) -> Vec<usize> {
        (0..self.rank).filter(|&s| self.weights[s] == e).collect()
    }

    /// Number of letters of weight `e` in a word; for a reduced word this
    /// equals the count of inversion roots carrying label `e`.
    pub fn weighted_letter_count(&self, word: &[u8], e: u8) -> usize {
        word.iter().filter(|&&s| self.weights[s as usize] == e).count()
    }

    /// Stable hash of (matrix, weights); keys on-disk caches.
    pub fn fingerprint(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |b: u8| {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        };
        eat(self.rank as u8);
        for row in &self.matrix {
            for &m in row {
                for b in m.to_le_bytes() {
                    eat(b);
                }
            }
        }
        for &w in &self.weights {
            eat(w);
        }
        format!("{h:016x}")
    }

    pub(crate) fn check_gen(&self, s: usize) -> Result<()> {
        if s < self.rank {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange { gen: s, rank: self.rank })
        }
    }

    pub fn simple_root_coords(&self, s: usize) -> Vec<QuadScalar> {
        let mut v = vec![QuadScalar::zero(); self.rank];
        v[s] = QuadScalar::one();
        v
    }

    /// Apply the simple reflection `s` to a coordinate vector in the
    /// simple-root basis: lambda -> lambda - 2 B(alpha_s, lambda) alpha_s,
    /// which changes only coordinate `s`.
    pub(crate) fn apply_gen_to_coords(&self, coords: &mut [QuadScalar], s: usize) {
        let mut b = QuadScalar::zero();
        for t in 0..self.rank {
            if !coords[t].is_zero() {
                b = &b + &(&self.gram[s][t] * &coords[t]);
            }
        }
        coords[s] = &coords[s] - &b.double();
    }

    /// Sign of a root vector: +1 when all coordinates are >= 0 (at least one
    /// > 0), -1 in the mirrored case. Roots are never mixed-sign.
    pub(crate) fn coords_sign(&self, coords: &[QuadScalar]) -> i8 {
        let mut pos = false;
        let mut neg = false;
        for c in coords {
            match c.sign() {
                1 => pos = true,
                -1 => neg = true,
                _ => {}
            }
        }
        match (pos, neg) {
            (true, false) => 1,
            (false, true) => -1,
            (false, false) => 0,
            (true, true) => panic!("mixed-sign vector is not a root"),
        }
    }

    /// True iff `s` is a left descent of the element spelled by `letters`
    /// (not necessarily reduced): w^-1(alpha_s) is a negative root.
    fn is_left_descent_of_word(&self, letters: &[u8], s: usize) -> bool {
        let mut v = self.simple_root_coords(s);
        for &l in letters {
            self.apply_gen_to_coords(&mut v, l as usize);
        }
        self.coords_sign(&v) < 0
    }
}

/// Group-level operations every Hecke-algebra computation needs. Implemented
/// by `CoxeterSystem` (via the root action), by `GroupTable` (precomputed
/// products) and by the induced system of a reflection subgroup (delegating
/// to the ambient group).
pub trait CoxeterGroup {
    fn rank(&self) -> usize;

    fn weight(&self, s: usize) -> u8;

    /// Product of a canonical element with a generator, renormalized.
    fn mul_gen(&self, x: &Element, s: usize, side: Side) -> Result<Element>;

    /// Whether multiplying by `s` on the given side increases length. The
    /// default materializes the product; implementations may answer cheaper.
    fn gen_raises_length(&self, x: &Element, s: usize, side: Side) -> Result<bool> {
        Ok(self.mul_gen(x, s, side)?.len() > x.len())
    }

    fn identity(&self) -> Element {
        Element::identity()
    }

    /// Canonical form of an arbitrary word in the generators.
    fn normalize_word(&self, word: &[u8]) -> Result<Element> {
        let mut acc = self.identity();
        for &s in word {
            acc = self.mul_gen(&acc, s as usize, Side::Right)?;
        }
        Ok(acc)
    }

    fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        let mut acc = a.clone();
        for &s in b.word() {
            acc = self.mul_gen(&acc, s as usize, Side::Right)?;
        }
        Ok(acc)
    }

    fn inverse(&self, x: &Element) -> Result<Element> {
        self.normalize_word(&x.inverse_word())
    }

    fn smallest_descent(&self, x: &Element, side: Side) -> Result<Option<usize>> {
        if x.is_identity() {
            return Ok(None);
        }
        for s in 0..self.rank() {
            if !self.gen_raises_length(x, s, side)? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    fn descents(&self, x: &Element, side: Side) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for s in 0..self.rank() {
            if !self.gen_raises_length(x, s, side)? {
                out.push(s);
            }
        }
        Ok(out)
    }
}

impl CoxeterGroup for CoxeterSystem {
    fn rank(&self) -> usize {
        self.rank
    }

    fn weight(&self, s: usize) -> u8 {
        self.weights[s]
    }

    fn mul_gen(&self, x: &Element, s: usize, side: Side) -> Result<Element> {
        self.check_gen(s)?;
        let mut word = Vec::with_capacity(x.len() + 1);
        match side {
            Side::Left => {
                word.push(s as u8);
                word.extend_from_slice(x.word());
            }
            Side::Right => {
                word.extend_from_slice(x.word());
                word.push(s as u8);
            }
        }
        self.normalize_word(&word)
    }

    fn gen_raises_length(&self, x: &Element, s: usize, side: Side) -> Result<bool> {
        self.check_gen(s)?;
        // l(sx) > l(x) iff x^-1(alpha_s) > 0; l(xs) > l(x) iff x(alpha_s) > 0.
        let mut v = self.simple_root_coords(s);
        match side {
            Side::Left => {
                for &l in x.word() {
                    self.apply_gen_to_coords(&mut v, l as usize);
                }
            }
            Side::Right => {
                for &l in x.word().iter().rev() {
                    self.apply_gen_to_coords(&mut v, l as usize);
                }
            }
        }
        Ok(self.coords_sign(&v) > 0)
    }

    /// ShortLex-least reduced word: repeatedly pick the smallest left descent
    /// and strip it, detecting descents through the root action.
    fn normalize_word(&self, word: &[u8]) -> Result<Element> {
        for &s in word {
            self.check_gen(s as usize)?;
        }
        let mut letters: Vec<u8> = word.to_vec();
        let mut out: Vec<u8> = Vec::new();
        loop {
            let mut found = None;
            for s in 0..self.rank {
                if self.is_left_descent_of_word(&letters, s) {
                    found = Some(s);
                    break;
                }
            }
            match found {
                None => break,
                Some(s) => {
                    out.push(s as u8);
                    letters.insert(0, s as u8);
                }
            }
        }
        if out.len() > self.length_cap {
            return Err(Error::LengthCapExceeded { cap: self.length_cap });
        }
        Ok(Element::from_canonical_word(out))
    }
}

/// Bruhat order by the descent recursion: pick a left descent s of y; then
/// x <= y iff (sx <= sy when s descends x, else x <= sy).
pub fn bruhat_leq<G: CoxeterGroup>(group: &G, x: &Element, y: &Element) -> Result<bool> {
    let mut x = x.clone();
    let mut y = y.clone();
    loop {
        if x.len() > y.len() {
            return Ok(false);
        }
        if x.is_identity() {
            return Ok(true);
        }
        let s = match group.smallest_descent(&y, Side::Left)? {
            Some(s) => s,
            None => return Ok(x.is_identity()),
        };
        if !group.gen_raises_length(&x, s, Side::Left)? {
            x = group.mul_gen(&x, s, Side::Left)?;
        }
        y = group.mul_gen(&y, s, Side::Left)?;
    }
}

/// All elements reachable as subwords of the canonical word of `y`; by the
/// subword property this is the Bruhat interval [e, y].
pub fn subword_closure<G: CoxeterGroup>(group: &G, y: &Element) -> Result<BTreeSet<Element>> {
    let word = y.word();
    let n = word.len();
    assert!(n < 22, "subword closure is exponential; word too long");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let sub: Vec<u8> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| word[i]).collect();
        out.insert(group.normalize_word(&sub)?);
    }
    Ok(out)
}

/// Brute-force Bruhat test via the subword characterization. Independent
/// route kept alongside `bruhat_leq`; the verification suites compare them.
pub fn bruhat_leq_subword<G: CoxeterGroup>(group: &G, x: &Element, y: &Element) -> Result<bool> {
    Ok(subword_closure(group, y)?.contains(x))
}

/// Elements enumerated breadth-first up to a length bound.
#[derive(Debug, Clone)]
pub struct Enumeration {
    /// Sorted by (length, word).
    pub elements: Vec<Element>,
    /// True when the whole group was exhausted below the length bound.
    pub complete: bool,
}

pub fn enumerate_elements<G: CoxeterGroup>(
    group: &G,
    max_len: usize,
    count_cap: usize,
) -> Result<Enumeration> {
    enumerate_over_gens(group, &(0..group.rank()).collect::<Vec<_>>(), Some(max_len), count_cap)
}

/// The standard parabolic subgroup generated by `gens`, which must be finite
/// within `count_cap`.
pub fn enumerate_parabolic<G: CoxeterGroup>(
    group: &G,
    gens: &[usize],
    count_cap: usize,
) -> Result<Vec<Element>> {
    let e = enumerate_over_gens(group, gens, None, count_cap)?;
    if !e.complete {
        return Err(Error::CapExceeded {
            what: format!("parabolic subgroup on {gens:?} exceeds {count_cap} elements"),
        });
    }
    Ok(e.elements)
}

fn enumerate_over_gens<G: CoxeterGroup>(
    group: &G,
    gens: &[usize],
    max_len: Option<usize>,
    count_cap: usize,
) -> Result<Enumeration> {
    let mut seen: BTreeSet<Element> = BTreeSet::new();
    seen.insert(group.identity());
    let mut frontier: Vec<Element> = vec![group.identity()];
    let mut len = 0usize;
    let mut complete = false;
    loop {
        if frontier.is_empty() {
            complete = true;
            break;
        }
        if let Some(cap) = max_len {
            if len == cap {
                break;
            }
        }
        let mut next: Vec<Element> = Vec::new();
        for x in &frontier {
            for &s in gens {
                if group.gen_raises_length(x, s, Side::Right)? {
                    let y = group.mul_gen(x, s, Side::Right)?;
                    if seen.insert(y.clone()) {
                        if seen.len() > count_cap {
                            return Err(Error::CapExceeded {
                                what: format!("element enumeration exceeds {count_cap}"),
                            });
                        }
                        next.push(y);
                    }
                }
            }
        }
        frontier = next;
        len += 1;
    }
    Ok(Enumeration { elements: seen.into_iter().collect(), complete })
}

/// Every reduced word of `w`, each beginning with one of its left descents.
pub fn reduced_words<G: CoxeterGroup>(group: &G, w: &Element) -> Result<Vec<Vec<u8>>> {
    if w.is_identity() {
        return Ok(vec![Vec::new()]);
    }
    let mut out = Vec::new();
    for s in group.descents(w, Side::Left)? {
        let sw = group.mul_gen(w, s, Side::Left)?;
        for mut tail in reduced_words(group, &sw)? {
            tail.insert(0, s as u8);
            out.push(tail);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn b2_system() -> CoxeterSystem {
        CoxeterSystem::new(vec![vec![1, 4], vec![4, 1]], vec![0, 1]).unwrap()
    }

    pub(crate) fn g2_system() -> CoxeterSystem {
        CoxeterSystem::new(vec![vec![1, 6], vec![6, 1]], vec![0, 1]).unwrap()
    }

    fn a3_system() -> CoxeterSystem {
        CoxeterSystem::new(
            vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]],
            vec![1, 1, 1],
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        assert!(b2_system().rank() == 2);
        assert_eq!(
            CoxeterSystem::new(vec![vec![1, 3], vec![3, 1]], vec![0, 1]).unwrap_err(),
            Error::OddEdgeWeightMismatch { s: 0, t: 1, m: 3 }
        );
        assert_eq!(
            CoxeterSystem::new(vec![vec![1, 2], vec![3, 1]], vec![1, 1]).unwrap_err(),
            Error::NonSymmetricMatrix
        );
        assert_eq!(
            CoxeterSystem::new(vec![vec![2, 3], vec![3, 1]], vec![1, 1]).unwrap_err(),
            Error::BadDiagonal(0)
        );
        assert_eq!(
            CoxeterSystem::new(vec![vec![1, 7], vec![7, 1]], vec![1, 1]).unwrap_err(),
            Error::UnsupportedOrder { s: 0, t: 1, m: 7 }
        );
        assert_eq!(
            CoxeterSystem::new(vec![vec![1, 4], vec![4, 1]], vec![0, 2]).unwrap_err(),
            Error::BadWeight
        );
        assert_eq!(CoxeterSystem::new(vec![], vec![]).unwrap_err(), Error::BadRank);
    }

    #[test]
    fn normalize_examples() {
        let sys = b2_system();
        assert!(sys.normalize_word(&[1, 1]).unwrap().is_identity());
        // t s t s t reduces to s t s, the ShortLex-least of {sts}.
        assert_eq!(sys.normalize_word(&[1, 0, 1, 0, 1]).unwrap().word(), &[0, 1, 0]);
        // The longest element has words stst and tsts; ShortLex picks stst.
        assert_eq!(sys.normalize_word(&[0, 1, 0, 1]).unwrap().word(), &[0, 1, 0, 1]);
        assert_eq!(sys.normalize_word(&[1, 0, 1, 0]).unwrap().word(), &[0, 1, 0, 1]);
    }

    #[test]
    fn length_cap_is_loud() {
        let inf = CoxeterSystem::new(vec![vec![1, 0], vec![0, 1]], vec![0, 1])
            .unwrap()
            .with_length_cap(5);
        let word: Vec<u8> = (0..8).map(|i| (i % 2) as u8).collect();
        assert_eq!(inf.normalize_word(&word).unwrap_err(), Error::LengthCapExceeded { cap: 5 });
    }

    /// Abstract dihedral group: (rot, refl) in Z_m x {1,-1}, with the
    /// reflections s = (0,-), t = (1,-). Independent of the root action.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
    struct Dih {
        rot: i64,
        refl: bool,
    }

    fn dih_mul(m: Option<i64>, a: Dih, b: Dih) -> Dih {
        let sign = if a.refl { -1 } else { 1 };
        let mut rot = a.rot + sign * b.rot;
        if let Some(m) = m {
            rot = rot.rem_euclid(m);
        }
        Dih { rot, refl: a.refl ^ b.refl }
    }

    fn dih_product(m: Option<i64>, word: &[u8]) -> Dih {
        let gens = [Dih { rot: 0, refl: true }, Dih { rot: 1, refl: true }];
        word.iter().fold(Dih { rot: 0, refl: false }, |acc, &s| {
            dih_mul(m, acc, gens[s as usize])
        })
    }

    fn check_normalize_against_dihedral(sys: &CoxeterSystem, m: Option<i64>, max_len: usize) {
        use std::collections::BTreeMap;
        // All words of length <= max_len in ShortLex order; the first word
        // hitting an abstract element is its ShortLex-least reduced word, and
        // any enumerated word's product has its least word enumerated too.
        let mut words: Vec<Vec<u8>> = vec![vec![]];
        let mut frontier: Vec<Vec<u8>> = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for g in 0..2u8 {
                    let mut nw = w.clone();
                    nw.push(g);
                    next.push(nw);
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        let mut expected: BTreeMap<Dih, Vec<u8>> = BTreeMap::new();
        for w in &words {
            expected.entry(dih_product(m, w)).or_insert_with(|| w.clone());
        }
        for w in &words {
            let got = sys.normalize_word(w).unwrap();
            assert_eq!(got.word(), expected[&dih_product(m, w)].as_slice(), "word {w:?}");
        }
    }

    #[test]
    fn normalize_matches_abstract_dihedral() {
        check_normalize_against_dihedral(&b2_system(), Some(4), 6);
        check_normalize_against_dihedral(&g2_system(), Some(6), 8);
        let inf = CoxeterSystem::new(vec![vec![1, 0], vec![0, 1]], vec![0, 1]).unwrap();
        check_normalize_against_dihedral(&inf, None, 7);
    }

    #[test]
    fn bruhat_examples() {
        let sys = b2_system();
        let e = Element::identity();
        let s = sys.normalize_word(&[0]).unwrap();
        let t = sys.normalize_word(&[1]).unwrap();
        let ts = sys.normalize_word(&[1, 0]).unwrap();
        let w0 = sys.normalize_word(&[0, 1, 0, 1]).unwrap();
        assert!(bruhat_leq(&sys, &e, &w0).unwrap());
        assert!(bruhat_leq(&sys, &s, &ts).unwrap());
        assert!(!bruhat_leq(&sys, &s, &t).unwrap());
    }

    #[test]
    fn bruhat_agrees_with_subword_on_a3() {
        let sys = a3_system();
        let all = enumerate_elements(&sys, 12, 100).unwrap();
        assert!(all.complete);
        assert_eq!(all.elements.len(), 24);
        for y in &all.elements {
            let below = subword_closure(&sys, y).unwrap();
            for x in &all.elements {
                assert_eq!(
                    bruhat_leq(&sys, x, y).unwrap(),
                    below.contains(x),
                    "x={x} y={y}"
                );
            }
        }
    }

    #[test]
    fn parabolic_enumeration() {
        let sys = a3_system();
        let par = enumerate_parabolic(&sys, &[0, 2], 100).unwrap();
        assert_eq!(par.len(), 4); // A1 x A1
        let inf = CoxeterSystem::new(vec![vec![1, 0], vec![0, 1]], vec![0, 1]).unwrap();
        assert!(matches!(
            enumerate_parabolic(&inf, &[0, 1], 50),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn reduced_words_of_longest_b2_element() {
        let sys = b2_system();
        let w0 = sys.normalize_word(&[0, 1, 0, 1]).unwrap();
        let words = reduced_words(&sys, &w0).unwrap();
        assert_eq!(words, vec![vec![0, 1, 0, 1], vec![1, 0, 1, 0]]);
    }

    #[test]
    fn fingerprint_distinguishes_weights() {
        let a = b2_system().fingerprint();
        let b = CoxeterSystem::new(vec![vec![1, 4], vec![4, 1]], vec![1, 1])
            .unwrap()
            .fingerprint();
        assert_ne!(a, b);
        assert_eq!(a, b2_system().fingerprint());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn normalize_is_idempotent(word in proptest::collection::vec(0u8..3, 0..10)) {
            let sys = CoxeterSystem::new(
                vec![vec![1, 4, 2], vec![4, 1, 3], vec![2, 3, 1]],
                vec![1, 0, 0],
            ).unwrap();
            let w = sys.normalize_word(&word).unwrap();
            let again = sys.normalize_word(w.word()).unwrap();
            prop_assert_eq!(w, again);
        }
    }
}
