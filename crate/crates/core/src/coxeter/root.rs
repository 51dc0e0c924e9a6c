//! The root system of the geometric representation: inversion sets, the
//! weight labeling of root orbits, and reflections attached to roots.

use std::collections::{BTreeMap, VecDeque};

use crate::coxeter::element::Element;
use crate::coxeter::system::{CoxeterGroup, CoxeterSystem};
use crate::error::Result;
use crate::exactmath::QuadScalar;

/// A root with exact coordinates in the simple-root basis.
///
/// `label` is the weight of the seed simple root whose orbit the root lies
/// in; the two weight orbits are disjoint, which the breadth-first search
/// asserts. The witness (u, s) records root = u(alpha_s).
#[derive(Debug, Clone)]
pub struct Root {
    coords: Vec<QuadScalar>,
    label: u8,
    witness_elt: Element,
    witness_gen: u8,
}

impl Root {
    pub fn simple(sys: &CoxeterSystem, s: usize) -> Result<Root> {
        sys.check_gen(s)?;
        Ok(Root {
            coords: sys.simple_root_coords(s),
            label: sys.weights()[s],
            witness_elt: Element::identity(),
            witness_gen: s as u8,
        })
    }

    pub fn coords(&self) -> &[QuadScalar] {
        &self.coords
    }

    pub fn label(&self) -> u8 {
        self.label
    }

    /// The pair (u, s) with root = u(alpha_s).
    pub fn witness(&self) -> (&Element, usize) {
        (&self.witness_elt, self.witness_gen as usize)
    }

    pub fn is_positive(&self, sys: &CoxeterSystem) -> bool {
        sys.coords_sign(&self.coords) > 0
    }
}

/// Apply `w` to a root, letter by letter; the orbit label is preserved.
pub fn act_on_root(sys: &CoxeterSystem, w: &Element, r: &Root) -> Result<Root> {
    let mut coords = r.coords.to_vec();
    for &l in w.word().iter().rev() {
        sys.apply_gen_to_coords(&mut coords, l as usize);
    }
    let witness_elt = sys.mul(w, &r.witness_elt)?;
    Ok(Root {
        coords,
        label: r.label,
        witness_elt,
        witness_gen: r.witness_gen,
    })
}

/// Inversion set of `w`: for the reduced word s_1..s_n, the n distinct
/// positive roots s_1..s_{i-1}(alpha_{s_i}). Its cardinality is l(w).
pub fn inversions(sys: &CoxeterSystem, w: &Element) -> Vec<Root> {
    let word = w.word();
    let mut out = Vec::with_capacity(word.len());
    for i in 0..word.len() {
        let s = word[i] as usize;
        let mut coords = sys.simple_root_coords(s);
        for &l in word[..i].iter().rev() {
            sys.apply_gen_to_coords(&mut coords, l as usize);
        }
        debug_assert!(sys.coords_sign(&coords) > 0);
        out.push(Root {
            coords,
            label: sys.weights()[s],
            // A prefix of a ShortLex-least word is itself ShortLex-least.
            witness_elt: Element::from_canonical_word(word[..i].to_vec()),
            witness_gen: s as u8,
        });
    }
    out
}

/// Count of inversion roots of `w` carrying the given weight label;
/// n_0(w) + n_1(w) = l(w).
pub fn labeled_inversion_count(sys: &CoxeterSystem, w: &Element, label: u8) -> usize {
    inversions(sys, w).iter().filter(|r| r.label() == label).count()
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    /// Positive roots in breadth-first discovery order.
    pub roots: Vec<Root>,
    /// Set when the enumeration stopped at the cap (infinite systems).
    pub truncated: bool,
}

/// Breadth-first closure of the simple roots under the simple reflections,
/// keeping positive roots only. Each root carries the label of its seed; a
/// root reached from seeds of both weights would break the orbit-disjointness
/// assumption and panics.
pub fn positive_roots(sys: &CoxeterSystem, cap: usize) -> Result<RootSystem> {
    assert!(cap >= sys.rank(), "cap must be at least the rank");
    let mut seen: BTreeMap<Vec<QuadScalar>, u8> = BTreeMap::new();
    let mut out: Vec<Root> = Vec::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    let mut truncated = false;
    for s in 0..sys.rank() {
        let r = Root::simple(sys, s)?;
        seen.insert(r.coords.clone(), r.label);
        queue.push_back(r.clone());
        out.push(r);
    }
    'bfs: while let Some(r) = queue.pop_front() {
        for s in 0..sys.rank() {
            let mut coords = r.coords.clone();
            sys.apply_gen_to_coords(&mut coords, s);
            if sys.coords_sign(&coords) < 0 {
                continue;
            }
            if let Some(&label) = seen.get(&coords) {
                assert_eq!(label, r.label, "root orbits of the two weights must be disjoint");
                continue;
            }
            if out.len() == cap {
                truncated = true;
                break 'bfs;
            }
            let witness_elt =
                sys.mul_gen(&r.witness_elt, s, crate::coxeter::system::Side::Left)?;
            let nr = Root {
                coords: coords.clone(),
                label: r.label,
                witness_elt,
                witness_gen: r.witness_gen,
            };
            seen.insert(coords, nr.label);
            queue.push_back(nr.clone());
            out.push(nr);
        }
    }
    Ok(RootSystem { roots: out, truncated })
}

/// The reflection u s u^-1 attached to a root through its witness; always an
/// involution.
pub fn reflection_of_root(sys: &CoxeterSystem, r: &Root) -> Result<Element> {
    let (u, s) = r.witness();
    let mut word = u.word().to_vec();
    word.push(s as u8);
    word.extend(u.inverse_word());
    sys.normalize_word(&word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::system::{bruhat_leq, Side};
    use crate::error::Error;

    fn b2() -> CoxeterSystem {
        CoxeterSystem::new(vec![vec![1, 4], vec![4, 1]], vec![0, 1]).unwrap()
    }

    #[test]
    fn identity_has_no_inversions() {
        let sys = b2();
        assert!(inversions(&sys, &Element::identity()).is_empty());
    }

    #[test]
    fn simple_generator_inverts_own_root() {
        let sys = b2();
        let s = sys.normalize_word(&[0]).unwrap();
        let inv = inversions(&sys, &s);
        assert_eq!(inv.len(), 1);
        assert_eq!(inv[0].coords(), sys.simple_root_coords(0).as_slice());
        assert_eq!(inv[0].label(), 0);
    }

    #[test]
    fn sts_inversion_labels() {
        let sys = b2();
        let sts = sys.normalize_word(&[0, 1, 0]).unwrap();
        let labels: Vec<u8> = inversions(&sys, &sts).iter().map(|r| r.label()).collect();
        assert_eq!(labels, vec![0, 1, 0]);
        assert_eq!(labeled_inversion_count(&sys, &sts, 0), 2);
        assert_eq!(labeled_inversion_count(&sys, &sts, 1), 1);
    }

    #[test]
    fn n_e_on_generators() {
        let sys = b2();
        let s = sys.normalize_word(&[0]).unwrap();
        let t = sys.normalize_word(&[1]).unwrap();
        assert_eq!(labeled_inversion_count(&sys, &t, 1), 1);
        assert_eq!(labeled_inversion_count(&sys, &s, 1), 0);
    }

    #[test]
    fn reflection_action_on_foreign_root() {
        // s(alpha_t) = alpha_t + sqrt2 * alpha_s in B2.
        let sys = b2();
        let s = sys.normalize_word(&[0]).unwrap();
        let at = Root::simple(&sys, 1).unwrap();
        let r = act_on_root(&sys, &s, &at).unwrap();
        assert_eq!(r.coords()[0], QuadScalar::sqrt_of(2).unwrap());
        assert_eq!(r.coords()[1], QuadScalar::one());
        assert_eq!(r.label(), 1);
        // e fixes, s negates its own root.
        let e = Element::identity();
        assert_eq!(act_on_root(&sys, &e, &at).unwrap().coords(), at.coords());
        let as_ = Root::simple(&sys, 0).unwrap();
        let neg = act_on_root(&sys, &s, &as_).unwrap();
        assert_eq!(neg.coords()[0], QuadScalar::from_int(-1));
        assert!(neg.coords()[1].is_zero());
    }

    #[test]
    fn positive_root_counts() {
        let a1a1 = CoxeterSystem::new(vec![vec![1, 2], vec![2, 1]], vec![0, 1]).unwrap();
        let rs = positive_roots(&a1a1, 100).unwrap();
        assert_eq!(rs.roots.len(), 2);
        assert!(!rs.truncated);

        let sys = b2();
        let rs = positive_roots(&sys, 100).unwrap();
        assert_eq!(rs.roots.len(), 4);
        assert!(!rs.truncated);
        assert_eq!(rs.roots.iter().filter(|r| r.label() == 0).count(), 2);
        assert_eq!(rs.roots.iter().filter(|r| r.label() == 1).count(), 2);

        let inf = CoxeterSystem::new(vec![vec![1, 0], vec![0, 1]], vec![0, 1]).unwrap();
        let rs = positive_roots(&inf, 6).unwrap();
        assert_eq!(rs.roots.len(), 6);
        assert!(rs.truncated);
    }

    #[test]
    fn reflections_from_roots() {
        let sys = b2();
        let rs = positive_roots(&sys, 100).unwrap();
        for r in &rs.roots {
            let refl = reflection_of_root(&sys, r).unwrap();
            let sq = sys.mul(&refl, &refl).unwrap();
            assert!(sq.is_identity(), "reflection {refl} must be an involution");
        }
        // s(alpha_t) corresponds to the reflection sts.
        let s = sys.normalize_word(&[0]).unwrap();
        let at = Root::simple(&sys, 1).unwrap();
        let r = act_on_root(&sys, &s, &at).unwrap();
        assert_eq!(reflection_of_root(&sys, &r).unwrap().word(), &[0, 1, 0]);
        // A simple root yields its generator.
        let a0 = Root::simple(&sys, 0).unwrap();
        assert_eq!(reflection_of_root(&sys, &a0).unwrap().word(), &[0]);
    }

    #[test]
    fn inversion_count_equals_length() {
        let sys = b2();
        let all = crate::coxeter::system::enumerate_elements(&sys, 10, 100).unwrap();
        assert_eq!(all.elements.len(), 8);
        for w in &all.elements {
            assert_eq!(inversions(&sys, w).len(), w.len());
            let n0 = labeled_inversion_count(&sys, w, 0);
            let n1 = labeled_inversion_count(&sys, w, 1);
            assert_eq!(n0 + n1, w.len());
            // Labels match the letter weights of the canonical word.
            assert_eq!(n1, sys.weighted_letter_count(w.word(), 1));
        }
    }

    #[test]
    fn inversion_labels_match_bfs_table() {
        let sys = b2();
        let rs = positive_roots(&sys, 100).unwrap();
        let all = crate::coxeter::system::enumerate_elements(&sys, 10, 100).unwrap();
        for w in &all.elements {
            for r in inversions(&sys, w) {
                let hit = rs
                    .roots
                    .iter()
                    .find(|q| q.coords() == r.coords())
                    .expect("inversion root occurs in the BFS table");
                assert_eq!(hit.label(), r.label());
            }
        }
    }

    #[test]
    fn cap_below_rank_is_rejected() {
        let sys = b2();
        let err = std::panic::catch_unwind(|| positive_roots(&sys, 1));
        assert!(err.is_err());
    }

    #[test]
    fn smallest_descent_and_bruhat_consistency() {
        let sys = b2();
        let w0 = sys.normalize_word(&[0, 1, 0, 1]).unwrap();
        assert_eq!(sys.smallest_descent(&w0, Side::Left).unwrap(), Some(0));
        for w in crate::coxeter::system::enumerate_elements(&sys, 10, 100)
            .unwrap()
            .elements
        {
            assert!(bruhat_leq(&sys, &Element::identity(), &w).unwrap());
        }
    }

    #[test]
    fn out_of_range_generator() {
        let sys = b2();
        assert!(matches!(
            sys.normalize_word(&[5]),
            Err(Error::GeneratorOutOfRange { .. })
        ));
    }
}
