//! The algebra embedding of the reflection-subgroup Hecke algebra into the
//! ambient one: each standard basis element over (W', S') maps to the
//! standard basis element of its ambient W-element, coefficients unchanged.
//! This is an algebra map and matches canonical bases on both sides; the
//! verification suites exercise both facts.

use crate::coxeter::Element;
use crate::dyer::InducedGroup;
use crate::error::{Error, Result};
use crate::hecke::elt::HeckeElt;

/// Map an element of the subgroup algebra (standard-basis coordinates over
/// S'-words) to the ambient algebra. Fails with `NotInSubgroup` when a
/// support word does not resolve in the enumerated subgroup.
pub fn rho_embed(subgroup: &InducedGroup<'_>, h: &HeckeElt) -> Result<HeckeElt> {
    let data = subgroup.data();
    let mut out = HeckeElt::zero();
    for (x, p) in h.terms() {
        let welt = data
            .elements()
            .ambient_of(x)
            .cloned()
            .ok_or(Error::NotInSubgroup)?;
        out.add_term(welt, p.clone());
    }
    Ok(out)
}

/// Ambient W-element of a single subgroup element.
pub fn rho_element(subgroup: &InducedGroup<'_>, x: &Element) -> Result<Element> {
    data_lookup(subgroup, x)
}

fn data_lookup(subgroup: &InducedGroup<'_>, x: &Element) -> Result<Element> {
    subgroup
        .data()
        .elements()
        .ambient_of(x)
        .cloned()
        .ok_or(Error::NotInSubgroup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterGroup, CoxeterSystem};
    use crate::dyer::{SubgroupCaps, SubgroupData};
    use crate::exactmath::LaurentPoly;
    use crate::hecke::canonical::{canonical, CanonicalCache};

    fn b2() -> CoxeterSystem {
        CoxeterSystem::new(vec![vec![1, 4], vec![4, 1]], vec![0, 1]).unwrap()
    }

    #[test]
    fn unit_maps_to_unit() {
        let sys = b2();
        let data = SubgroupData::build(&sys, &SubgroupCaps::default()).unwrap();
        let sub = InducedGroup::new(&sys, &data);
        assert_eq!(rho_embed(&sub, &HeckeElt::unit()).unwrap(), HeckeElt::unit());
    }

    #[test]
    fn generator_maps_to_its_palindrome() {
        let sys = b2();
        let data = SubgroupData::build(&sys, &SubgroupCaps::default()).unwrap();
        let sub = InducedGroup::new(&sys, &data);
        // Generator 1 of W' is the reflection s t s.
        let r = sub.normalize_word(&[1]).unwrap();
        let image = rho_embed(&sub, &HeckeElt::basis(r)).unwrap();
        assert_eq!(image, HeckeElt::basis(sys.normalize_word(&[0, 1, 0]).unwrap()));
    }

    #[test]
    fn canonical_bases_correspond() {
        // c'_{t.(sts)} maps to c_{tsts}: compute both sides independently.
        let sys = b2();
        let data = SubgroupData::build(&sys, &SubgroupCaps::default()).unwrap();
        let sub = InducedGroup::new(&sys, &data);
        let wprime = sub.normalize_word(&[0, 1]).unwrap();
        let mut sub_cache = CanonicalCache::new(format!("{}/sub", sys.fingerprint()));
        let c_prime = canonical(&sub, &mut sub_cache, &wprime).unwrap();
        let image = rho_embed(&sub, &c_prime).unwrap();

        let w = sys.normalize_word(&[1, 0, 1, 0]).unwrap();
        let mut cache = CanonicalCache::new(sys.fingerprint());
        let c = canonical(&sys, &mut cache, &w).unwrap();
        assert_eq!(image, c);
        // Spot value: coefficient of T_t is v.
        let t = sys.normalize_word(&[1]).unwrap();
        assert_eq!(c.coeff(&t), LaurentPoly::v());
    }

    #[test]
    fn multiplicativity_on_a_pair() {
        let sys = b2();
        let data = SubgroupData::build(&sys, &SubgroupCaps::default()).unwrap();
        let sub = InducedGroup::new(&sys, &data);
        let a = HeckeElt::from_terms([
            (sub.normalize_word(&[0]).unwrap(), LaurentPoly::v()),
            (sub.normalize_word(&[1]).unwrap(), LaurentPoly::one()),
        ]);
        let b = HeckeElt::from_terms([
            (sub.normalize_word(&[0, 1]).unwrap(), LaurentPoly::from_terms([(-1, 2)])),
            (Element::identity(), LaurentPoly::one()),
        ]);
        let lhs = rho_embed(&sub, &a.mul(&sub, &b).unwrap()).unwrap();
        let rhs = rho_embed(&sub, &a)
            .unwrap()
            .mul(&sys, &rho_embed(&sub, &b).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn words_outside_the_subgroup_fail() {
        let sys = b2();
        let data = SubgroupData::build(&sys, &SubgroupCaps::default()).unwrap();
        let sub = InducedGroup::new(&sys, &data);
        let phony = Element::from_canonical_word(vec![0, 0, 0, 0, 0]);
        assert_eq!(
            rho_embed(&sub, &HeckeElt::basis(phony)).unwrap_err(),
            Error::NotInSubgroup
        );
    }
}
