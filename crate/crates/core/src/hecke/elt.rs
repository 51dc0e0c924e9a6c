//! Elements of the Hecke algebra in standard-basis coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use crate::coxeter::{CoxeterGroup, Element, Side};
use crate::error::Result;
use crate::exactmath::LaurentPoly;

/// v_s = v^L(s): the parameter attached to a generator of the given weight.
pub fn v_param(weight: u8) -> LaurentPoly {
    LaurentPoly::v_pow(i32::from(weight))
}

/// v_s^-1 - v_s; the coefficient T_x picks up in T_x T_s when s descends x.
/// Identically zero for weight 0, where T_s^2 = 1.
fn quad_correction(weight: u8) -> LaurentPoly {
    &LaurentPoly::v_pow(-i32::from(weight)) - &LaurentPoly::v_pow(i32::from(weight))
}

/// A finitely supported map Element -> LaurentPoly, in canonical form: no
/// stored coefficient polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeckeElt {
    terms: BTreeMap<Element, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit T_e.
    pub fn unit() -> Self {
        Self::basis(Element::identity())
    }

    /// The standard basis element T_x.
    pub fn basis(x: Element) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(x, LaurentPoly::one());
        Self { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Element, LaurentPoly)>) -> Self {
        let mut out = Self::zero();
        for (x, p) in pairs {
            out.add_term(x, p);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing (length, word) order of the basis element.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Element, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &Element) -> LaurentPoly {
        self.terms.get(x).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// The maximal support element in (length, word) order.
    pub fn top_term(&self) -> Option<(&Element, &LaurentPoly)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, x: Element, p: LaurentPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(x) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &p;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, q: &LaurentPoly) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(x, p)| (x.clone(), p * q)).collect(),
        }
    }

    /// Multiply by the generator T_s on the chosen side. Per basis term T_x:
    /// if the product is longer, T_x T_s = T_xs; otherwise
    /// T_x T_s = T_xs + (v_s^-1 - v_s) T_x, the quadratic relation
    /// (T_s - v_s^-1)(T_s + v_s) = 0 unfolded. For weight-0 generators the
    /// correction vanishes and T_s just permutes the basis.
    pub fn mul_gen<G: CoxeterGroup>(&self, group: &G, s: usize, side: Side) -> Result<Self> {
        let mut out = Self::zero();
        let corr = quad_correction(group.weight(s));
        for (x, p) in &self.terms {
            let raises = group.gen_raises_length(x, s, side)?;
            let xs = group.mul_gen(x, s, side)?;
            out.add_term(xs, p.clone());
            if !raises && !corr.is_zero() {
                out.add_term(x.clone(), p * &corr);
            }
        }
        Ok(out)
    }

    /// Bilinear product: for each term T_y of `rhs`, apply `mul_gen` along
    /// the reduced word of y. Associative with unit T_e.
    pub fn mul<G: CoxeterGroup>(&self, group: &G, rhs: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (y, q) in &rhs.terms {
            let mut part = self.scaled(q);
            for &s in y.word() {
                part = part.mul_gen(group, s as usize, Side::Right)?;
            }
            out = &out + &part;
        }
        Ok(out)
    }

    /// The bar involution: coefficients are barred and each T_w becomes the
    /// product of the T_{s_i}^-1 over its reduced word, where
    /// T_s^-1 = T_s + (v_s - v_s^-1). Semilinear ring involution; fixes T_s
    /// for weight-0 generators.
    pub fn bar<G: CoxeterGroup>(&self, group: &G) -> Result<Self> {
        let mut out = Self::zero();
        for (x, p) in &self.terms {
            let mut part = Self::from_terms([(Element::identity(), p.bar())]);
            for &s in x.word() {
                let corr = -&quad_correction(group.weight(s as usize));
                let ts = part.mul_gen(group, s as usize, Side::Right)?;
                part = if corr.is_zero() { ts } else { &ts + &part.scaled(&corr) };
            }
            out = &out + &part;
        }
        Ok(out)
    }
}

impl Add for &HeckeElt {
    type Output = HeckeElt;
    fn add(self, rhs: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (x, p) in &rhs.terms {
            out.add_term(x.clone(), p.clone());
        }
        out
    }
}

impl Sub for &HeckeElt {
    type Output = HeckeElt;
    fn sub(self, rhs: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (x, p) in &rhs.terms {
            out.add_term(x.clone(), -p);
        }
        out
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (x, p) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({p})T[{x}]")?;
        }
        Ok(())
    }
}
