//! Precomputed multiplication tables. Hecke-algebra computations repeat the
//! same element-times-generator products constantly; a table makes them
//! lookups. Partial tables (length-capped) answer boundary products with a
//! loud cap error, never a wrong value.

use std::collections::HashMap;

use crate::coxeter::element::Element;
use crate::coxeter::system::{enumerate_elements, CoxeterGroup, CoxeterSystem, Side};
use crate::error::{Error, Result};

const ABSENT: u32 = u32::MAX;

/// A group (or length-capped ball of one) with generator products resolved to
/// index lookups. Implements `CoxeterGroup`, so every Hecke operation runs on
/// it unchanged.
#[derive(Debug, Clone)]
pub struct GroupTable {
    elements: Vec<Element>,
    index: HashMap<Element, u32>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    weights: Vec<u8>,
    complete: bool,
}

impl GroupTable {
    pub fn build(sys: &CoxeterSystem, max_len: usize, count_cap: usize) -> Result<Self> {
        let enumeration = enumerate_elements(sys, max_len, count_cap)?;
        let elements = enumeration.elements;
        let index: HashMap<Element, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i as u32))
            .collect();
        let rank = sys.rank();
        let mut right = vec![vec![ABSENT; rank]; elements.len()];
        let mut left = vec![vec![ABSENT; rank]; elements.len()];
        for (i, x) in elements.iter().enumerate() {
            for s in 0..rank {
                for (side, tbl) in [(Side::Right, &mut right), (Side::Left, &mut left)] {
                    let y = sys.mul_gen(x, s, side)?;
                    if let Some(&j) = index.get(&y) {
                        tbl[i][s] = j;
                    }
                }
            }
        }
        Ok(Self {
            elements,
            index,
            right,
            left,
            weights: sys.weights().to_vec(),
            complete: enumeration.complete,
        })
    }

    /// Table over the whole (finite) group; errors if the group does not
    /// close within the caps.
    pub fn build_complete(sys: &CoxeterSystem, max_len: usize, count_cap: usize) -> Result<Self> {
        let table = Self::build(sys, max_len, count_cap)?;
        if !table.complete {
            return Err(Error::CapExceeded {
                what: format!("group does not close within length {max_len}"),
            });
        }
        Ok(table)
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.index.contains_key(x)
    }

    fn idx(&self, x: &Element) -> Result<usize> {
        self.index
            .get(x)
            .map(|&i| i as usize)
            .ok_or_else(|| Error::CapExceeded {
                what: format!("element {x} outside the group table"),
            })
    }
}

impl CoxeterGroup for GroupTable {
    fn rank(&self) -> usize {
        self.weights.len()
    }

    fn weight(&self, s: usize) -> u8 {
        self.weights[s]
    }

    fn mul_gen(&self, x: &Element, s: usize, side: Side) -> Result<Element> {
        let i = self.idx(x)?;
        let tbl = match side {
            Side::Right => &self.right,
            Side::Left => &self.left,
        };
        match tbl[i].get(s) {
            None => Err(Error::GeneratorOutOfRange { gen: s, rank: self.rank() }),
            Some(&ABSENT) => Err(Error::CapExceeded {
                what: format!("product {x} * s{} leaves the group table", s + 1),
            }),
            Some(&j) => Ok(self.elements[j as usize].clone()),
        }
    }

    fn gen_raises_length(&self, x: &Element, s: usize, side: Side) -> Result<bool> {
        let i = self.idx(x)?;
        let tbl = match side {
            Side::Right => &self.right,
            Side::Left => &self.left,
        };
        match tbl[i].get(s) {
            None => Err(Error::GeneratorOutOfRange { gen: s, rank: self.rank() }),
            // Only length-raising products fall off a breadth-first table.
            Some(&ABSENT) => Ok(true),
            Some(&j) => Ok(self.elements[j as usize].len() > x.len()),
        }
    }
}
