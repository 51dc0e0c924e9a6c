//! Exact computations in Hecke algebras whose weight function takes values
//! in {0,1}: Coxeter systems with their geometric root systems, canonical
//! (Kazhdan-Lusztig) bases, Dyer reflection subgroups generated by the
//! weight-one reflections, and the character-level Bott-Samelson calculus
//! over them. All arithmetic is exact; nothing is floating point.

pub mod coxeter;
pub mod dyer;
pub mod error;
pub mod exactmath;
pub mod hecke;

pub use coxeter::{CoxeterGroup, CoxeterSystem, Element, GroupTable, Side};
pub use dyer::{InducedGroup, SubgroupCaps, SubgroupData};
pub use error::{Error, Result};
pub use exactmath::{LaurentPoly, QuadScalar};
pub use hecke::{canonical, expand_in_canonical, rho_embed, CanonicalCache, HeckeElt};
