//! The Hecke algebra of a weighted Coxeter system over Z[v,v^-1]: the
//! standard basis {T_w}, the bar involution, the canonical basis {c_w}, and
//! the embedding of the reflection-subgroup algebra.

pub mod canonical;
pub mod elt;
pub mod export;
pub mod rho;

pub use canonical::{canonical, expand_in_canonical, CanonicalCache};
pub use elt::{v_param, HeckeElt};
pub use export::{cache_from_json, cache_to_json, table_to_csv, table_to_json, CACHE_VERSION};
pub use rho::rho_embed;
