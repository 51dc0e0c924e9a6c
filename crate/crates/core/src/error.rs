//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be positive")]
    BadRank,

    #[error("Coxeter matrix is not symmetric (or not square)")]
    NonSymmetricMatrix,

    #[error("Coxeter matrix diagonal entry at {0} is not 1")]
    BadDiagonal(usize),

    #[error("unsupported Coxeter matrix entry m = {m} at ({s},{t}); supported: 2..=6 and 0 (infinity)")]
    UnsupportedOrder { s: usize, t: usize, m: u32 },

    #[error("weight vector invalid: values must lie in {{0,1}} and match the rank")]
    BadWeight,

    #[error("weights of generators {s} and {t} differ but m = {m} is odd")]
    OddEdgeWeightMismatch { s: usize, t: usize, m: u32 },

    #[error("generator index {gen} out of range for rank {rank}")]
    GeneratorOutOfRange { gen: usize, rank: usize },

    #[error("element length exceeds the cap {cap}")]
    LengthCapExceeded { cap: usize },

    #[error("enumeration cap exceeded: {what}")]
    CapExceeded { what: String },

    #[error("element is not a member of the reflection subgroup (or beyond its enumerated range)")]
    NotInSubgroup,

    #[error("element does not lie in the weight-zero parabolic subgroup")]
    NotInParabolic,

    #[error("conjugation did not preserve the simple reflections of the subgroup: {detail}")]
    NotPreserved { detail: String },

    #[error("subgroup generator lookup failed during sweep: {detail}")]
    SprimeLookupFailed { detail: String },

    #[error("cache mismatch: {detail}")]
    CacheMismatch { detail: String },

    #[error("verification failed [{check}]: {detail}")]
    VerificationFailed { check: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
