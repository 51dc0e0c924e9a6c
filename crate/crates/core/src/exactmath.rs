//! Exact scalar arithmetic: Laurent polynomials over the integers and
//! real scalars in the field generated by sqrt(2), sqrt(3), sqrt(5).

pub mod laurent;
pub mod quad;

pub use laurent::LaurentPoly;
pub use quad::QuadScalar;
