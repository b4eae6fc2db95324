//! Solomon-Terao algebras of hyperplane arrangements over exact fields.
//!
//! The crate is layered bottom-up: exact [`scalar`] arithmetic, sparse
//! polynomials ([`poly`]), a Groebner engine for ideals and graded modules
//! ([`gb`]), arrangements and their intersection lattices ([`arr`]),
//! logarithmic derivation modules and the bivariate Solomon-Terao polynomial
//! ([`logder`]), the Solomon-Terao algebra and its ring-theoretic analyzers
//! ([`stalg`]), and root-system constructions ([`coxeter`]).

pub mod arr;
pub mod coxeter;
pub mod gb;
pub mod linalg;
pub mod logder;
pub mod poly;
pub mod scalar;
pub mod stalg;
