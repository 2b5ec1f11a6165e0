//! Exact coefficient arithmetic, polynomials, monomial orders and the
//! Groebner/syzygy engine.

pub mod field;
mod groebner;
pub mod hilbert;
pub mod matrix;
pub mod monomial;
mod parse;
pub mod poly;
pub mod ring;
pub mod syzygy;
pub mod vector;

pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use matrix::GradedMatrix;
pub use monomial::{Monomial, MonomialOrder, OrderKind, MAX_VARS};
pub use poly::{PolyRing, Polynomial};
pub use ring::{groebner_basis, normal_form, Ring};
pub use syzygy::{minimal_generators, syzygies, syzygy_matrix, Lifter, SubmoduleBasis};
pub use vector::{Term, TermOrder, Vector};
