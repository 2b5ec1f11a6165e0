//! Exact homological algebra over graded quotients of polynomial rings:
//! Groebner bases and syzygies, finitely presented modules, minimal free
//! resolutions, Koszul homology, `Ext(-, R)`, depth, G-dimension and
//! Gorenstein-type verdicts.

pub mod error;
pub mod exactalg;
pub mod homology;
pub mod invariants;
pub mod modcalc;
pub mod rng;

pub use error::{AlgebraError, Result};
