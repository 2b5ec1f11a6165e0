//! Finitely presented graded modules, maps between them, duals and the
//! biduality map.

pub mod map;
pub mod module;

pub use map::{
    biduality, is_nonzerodivisor, quotient_by_element, ses_from_cover, split_ses, Biduality, Exactness, ModuleMap,
    QuotientByElement, ShortExactSequence,
};
pub use module::Module;
