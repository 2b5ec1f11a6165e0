//! Depth, projective and G-dimension, and ring-level verdicts.

pub mod depth;
pub mod gdim;
pub mod ring;
pub mod verdict;

pub use depth::{depth, depth_ext, depth_koszul, ring_depth};
pub use gdim::{
    default_bound, gclass_membership, gdim, projective_dimension, Certification, GdimResult, GdimValue, PdReason,
    PdValue, ProjectiveDimension,
};
pub use ring::{
    annihilators_span, fp_injective_dim_at_most, ideal_sample, irreducibility_mechanism, is_cohen_macaulay,
    is_gorenstein, principal_intersection_is_zero, socle, socle_dimension, zero_ideal_irreducible, GorensteinReport,
    IdealSample, MechanismCheck, SampleSpec,
};
pub use verdict::{Status, Verdict, Witness};
