//! Free resolutions, syzygy modules, Koszul homology and `Ext`.

mod complex;
pub mod ext;
pub mod koszul;
pub mod resolution;

pub use ext::{ext, ext_between, ext_between_vanishes, ext_from_residue_field, ext_vanishes};
pub use koszul::{koszul_homology, KoszulComplex};
pub use resolution::{default_length, free_resolution, syzygy, FreeResolution, Periodicity, ResolutionStatus};
