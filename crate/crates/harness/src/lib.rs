//! Runs the theorem checks of the G-dimension theory against curated
//! `.habw` files and seeded random modules, and assembles reports.

pub mod analysis;
pub mod check;
pub mod corpus;
pub mod random;
pub mod report;
pub mod theorems;

pub use analysis::{analyze_module, analyze_ring, ExtSample, ModuleRecord, RingRecord};
pub use check::{Outcome, TheoremCheck, TheoremId};
pub use corpus::{analyze_source, load_corpus, run_corpus, run_file, run_source, CorpusEntry, CorpusReport, ErrorKind, FileError, FileReport, Mismatch, RunOptions};
pub use random::{panel_ring, random_cover_ses, random_module, random_ring, random_ses, RandomSize, RING_PANEL};
pub use report::{corpus_json, file_json, render_detailed, render_text};
