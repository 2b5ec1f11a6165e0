use std::collections::BTreeMap;
use std::sync::Arc;

use habw_core::exactalg::{Field, Ring};
use habw_core::homology::{ext, free_resolution};
use habw_core::invariants::{
    depth, gclass_membership, gdim, is_cohen_macaulay, is_gorenstein, ring_depth, zero_ideal_irreducible, GdimResult,
    SampleSpec, Verdict,
};
use habw_core::modcalc::Module;
use habw_core::Result;

use crate::theorems::{fpid_window, FpidWindow};

pub struct RingRecord {
    pub description: String,
    pub nvars: usize,
    pub dimension: i64,
    pub depth: usize,
    pub cohen_macaulay: bool,
    pub gorenstein: Verdict,
    pub gdim_residue_field: GdimResult,
    pub socle_dimension: Option<usize>,
    /// Artinian rings only.
    pub zero_ideal_irreducible: Option<Verdict>,
    /// Computed only when requested.
    pub fpid: Option<FpidWindow>,
}

pub fn analyze_ring<F: Field>(ring: &Arc<Ring<F>>, bound: usize, spec: Option<&SampleSpec>) -> Result<RingRecord> {
    let gor = is_gorenstein(ring, bound)?;
    Ok(RingRecord {
        description: ring.describe(),
        nvars: ring.nvars(),
        dimension: ring.krull_dimension(),
        depth: ring_depth(ring)?,
        cohen_macaulay: is_cohen_macaulay(ring)?,
        gorenstein: gor.verdict,
        gdim_residue_field: gor.gdim_residue_field,
        socle_dimension: gor.socle_dimension,
        zero_ideal_irreducible: if ring.is_artinian() { Some(zero_ideal_irreducible(ring)?) } else { None },
        fpid: spec.map(|s| fpid_window(ring, s)).transpose()?,
    })
}

pub struct ModuleRecord {
    pub name: String,
    pub description: String,
    pub zero: bool,
    /// `None` for the zero module.
    pub depth: Option<usize>,
    pub gdim: GdimResult,
    pub gclass: Verdict,
    /// `(i, j) -> beta_{i,j}` of the computed part of the resolution.
    pub betti: BTreeMap<(usize, i32), usize>,
    pub resolution_finite: bool,
    pub composes_to_zero: bool,
    pub euler_holds: bool,
    /// `Ext^i(M, R)` for `i = 0, 1, 2`.
    pub ext: Vec<ExtSample>,
}

/// Hilbert function of `Ext^i(M, R)` on five degrees starting at the
/// lowest possible generator degree.
pub struct ExtSample {
    pub i: usize,
    pub vanishes: bool,
    pub hilbert: Vec<(i64, u64)>,
}

const EXT_SAMPLES: usize = 3;
const EXT_WINDOW: i64 = 5;

pub fn analyze_module<F: Field>(name: &str, m: &Module<F>, bound: usize) -> Result<ModuleRecord> {
    let res = free_resolution(m, bound);
    let lo = m.twists().iter().copied().min().unwrap_or(0) as i64 - 1;
    let samples = (0..EXT_SAMPLES)
        .map(|i| {
            let e = ext(m, i);
            let start = if i <= res.length() {
                -(res.twists(i).iter().copied().max().unwrap_or(0) as i64)
            } else {
                0
            };
            ExtSample {
                i,
                vanishes: e.is_zero(),
                hilbert: (start..start + EXT_WINDOW).map(|d| (d, e.hilbert_function(d))).collect(),
            }
        })
        .collect();
    Ok(ModuleRecord {
        name: name.to_string(),
        description: m.describe(),
        zero: m.is_zero(),
        depth: if m.is_zero() { None } else { Some(depth(m)?) },
        gdim: gdim(m, bound)?,
        gclass: gclass_membership(m, bound),
        betti: res.betti_table(),
        resolution_finite: res.is_finite(),
        composes_to_zero: res.composes_to_zero(),
        euler_holds: res.euler_characteristic_holds(m, lo, lo + 2 * bound as i64),
        ext: samples,
    })
}
