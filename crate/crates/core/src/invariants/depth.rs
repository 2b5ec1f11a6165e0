//! Depth with respect to the maximal ideal, by Koszul homology and by
//! `Ext(k, -)`.

use crate::error::{AlgebraError, Result};
use crate::exactalg::{Field, Polynomial, Ring};
use crate::homology::{ext_between_vanishes, KoszulComplex};
use crate::modcalc::Module;

/// `n - max{j : H_j(x_1..x_n; M) != 0}` for a sequence generating `m`.
pub fn depth_koszul<F: Field>(m: &Module<F>, seq: &[Polynomial<F>]) -> Result<usize> {
    if m.is_zero() {
        return Err(AlgebraError::ZeroModule("depth of the zero module".into()));
    }
    let kz = KoszulComplex::new(m.ring(), seq)?;
    let n = kz.len();
    for j in (0..=n).rev() {
        if !kz.homology_vanishes(m, j) {
            return Ok(n - j);
        }
    }
    Err(AlgebraError::Internal("all Koszul homology of a nonzero module vanished".into()))
}

/// `min{i : Ext^i(k, M) != 0}`.
pub fn depth_ext<F: Field>(m: &Module<F>) -> Result<usize> {
    if m.is_zero() {
        return Err(AlgebraError::ZeroModule("depth of the zero module".into()));
    }
    let k = Module::residue_field(m.ring());
    for i in 0..=m.ring().nvars() {
        if !ext_between_vanishes(&k, m, i) {
            return Ok(i);
        }
    }
    Err(AlgebraError::Internal(format!(
        "Ext^i(k, M) vanished for all i <= {}",
        m.ring().nvars()
    )))
}

/// `depth_m M`, computed both ways; a disagreement is an internal error.
pub fn depth<F: Field>(m: &Module<F>) -> Result<usize> {
    let a = depth_koszul(m, &m.ring().variables())?;
    let b = depth_ext(m)?;
    if a != b {
        return Err(AlgebraError::Internal(format!(
            "Koszul depth {a} disagrees with Ext depth {b} for {}",
            m.describe()
        )));
    }
    Ok(a)
}

pub fn ring_depth<F: Field>(ring: &std::sync::Arc<Ring<F>>) -> Result<usize> {
    depth(&Module::free(ring, &[0]))
}
