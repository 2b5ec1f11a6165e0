//! Projective dimension, G-class membership and G-dimension.

use std::collections::HashMap;

use crate::error::Result;
use crate::exactalg::Field;
use crate::homology::{ext_vanishes, free_resolution, syzygy};
use crate::modcalc::{biduality, Module};

use super::depth::{depth, ring_depth};
use super::verdict::{Status, Verdict, Witness};

/// Default Ext window: twice the number of variables plus four.
pub fn default_bound(nvars: usize) -> usize {
    2 * nvars + 4
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdValue {
    Finite(usize),
    Infinite,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdReason {
    /// The resolution stopped.
    Resolution,
    /// Two differentials repeat up to shift and units.
    Periodic,
    /// `F_{depth R + 1} != 0`, impossible for finite pd.
    DepthBound,
    /// Nothing certified within the bound.
    Bounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectiveDimension {
    pub value: PdValue,
    pub reason: PdReason,
    pub bound: usize,
}

/// pd within a resolution of length `bound`.
pub fn projective_dimension<F: Field>(m: &Module<F>, bound: usize) -> Result<ProjectiveDimension> {
    let res = free_resolution(m, bound);
    let (value, reason) = if res.is_finite() {
        (PdValue::Finite(res.length()), PdReason::Resolution)
    } else if res.periodicity().is_some() {
        (PdValue::Infinite, PdReason::Periodic)
    } else {
        let dr = ring_depth(m.ring())?;
        if res.rank(dr + 1) > 0 {
            (PdValue::Infinite, PdReason::DepthBound)
        } else {
            (PdValue::Undetermined, PdReason::Bounded)
        }
    };
    Ok(ProjectiveDimension { value, reason, bound })
}

/// Membership in the G-class: `Ext^i(M,R) = 0` and `Ext^i(M*,R) = 0` for
/// `1 <= i <= bound`, and `M -> M**` an isomorphism.
pub fn gclass_membership<F: Field>(m: &Module<F>, bound: usize) -> Verdict {
    if m.is_zero() {
        return Verdict::yes(Some(bound));
    }
    for i in 1..=bound {
        if !ext_vanishes(m, i) {
            return Verdict::no(Witness::ExtNonzero { i }, Some(bound));
        }
    }
    let dual = m.dual();
    for i in 1..=bound {
        if !ext_vanishes(&dual, i) {
            return Verdict::no(Witness::DualExtNonzero { i }, Some(bound));
        }
    }
    let b = biduality(m);
    if !b.injective {
        return Verdict::no(Witness::BidualityNotInjective, Some(bound));
    }
    if !b.surjective {
        return Verdict::no(Witness::BidualityNotSurjective, Some(bound));
    }
    Verdict::yes(Some(bound))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GdimValue {
    Finite(usize),
    Infinite,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certification {
    /// Equal to a finite projective dimension.
    ExactPd,
    /// The candidate syzygy is in the G-class and the Ext pattern agrees.
    ExactSyzygy,
    /// Only as good as the bound.
    Bounded,
}

impl Certification {
    pub fn name(self) -> &'static str {
        match self {
            Certification::ExactPd => "EXACT-PD",
            Certification::ExactSyzygy => "EXACT-SYZYGY",
            Certification::Bounded => "BOUNDED",
        }
    }

    pub fn is_exact(self) -> bool {
        self != Certification::Bounded
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdimResult {
    pub value: GdimValue,
    pub certification: Certification,
    pub bound: usize,
    /// Set for the zero module, whose G-dimension is 0 by convention.
    pub zero_module: bool,
    pub witness: Option<Witness>,
    pub pd: ProjectiveDimension,
}

impl GdimResult {
    /// The value when it is finite and exactly certified.
    pub fn certified(&self) -> Option<usize> {
        match self.value {
            GdimValue::Finite(v) if self.certification.is_exact() => Some(v),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.value == GdimValue::Infinite
    }
}

/// Memoized `Ext^i(M, R) != 0`.
struct ExtOracle<'a, F: Field> {
    m: &'a Module<F>,
    seen: HashMap<usize, bool>,
}

impl<F: Field> ExtOracle<'_, F> {
    fn nonzero(&mut self, i: usize) -> bool {
        let m = self.m;
        *self.seen.entry(i).or_insert_with(|| !ext_vanishes(m, i))
    }
}

/// G-dimension within the Ext window `[1, bound]`.
pub fn gdim<F: Field>(m: &Module<F>, bound: usize) -> Result<GdimResult> {
    let pd = projective_dimension(m, bound)?;
    if m.is_zero() {
        return Ok(GdimResult {
            value: GdimValue::Finite(0),
            certification: Certification::ExactPd,
            bound,
            zero_module: true,
            witness: None,
            pd,
        });
    }
    if let PdValue::Finite(p) = pd.value {
        return Ok(GdimResult {
            value: GdimValue::Finite(p),
            certification: Certification::ExactPd,
            bound,
            zero_module: false,
            witness: None,
            pd,
        });
    }
    let mut ext = ExtOracle {
        m,
        seen: HashMap::new(),
    };
    let dr = ring_depth(m.ring())?;
    let candidate = dr as i64 - depth(m)? as i64;
    if candidate >= 0 && candidate as usize <= bound {
        let v = candidate as usize;
        let gc = gclass_membership(&syzygy(m, v), bound);
        if gc.is_true() && ext.nonzero(v) && (v + 1..=bound).all(|i| !ext.nonzero(i)) {
            return Ok(GdimResult {
                value: GdimValue::Finite(v),
                certification: Certification::ExactSyzygy,
                bound,
                zero_module: false,
                witness: None,
                pd,
            });
        }
    }
    // a finite G-dimension is at most depth R and puts every later syzygy
    // in the class, so witnesses against all syzygies up to an index past
    // depth R rule it out
    let mut first = None;
    for j in 0..bound {
        let w = match (1..=bound).find(|&i| ext.nonzero(i + j)) {
            Some(i) => Witness::ExtNonzero { i },
            None => {
                let gc = gclass_membership(&syzygy(m, j), bound);
                match (gc.status, gc.witness) {
                    (Status::False, Some(w)) => w,
                    _ => {
                        return Ok(GdimResult {
                            value: GdimValue::Undetermined,
                            certification: Certification::Bounded,
                            bound,
                            zero_module: false,
                            witness: None,
                            pd,
                        })
                    }
                }
            }
        };
        first.get_or_insert(Witness::Syzygy { j, inner: Box::new(w) });
    }
    let value = if first.is_some() && bound > dr {
        GdimValue::Infinite
    } else {
        GdimValue::Undetermined
    };
    Ok(GdimResult {
        value,
        certification: Certification::Bounded,
        bound,
        zero_module: false,
        witness: if value == GdimValue::Infinite { first } else { None },
        pd,
    })
}
