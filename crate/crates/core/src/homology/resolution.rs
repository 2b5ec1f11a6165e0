//! Minimal graded free resolutions, computed lazily and cached per module.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exactalg::{syzygy_matrix, Field, GradedMatrix, Ring, Vector};
use crate::modcalc::Module;

/// Differentials computed so far for one presentation.
pub(crate) struct ResolutionCache<F: Field> {
    pub diffs: Vec<GradedMatrix<F>>,
    pub finished: bool,
}

impl<F: Field> ResolutionCache<F> {
    pub fn new() -> Self {
        ResolutionCache {
            diffs: Vec::new(),
            finished: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionStatus {
    /// `F_{L+1} = 0`.
    Finite,
    /// Stopped at the requested length with `F_{L+1} != 0`.
    Truncated,
}

/// `F_L -> ... -> F_1 -> F_0 -> M -> 0`, minimal.
pub struct FreeResolution<F: Field> {
    ring: Arc<Ring<F>>,
    f0: Vec<i32>,
    diffs: Vec<GradedMatrix<F>>,
    next: Option<GradedMatrix<F>>,
    status: ResolutionStatus,
}

/// Extends the cached resolution of `m` to `d_1 .. d_{len+1}` (or until it
/// stops) and returns a copy of the cached prefix.
fn extend<F: Field>(m: &Module<F>, len: usize) -> (Vec<GradedMatrix<F>>, bool) {
    let mut cache = m.cache.lock().unwrap_or_else(|e| e.into_inner());
    if cache.diffs.is_empty() {
        cache.diffs.push(m.relations().clone());
    }
    loop {
        if cache.diffs.last().unwrap().ncols() == 0 {
            cache.finished = true;
        }
        if cache.finished || cache.diffs.len() > len {
            break;
        }
        let next = syzygy_matrix(m.ring(), cache.diffs.last().unwrap());
        cache.diffs.push(next);
    }
    let upto = cache.diffs.len().min(len + 1);
    (cache.diffs[..upto].to_vec(), cache.finished && upto == cache.diffs.len())
}

/// The minimal graded free resolution of `m` up to length `max_len`.
pub fn free_resolution<F: Field>(m: &Module<F>, max_len: usize) -> FreeResolution<F> {
    let (mut diffs, _) = extend(m, max_len);
    let nonzero = diffs.iter().take_while(|d| d.ncols() > 0).count();
    let (status, next) = if nonzero < diffs.len() {
        (ResolutionStatus::Finite, None)
    } else {
        let next = if diffs.len() > max_len { diffs.pop() } else { None };
        (ResolutionStatus::Truncated, next)
    };
    diffs.truncate(nonzero.min(max_len));
    FreeResolution {
        ring: m.ring().clone(),
        f0: m.twists().to_vec(),
        diffs,
        next,
        status,
    }
}

/// Default resolution length: number of variables plus four.
pub fn default_length<F: Field>(ring: &Ring<F>) -> usize {
    ring.nvars() + 4
}

/// The `n`-th syzygy module `K_n = im(d_n)`, with `K_0 = M`. Its
/// resolution is seeded from the resolution of `M`.
pub fn syzygy<F: Field>(m: &Module<F>, n: usize) -> Module<F> {
    if n == 0 {
        return m.clone();
    }
    let (diffs, finished) = extend(m, n + 1);
    if diffs.len() <= n || diffs[n].target().is_empty() {
        return Module::zero(m.ring());
    }
    let tail = diffs[n..].to_vec();
    Module::with_resolution(m.ring(), tail, finished)
}

/// Degrees `(first, period)` with `d_{first + period}` equal to
/// `d_first` up to a uniform degree shift, column order and unit scaling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Periodicity {
    pub first: usize,
    pub period: usize,
    pub shift: i32,
}

impl<F: Field> FreeResolution<F> {
    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn status(&self) -> ResolutionStatus {
        self.status
    }

    pub fn is_finite(&self) -> bool {
        self.status == ResolutionStatus::Finite
    }

    /// `L`: the index of the last nonzero free module computed.
    pub fn length(&self) -> usize {
        self.diffs.len()
    }

    /// `d_i : F_i -> F_{i-1}` for `1 <= i <= L`.
    pub fn differential(&self, i: usize) -> &GradedMatrix<F> {
        &self.diffs[i - 1]
    }

    pub fn differentials(&self) -> &[GradedMatrix<F>] {
        &self.diffs
    }

    /// Generator degrees of `F_i`; empty beyond the computed range.
    pub fn twists(&self, i: usize) -> &[i32] {
        if i == 0 {
            &self.f0
        } else if i <= self.diffs.len() {
            self.diffs[i - 1].source()
        } else {
            &[]
        }
    }

    pub fn rank(&self, i: usize) -> usize {
        self.twists(i).len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.length()).map(|i| self.rank(i)).collect()
    }

    /// Graded Betti numbers `beta_{i,j}`: generators of `F_i` in degree `j`.
    pub fn betti_table(&self) -> BTreeMap<(usize, i32), usize> {
        let mut t = BTreeMap::new();
        for i in 0..=self.length() {
            for &d in self.twists(i) {
                *t.entry((i, d)).or_insert(0) += 1;
            }
        }
        t
    }

    /// `d_i * d_{i+1} = 0` for every computed pair.
    pub fn composes_to_zero(&self) -> bool {
        let mut all: Vec<&GradedMatrix<F>> = self.diffs.iter().collect();
        all.extend(self.next.iter());
        all.windows(2)
            .all(|w| w[0].compose(&self.ring, w[1]).map(|c| c.is_zero()).unwrap_or(false))
    }

    /// Every differential entry lies in the maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.diffs
            .iter()
            .all(|d| d.cols().iter().all(|c| c.terms().iter().all(|t| !t.mon.is_one())))
    }

    fn free_hilbert(&self, twists: &[i32], d: i64) -> i64 {
        twists.iter().map(|&t| self.ring.hilbert_function(d - t as i64) as i64).sum()
    }

    /// Degrees in which the alternating sum of Hilbert functions is
    /// determined by the computed part: all degrees for a finite
    /// resolution, otherwise those below the generators of `F_{L+1}`.
    pub fn euler_window(&self) -> Option<i64> {
        match &self.next {
            None if self.is_finite() => None,
            None => Some(self.twists(self.length()).iter().min().map_or(i64::MAX, |&t| t as i64 + 1)),
            Some(n) => Some(n.source().iter().min().map_or(i64::MAX, |&t| t as i64)),
        }
    }

    /// `sum (-1)^i dim (F_i)_d = dim M_d` for `d` in `lo..=hi` within the
    /// determined window.
    pub fn euler_characteristic_holds(&self, m: &Module<F>, lo: i64, hi: i64) -> bool {
        let hi = match self.euler_window() {
            None => hi,
            Some(w) => hi.min(w - 1),
        };
        (lo..=hi).all(|d| {
            let alt: i64 = (0..=self.length())
                .map(|i| {
                    let h = self.free_hilbert(self.twists(i), d);
                    if i % 2 == 0 {
                        h
                    } else {
                        -h
                    }
                })
                .sum();
            alt == m.hilbert_function(d) as i64
        })
    }

    /// The first repetition among the computed differentials with period 1
    /// or 2.
    pub fn periodicity(&self) -> Option<Periodicity> {
        let mut all: Vec<&GradedMatrix<F>> = self.diffs.iter().collect();
        all.extend(self.next.iter());
        for first in 0..all.len() {
            for period in 1..=2 {
                if first + period >= all.len() {
                    continue;
                }
                if let Some(shift) = equivalent(self.ring.field(), all[first], all[first + period]) {
                    return Some(Periodicity {
                        first: first + 1,
                        period,
                        shift,
                    });
                }
            }
        }
        None
    }
}

fn equivalent<F: Field>(field: &F, a: &GradedMatrix<F>, b: &GradedMatrix<F>) -> Option<i32> {
    if a.nrows() != b.nrows() || a.ncols() != b.ncols() || a.nrows() == 0 || a.ncols() == 0 {
        return None;
    }
    let shift = b.target()[0] - a.target()[0];
    if a.target().iter().zip(b.target()).any(|(x, y)| y - x != shift) {
        return None;
    }
    let norm = |v: &Vector<F>| v.make_monic(field);
    let bcols: Vec<Vector<F>> = b.cols().iter().map(norm).collect();
    let mut used = vec![false; bcols.len()];
    for (j, c) in a.cols().iter().enumerate() {
        let c = norm(c);
        let hit = (0..bcols.len()).find(|&k| !used[k] && bcols[k] == c && b.source()[k] - a.source()[j] == shift)?;
        used[hit] = true;
    }
    Some(shift)
}
