//! Finitely presented graded modules `M = coker(A: F_1 -> F_0)`.

use std::sync::{Arc, Mutex};

use crate::error::{AlgebraError, Result};
use crate::exactalg::syzygy::minimal_generator_indices;
use crate::exactalg::{syzygies, syzygy_matrix, Field, GradedMatrix, Polynomial, Ring, SubmoduleBasis, Vector};
use crate::homology::resolution::ResolutionCache;

/// A graded module given by generator degrees and a minimal matrix of
/// relations. Clones share the resolution cache.
pub struct Module<F: Field> {
    ring: Arc<Ring<F>>,
    twists: Vec<i32>,
    rel: GradedMatrix<F>,
    pub(crate) cache: Arc<Mutex<ResolutionCache<F>>>,
}

impl<F: Field> Clone for Module<F> {
    fn clone(&self) -> Self {
        Module {
            ring: self.ring.clone(),
            twists: self.twists.clone(),
            rel: self.rel.clone(),
            cache: self.cache.clone(),
        }
    }
}

impl<F: Field> std::fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// How the generators of a presentation survive minimization.
pub(crate) struct Transition<F: Field> {
    /// Old generator index for every new generator.
    pub kept: Vec<usize>,
    /// Column `j` expresses old generator `j` in the new cover.
    pub to_new: GradedMatrix<F>,
}

impl<F: Field> Module<F> {
    /// The cokernel of `rel`, minimally presented.
    pub fn coker(ring: &Arc<Ring<F>>, rel: GradedMatrix<F>) -> Self {
        Self::minimized(ring, rel).0
    }

    pub fn free(ring: &Arc<Ring<F>>, twists: &[i32]) -> Self {
        Self::raw(ring, twists.to_vec(), GradedMatrix::zero_map(twists.to_vec(), Vec::new()))
    }

    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Self::free(ring, &[])
    }

    /// `R/(gens)`.
    pub fn cyclic(ring: &Arc<Ring<F>>, gens: &[Polynomial<F>]) -> Result<Self> {
        let mut degs = Vec::with_capacity(gens.len());
        for g in gens {
            if g.is_zero() {
                degs.push(0);
                continue;
            }
            degs.push(
                g.homogeneous_degree()
                    .ok_or_else(|| AlgebraError::NotHomogeneous(ring.format(g)))? as i32,
            );
        }
        let rel = GradedMatrix::from_rows(ring, vec![0], degs, &[gens.to_vec()])?;
        Ok(Self::coker(ring, rel))
    }

    /// The residue field `k = R/m`.
    pub fn residue_field(ring: &Arc<Ring<F>>) -> Self {
        Self::cyclic(ring, &ring.variables()).expect("variables are homogeneous")
    }

    /// The ideal generated by `gens`, as a module: minimal generators with
    /// their syzygies as relations.
    pub fn ideal(ring: &Arc<Ring<F>>, gens: &[Polynomial<F>]) -> Result<Self> {
        let row = GradedMatrix::from_rows(
            ring,
            vec![0],
            gens.iter()
                .map(|g| {
                    if g.is_zero() {
                        Ok(0)
                    } else {
                        g.homogeneous_degree()
                            .map(|d| d as i32)
                            .ok_or_else(|| AlgebraError::NotHomogeneous(ring.format(g)))
                    }
                })
                .collect::<Result<Vec<_>>>()?,
            &[gens.to_vec()],
        )?;
        let nonzero: Vec<usize> = (0..row.ncols()).filter(|&j| !row.col(j).is_zero()).collect();
        let row = row.select_cols(&nonzero);
        let keep = minimal_generator_indices(ring, &[0], row.cols());
        let row = row.select_cols(&keep);
        let rel = syzygy_matrix(ring, &row);
        Ok(Self::coker(ring, rel))
    }

    /// A presentation whose generators are exactly the columns `gens` of a
    /// free module modulo `rel`: the subquotient `(U + A)/A`. Also returns the
    /// inclusion matrix into the ambient free module.
    pub(crate) fn subquotient(
        ring: &Arc<Ring<F>>,
        ambient: &[i32],
        gens: &[Vector<F>],
        rel: &[Vector<F>],
    ) -> (Self, GradedMatrix<F>) {
        let gens: Vec<Vector<F>> = gens
            .iter()
            .map(|g| ring.reduce_vector(g.clone()))
            .filter(|g| !g.is_zero())
            .collect();
        let g = GradedMatrix::from_columns(ambient.to_vec(), gens, 0).expect("homogeneous generators");
        let a = GradedMatrix::from_columns(ambient.to_vec(), rel.to_vec(), 0).expect("homogeneous relations");
        let both = g.hconcat(&a).expect("same ambient");
        let n = g.ncols() as u32;
        let field = ring.field();
        let order = ring.poly().term_order();
        let rels: Vec<Vector<F>> = syzygies(ring, &both)
            .into_iter()
            .map(|s| s.map_comps(field, order, |c| (c < n).then_some(c)))
            .filter(|s| !s.is_zero())
            .collect();
        let pres = GradedMatrix::from_columns(g.source().to_vec(), rels, 0).expect("homogeneous syzygies");
        let (m, tr) = Self::minimized(ring, pres);
        let incl = g.select_cols(&tr.kept);
        (m, incl)
    }

    /// A module presented by the first of a chain of minimal differentials,
    /// with the rest of the chain as its known resolution.
    pub(crate) fn with_resolution(ring: &Arc<Ring<F>>, diffs: Vec<GradedMatrix<F>>, finished: bool) -> Self {
        let rel = diffs[0].clone();
        let cache = ResolutionCache { diffs, finished };
        Module {
            ring: ring.clone(),
            twists: rel.target().to_vec(),
            rel,
            cache: Arc::new(Mutex::new(cache)),
        }
    }

    fn raw(ring: &Arc<Ring<F>>, twists: Vec<i32>, rel: GradedMatrix<F>) -> Self {
        Module {
            ring: ring.clone(),
            twists,
            rel,
            cache: Arc::new(Mutex::new(ResolutionCache::new())),
        }
    }

    /// Prunes generators killed by unit entries (graded Nakayama), then
    /// keeps a minimal set of relations.
    pub(crate) fn minimized(ring: &Arc<Ring<F>>, rel: GradedMatrix<F>) -> (Self, Transition<F>) {
        let field = ring.field();
        let order = ring.poly().term_order();
        let old_twists = rel.target().to_vec();
        let mut twists = old_twists.clone();
        let n0 = twists.len();
        let mut cols: Vec<Vector<F>> = rel
            .cols()
            .iter()
            .map(|c| ring.reduce_vector(c.clone()))
            .filter(|c| !c.is_zero())
            .collect();
        let mut trans: Vec<Vector<F>> = (0..n0).map(|i| Vector::unit(field, i as u32)).collect();
        let mut alive: Vec<usize> = (0..n0).collect();
        loop {
            let pivot = cols.iter().enumerate().find_map(|(j, c)| {
                c.terms()
                    .iter()
                    .find(|t| t.mon.is_one())
                    .map(|t| (j, t.comp, t.coef.clone()))
            });
            let Some((j, i, c)) = pivot else { break };
            let a = cols.remove(j);
            let ninv = field.neg(&field.inv(&c).expect("nonzero pivot"));
            let eliminate = |b: &Vector<F>| -> Vector<F> {
                let bi = b.entry(i);
                let b = if bi.is_zero() {
                    b.clone()
                } else {
                    let step = a.mul_poly(field, order, &bi).scale(field, &ninv);
                    ring.reduce_vector(b.add(field, order, &step))
                };
                b.map_comps(field, order, |k| match k.cmp(&i) {
                    std::cmp::Ordering::Less => Some(k),
                    std::cmp::Ordering::Equal => None,
                    std::cmp::Ordering::Greater => Some(k - 1),
                })
            };
            cols = cols.iter().map(&eliminate).filter(|b| !b.is_zero()).collect();
            trans = trans.iter().map(&eliminate).collect();
            twists.remove(i as usize);
            alive.remove(i as usize);
        }
        let keep = minimal_generator_indices(ring, &twists, &cols);
        let cols: Vec<Vector<F>> = keep.into_iter().map(|k| cols[k].clone()).collect();
        let rel = GradedMatrix::from_columns(twists.clone(), cols, 0).expect("pruning preserves homogeneity");
        let to_new = GradedMatrix::new(twists.clone(), old_twists, trans)
            .expect("transition is homogeneous");
        (Self::raw(ring, twists, rel), Transition { kept: alive, to_new })
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    /// Degrees of the minimal generators.
    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    /// The minimal presentation matrix.
    pub fn relations(&self) -> &GradedMatrix<F> {
        &self.rel
    }

    pub fn num_generators(&self) -> usize {
        self.twists.len()
    }

    pub fn num_relations(&self) -> usize {
        self.rel.ncols()
    }

    pub fn is_free(&self) -> bool {
        self.rel.ncols() == 0
    }

    pub fn submodule_basis(&self) -> SubmoduleBasis<F> {
        SubmoduleBasis::new(&self.ring, &self.twists, self.rel.cols())
    }

    /// `dim_k M_d`.
    pub fn hilbert_function(&self, d: i64) -> u64 {
        if self.twists.is_empty() {
            return 0;
        }
        self.submodule_basis().quotient_hilbert_function(d)
    }

    /// Krull dimension of `M`; -1 for the zero module.
    pub fn dimension(&self) -> i64 {
        if self.twists.is_empty() {
            return -1;
        }
        self.submodule_basis().quotient_dimension()
    }

    /// True iff every generator lies in the relation module.
    pub fn is_zero(&self) -> bool {
        self.twists.is_empty() || self.submodule_basis().is_everything()
    }

    /// `M(-e)`: generator degrees raised by `e`.
    pub fn shift_degrees(&self, e: i32) -> Self {
        Self::raw(&self.ring, self.twists.iter().map(|t| t + e).collect(), self.rel.shifted(e))
    }

    pub fn same_ring(&self, other: &Module<F>) -> bool {
        self.ring.same_as(&other.ring)
    }

    /// `M ⊕ N`.
    pub fn direct_sum(&self, other: &Module<F>) -> Result<Self> {
        if !self.same_ring(other) {
            return Err(AlgebraError::DimensionMismatch("modules over different rings".into()));
        }
        let field = self.ring.field();
        let rel = self.rel.direct_sum(field, self.ring.poly().term_order(), &other.rel);
        Ok(Self::coker(&self.ring, rel))
    }

    /// The same presentation read over another quotient of the same
    /// polynomial ring (for instance `R/(x)`).
    pub fn change_ring(&self, ring: &Arc<Ring<F>>) -> Result<Self> {
        if ring.poly().names() != self.ring.poly().names() {
            return Err(AlgebraError::DimensionMismatch("rings have different variables".into()));
        }
        let cols = self.rel.cols().iter().map(|c| ring.reduce_vector(c.clone())).collect();
        let rel = GradedMatrix::new(self.twists.clone(), self.rel.source().to_vec(), cols)?;
        Ok(Self::coker(ring, rel))
    }

    /// True iff `x M = 0`.
    pub fn annihilated_by(&self, x: &Polynomial<F>) -> bool {
        let sb = self.submodule_basis();
        let field = self.ring.field();
        let order = self.ring.poly().term_order();
        (0..self.twists.len()).all(|i| {
            let v = Vector::unit(field, i as u32).mul_poly(field, order, x.as_vector());
            sb.contains(&self.ring.reduce_vector(v))
        })
    }

    /// Presentation of `M* = Hom(M, R)` together with the matrix `K` whose
    /// columns, read in `F_0*`, are the homomorphisms chosen as generators.
    pub fn dual_with_generators(&self) -> (Self, GradedMatrix<F>) {
        let field = self.ring.field();
        let order = self.ring.poly().term_order();
        let at = self.rel.transpose(field, order);
        let k = syzygy_matrix(&self.ring, &at);
        let l = syzygy_matrix(&self.ring, &k);
        let (m, tr) = Self::minimized(&self.ring, l);
        debug_assert_eq!(tr.kept.len(), k.ncols());
        (m, k)
    }

    /// `M* = Hom(M, R)`.
    pub fn dual(&self) -> Self {
        self.dual_with_generators().0
    }

    pub fn describe(&self) -> String {
        let degs: Vec<String> = self.twists.iter().map(|t| t.to_string()).collect();
        if self.twists.is_empty() {
            return "0".into();
        }
        if self.rel.ncols() == 0 {
            return format!("free ({})", degs.join(", "));
        }
        format!("coker {} degrees ({})", self.rel.format(&self.ring), degs.join(", "))
    }
}
