//! Submodule membership, minimal generators, lifting and syzygies over `R = S/I`.

use std::sync::Arc;

use super::field::Field;
use super::groebner::GbEngine;
use super::hilbert;
use super::matrix::GradedMatrix;
use super::monomial::Monomial;
use super::ring::Ring;
use super::vector::Vector;

/// Groebner basis of `U + I*S^r` for a submodule `U` of a graded free module.
pub struct SubmoduleBasis<F: Field> {
    eng: GbEngine<F>,
    twists: Vec<i32>,
    nvars: usize,
}

impl<F: Field> SubmoduleBasis<F> {
    pub fn new(ring: &Ring<F>, twists: &[i32], gens: &[Vector<F>]) -> Self {
        let mut eng = GbEngine::new(ring.field(), ring.monomial_order(), twists.to_vec(), twists.len(), ring.gb_vectors());
        for g in gens {
            eng.add_generator(ring.reduce_vector(g.clone()));
        }
        eng.run(None);
        SubmoduleBasis {
            eng,
            twists: twists.to_vec(),
            nvars: ring.nvars(),
        }
    }

    pub fn contains(&self, v: &Vector<F>) -> bool {
        self.eng.top_reduce(v.clone()).is_zero()
    }

    pub fn normal_form(&self, v: &Vector<F>) -> Vector<F> {
        self.eng.normal_form(v.clone())
    }

    /// Leading monomials per component (the defining ideal's included).
    pub fn leading_terms(&self) -> Vec<Vec<Monomial>> {
        self.eng.leading_terms()
    }

    /// `dim_k (R^r / U)_d`.
    pub fn quotient_hilbert_function(&self, d: i64) -> u64 {
        self.leading_terms()
            .iter()
            .zip(&self.twists)
            .map(|(lts, &t)| hilbert::standard_monomial_count(self.nvars, lts, d - t as i64))
            .sum()
    }

    /// Krull dimension of `R^r / U`; -1 when the quotient is zero.
    pub fn quotient_dimension(&self) -> i64 {
        self.leading_terms()
            .iter()
            .map(|lts| hilbert::monomial_quotient_dimension(self.nvars, lts))
            .max()
            .unwrap_or(-1)
    }

    /// Whether `U + I*S^r` is the whole free module.
    pub fn is_everything(&self) -> bool {
        self.leading_terms().iter().all(|lts| lts.iter().any(|m| m.is_one()))
    }

    pub fn basis(&self) -> Vec<Vector<F>> {
        self.eng.basis(false)
    }
}

/// Indices of a minimal homogeneous generating set of the submodule spanned
/// by `gens` modulo `I`, chosen greedily by increasing degree (graded Nakayama).
pub fn minimal_generator_indices<F: Field>(ring: &Ring<F>, twists: &[i32], gens: &[Vector<F>]) -> Vec<usize> {
    let mut order: Vec<(i32, usize)> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| (g.degree(twists).expect("homogeneous generator"), i))
        .collect();
    order.sort();
    let mut eng = GbEngine::new(ring.field(), ring.monomial_order(), twists.to_vec(), twists.len(), ring.gb_vectors());
    let mut kept = Vec::new();
    for (d, i) in order {
        eng.run(Some(d));
        let r = eng.top_reduce(ring.reduce_vector(gens[i].clone()));
        if !r.is_zero() {
            kept.push(i);
            eng.absorb(r);
        }
    }
    kept
}

pub fn minimal_generators<F: Field>(ring: &Ring<F>, twists: &[i32], gens: &[Vector<F>]) -> Vec<Vector<F>> {
    minimal_generator_indices(ring, twists, gens)
        .into_iter()
        .map(|i| ring.reduce_vector(gens[i].clone()))
        .collect()
}

fn tracked_engine<F: Field>(ring: &Ring<F>, m: &GradedMatrix<F>) -> GbEngine<F> {
    let split = m.nrows();
    let mut twists = m.target().to_vec();
    twists.extend_from_slice(m.source());
    let mut eng = GbEngine::new(ring.field(), ring.monomial_order(), twists, split, ring.gb_vectors());
    let field = ring.field();
    for (j, c) in m.cols().iter().enumerate() {
        let c = ring.reduce_vector(c.clone());
        let mut terms = c.into_terms();
        terms.push(super::vector::Term {
            mon: Monomial::ONE,
            comp: (split + j) as u32,
            coef: field.one(),
        });
        // first-block terms precede the tracking term, so the order is preserved
        eng.add_generator(Vector::from_sorted(terms));
    }
    eng
}

/// Minimal generators of the kernel of `m` over `R`, as vectors of the
/// source module.
pub fn syzygies<F: Field>(ring: &Ring<F>, m: &GradedMatrix<F>) -> Vec<Vector<F>> {
    let mut eng = tracked_engine(ring, m);
    eng.run(None);
    let cands = eng.take_syzygies();
    minimal_generators(ring, m.source(), &cands)
        .into_iter()
        .map(|v| v.make_monic(ring.field()))
        .collect()
}

/// The map whose columns minimally generate `ker m`.
pub fn syzygy_matrix<F: Field>(ring: &Ring<F>, m: &GradedMatrix<F>) -> GradedMatrix<F> {
    let cols = syzygies(ring, m);
    GradedMatrix::from_columns(m.source().to_vec(), cols, 0).expect("syzygies are homogeneous")
}

/// Expresses vectors as combinations of the columns of a fixed matrix.
pub struct Lifter<F: Field> {
    eng: GbEngine<F>,
    split: usize,
    ncols: usize,
    target: Vec<i32>,
    ring: Arc<Ring<F>>,
}

impl<F: Field> Lifter<F> {
    pub fn new(ring: &Arc<Ring<F>>, m: &GradedMatrix<F>) -> Self {
        Lifter {
            eng: tracked_engine(ring, m),
            split: m.nrows(),
            ncols: m.ncols(),
            target: m.target().to_vec(),
            ring: ring.clone(),
        }
    }

    /// Coefficients `c` with `m * c = v` modulo `I`, or `None` if `v` is not
    /// in the image.
    pub fn lift(&mut self, v: &Vector<F>) -> Option<Vector<F>> {
        let v = self.ring.reduce_vector(v.clone());
        let Some(d) = v.degree(&self.target) else {
            return if v.is_zero() { Some(Vector::zero()) } else { None };
        };
        self.eng.run(Some(d));
        let v = v.reorder(self.ring.field(), self.eng.order());
        let nf = self.eng.normal_form(v);
        if nf.terms().iter().any(|t| (t.comp as usize) < self.split) {
            return None;
        }
        let split = self.split as u32;
        let ncols = self.ncols as u32;
        let field = self.ring.field();
        let coeffs = nf
            .neg(field)
            .map_comps(field, self.ring.poly().term_order(), |c| (c >= split && c < split + ncols).then(|| c - split));
        Some(self.ring.reduce_vector(coeffs))
    }
}
