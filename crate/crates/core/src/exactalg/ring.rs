//! Graded quotient rings `k[x_1..x_n]/I` with a cached reduced Groebner basis.

use std::fmt;
use std::sync::Arc;

use super::field::Field;
use super::groebner::{reduce_mod_ideal, GbEngine};
use super::hilbert;
use super::monomial::{Monomial, MonomialOrder};
use super::poly::{format_poly, PolyRing, Polynomial};
use super::vector::Vector;
use crate::error::{AlgebraError, Result};

/// Reduced Groebner basis of the ideal generated by homogeneous `gens`.
pub fn groebner_basis<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
    for g in gens {
        if !g.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous(ring.format(g)));
        }
        if g.terms().any(|(m, _)| m.support().any(|i| i >= ring.nvars())) {
            return Err(AlgebraError::ArityMismatch {
                expected: ring.nvars(),
                got: g.terms().flat_map(|(m, _)| m.support()).max().unwrap_or(0) + 1,
            });
        }
    }
    let mut eng = GbEngine::new(ring.field(), ring.monomial_order(), vec![0], 1, Arc::new(Vec::new()));
    for g in gens {
        eng.add_generator(g.as_vector().clone());
    }
    eng.run(None);
    let mut gb: Vec<Polynomial<F>> = eng
        .reduced_basis(false)
        .into_iter()
        .map(|v| Polynomial::from_vector(v.make_monic(ring.field())))
        .collect();
    let order = ring.monomial_order();
    gb.sort_by(|a, b| order.cmp(&b.leading_monomial().unwrap(), &a.leading_monomial().unwrap()));
    Ok(gb)
}

/// Remainder of `f` on division by the Groebner basis `gb`.
pub fn normal_form<F: Field>(ring: &PolyRing<F>, f: &Polynomial<F>, gb: &[Polynomial<F>]) -> Polynomial<F> {
    let vecs: Vec<Vector<F>> = gb.iter().map(|g| g.as_vector().clone()).collect();
    Polynomial::from_vector(reduce_mod_ideal(ring.field(), ring.term_order(), &vecs, f.as_vector().clone()))
}

/// `k[x_1..x_n]/I` for a homogeneous ideal `I` not containing 1. The
/// irrelevant ideal `(x_1..x_n)` is the unique graded maximal ideal.
pub struct Ring<F: Field> {
    poly: PolyRing<F>,
    generators: Vec<Polynomial<F>>,
    gb: Vec<Polynomial<F>>,
    gb_vecs: Arc<Vec<Vector<F>>>,
    leading: Vec<Monomial>,
}

impl<F: Field> fmt::Debug for Ring<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl<F: Field> Ring<F> {
    pub fn new(poly: PolyRing<F>, generators: Vec<Polynomial<F>>) -> Result<Arc<Self>> {
        let gb = groebner_basis(&poly, &generators)?;
        if gb.iter().any(|g| g.is_constant()) {
            return Err(AlgebraError::ZeroRing);
        }
        let gb_vecs = Arc::new(gb.iter().map(|g| g.as_vector().clone()).collect());
        let leading = gb.iter().map(|g| g.leading_monomial().unwrap()).collect();
        Ok(Arc::new(Ring {
            poly,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            gb,
            gb_vecs,
            leading,
        }))
    }

    /// The polynomial ring itself.
    /// Structural equality: same variables, order, field and ideal.
    pub fn same_as(&self, other: &Ring<F>) -> bool {
        std::ptr::eq(self, other)
            || (self.poly.names() == other.poly.names()
                && self.poly.monomial_order() == other.poly.monomial_order()
                && self.poly.field().name() == other.poly.field().name()
                && self.gb == other.gb)
    }

    pub fn polynomial_ring(poly: PolyRing<F>) -> Arc<Self> {
        Ring::new(poly, Vec::new()).expect("zero ideal")
    }

    pub fn poly(&self) -> &PolyRing<F> {
        &self.poly
    }

    pub fn field(&self) -> &F {
        self.poly.field()
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn monomial_order(&self) -> &MonomialOrder {
        self.poly.monomial_order()
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &[Polynomial<F>] {
        &self.gb
    }

    pub(crate) fn gb_vectors(&self) -> Arc<Vec<Vector<F>>> {
        self.gb_vecs.clone()
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        self.poly.var(i)
    }

    pub fn variables(&self) -> Vec<Polynomial<F>> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(&self.poly, f, &self.gb)
    }

    pub fn reduce_vector(&self, v: Vector<F>) -> Vector<F> {
        reduce_mod_ideal(self.field(), self.poly.term_order(), &self.gb_vecs, v)
    }

    pub fn is_zero_element(&self, f: &Polynomial<F>) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.reduce(&self.poly.mul(a, b))
    }

    /// `R/(extra)` presented over the same polynomial ring.
    pub fn quotient(&self, extra: &[Polynomial<F>]) -> Result<Arc<Self>> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ring::new(self.poly.clone(), gens)
    }

    /// `R[t]` with the new variable appended last in the order.
    pub fn adjoin_variable(&self, name: &str) -> Result<Arc<Self>> {
        let mut names = self.poly.names().to_vec();
        names.push(name.to_string());
        let order = match self.monomial_order().permutation() {
            None => MonomialOrder::new(self.monomial_order().kind()),
            Some(p) => {
                let mut p = p.to_vec();
                p.push(names.len() - 1);
                MonomialOrder::with_permutation(self.monomial_order().kind(), p)
            }
        };
        let poly = PolyRing::new(self.field().clone(), names, order)?;
        // exponent arrays are padded with zeros, so existing polynomials carry over
        Ring::new(poly, self.generators.clone())
    }

    /// `dim_k R_d`.
    pub fn hilbert_function(&self, d: i64) -> u64 {
        hilbert::standard_monomial_count(self.nvars(), &self.leading, d)
    }

    pub fn krull_dimension(&self) -> i64 {
        hilbert::monomial_quotient_dimension(self.nvars(), &self.leading)
    }

    pub fn is_artinian(&self) -> bool {
        self.krull_dimension() == 0
    }

    /// Standard monomials of degree `d`: a k-basis of `R_d`.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        Monomial::all_of_degree(self.nvars(), d)
            .into_iter()
            .filter(|m| !self.leading.iter().any(|l| l.divides(m)))
            .collect()
    }

    /// Highest degree with `R_d != 0` for an artinian ring.
    pub fn top_degree(&self) -> Option<u32> {
        if !self.is_artinian() {
            return None;
        }
        let mut d = 0u32;
        while self.hilbert_function(d as i64 + 1) > 0 {
            d += 1;
        }
        Some(d)
    }

    pub fn format(&self, p: &Polynomial<F>) -> String {
        format_poly(self.field(), self.poly.names(), p)
    }

    pub fn describe(&self) -> String {
        let vars = self.poly.names().join(",");
        if self.generators.is_empty() {
            format!("{}[{}]", self.field().name(), vars)
        } else {
            let gens: Vec<String> = self.generators.iter().map(|g| self.format(g)).collect();
            format!("{}[{}]/({})", self.field().name(), vars, gens.join(", "))
        }
    }
}
