//! Multivariate polynomials over an exact field.

use std::fmt;
use std::sync::Arc;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::vector::{Term, TermOrder, Vector};
use crate::error::{AlgebraError, Result};

/// The ambient polynomial ring `k[x_1..x_n]` with its monomial order.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Arc<Vec<String>>,
    order: TermOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(AlgebraError::Malformed(format!(
                "{} variables requested; at most {MAX_VARS} are supported",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(AlgebraError::Malformed(format!("duplicate variable name `{n}`")));
            }
        }
        if let Some(p) = order.permutation() {
            let mut seen = p.to_vec();
            seen.sort_unstable();
            if seen != (0..names.len()).collect::<Vec<_>>() {
                return Err(AlgebraError::Malformed("variable permutation is not a permutation".into()));
            }
        }
        Ok(PolyRing {
            field,
            names: Arc::new(names),
            order: TermOrder::new(order),
        })
    }

    #[inline]
    pub fn field(&self) -> &F {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn monomial_order(&self) -> &MonomialOrder {
        &self.order.mono
    }

    #[inline]
    pub fn term_order(&self) -> &TermOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        self.term(c, Monomial::ONE)
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        assert!(i < self.nvars());
        self.term(self.field.one(), Monomial::var(i))
    }

    pub fn term(&self, c: F::Elem, m: Monomial) -> Polynomial<F> {
        if self.field.is_zero(&c) {
            return Polynomial::zero();
        }
        Polynomial(Vector::monomial(c, m, 0))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; the exponent
    /// vectors must have exactly `nvars` entries.
    pub fn from_terms(&self, terms: Vec<(Vec<u16>, F::Elem)>) -> Result<Polynomial<F>> {
        let mut out = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            if e.len() != self.nvars() {
                return Err(AlgebraError::ArityMismatch {
                    expected: self.nvars(),
                    got: e.len(),
                });
            }
            out.push(Term {
                mon: Monomial::from_exponents(&e),
                comp: 0,
                coef: c,
            });
        }
        Ok(Polynomial(Vector::from_terms(&self.field, &self.order, out)))
    }

    pub fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        Polynomial(a.0.add(&self.field, &self.order, &b.0))
    }

    pub fn sub(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        Polynomial(a.0.sub(&self.field, &self.order, &b.0))
    }

    pub fn neg(&self, a: &Polynomial<F>) -> Polynomial<F> {
        Polynomial(a.0.neg(&self.field))
    }

    pub fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        Polynomial(a.0.mul_poly(&self.field, &self.order, &b.0))
    }

    pub fn scale(&self, a: &Polynomial<F>, c: &F::Elem) -> Polynomial<F> {
        Polynomial(a.0.scale(&self.field, c))
    }

    pub fn pow(&self, a: &Polynomial<F>, e: u32) -> Polynomial<F> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn format(&self, p: &Polynomial<F>) -> String {
        format_poly(&self.field, &self.names, p)
    }
}

/// A polynomial, stored as a rank-one [`Vector`] (every term in component 0)
/// sorted descending under the ring's order.
pub struct Polynomial<F: Field>(pub(crate) Vector<F>);

impl<F: Field> Clone for Polynomial<F> {
    fn clone(&self) -> Self {
        Polynomial(self.0.clone())
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial(Vector::zero())
    }

    pub fn from_vector(v: Vector<F>) -> Self {
        debug_assert!(v.terms().iter().all(|t| t.comp == 0));
        Polynomial(v)
    }

    pub fn as_vector(&self) -> &Vector<F> {
        &self.0
    }

    pub fn into_vector(self) -> Vector<F> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.0.terms().iter().map(|t| (&t.mon, &t.coef))
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.0.lead().map(|t| t.mon)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.0.lead().map(|t| &t.coef)
    }

    /// Degree of a homogeneous polynomial; `None` for zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        self.0.degree(&[0]).map(|d| d as u32)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.0.is_homogeneous(&[0])
    }

    pub fn is_constant(&self) -> bool {
        self.0.terms().iter().all(|t| t.mon.is_one())
    }

    /// Largest total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.0.terms().iter().map(|t| t.mon.degree()).max()
    }

    /// Whether any term involves variable `i`.
    pub fn involves(&self, i: usize) -> bool {
        self.0.terms().iter().any(|t| t.mon.exp(i) > 0)
    }
}

pub(crate) fn format_poly<F: Field>(field: &F, names: &[String], p: &Polynomial<F>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let cs = field.format(c);
        let (neg, mag) = match cs.strip_prefix('-') {
            Some(r) => (true, r.to_string()),
            None => (false, cs),
        };
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mono = m.format(names);
        if m.is_one() {
            s.push_str(&mag);
        } else if mag == "1" {
            s.push_str(&mono);
        } else {
            s.push_str(&mag);
            s.push('*');
            s.push_str(&mono);
        }
    }
    s
}
