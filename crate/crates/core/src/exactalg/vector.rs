//! Sparse vectors over a polynomial ring: the common term representation
//! behind polynomials, module elements and matrix columns.

use std::cmp::Ordering;
use std::fmt;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};

pub struct Term<F: Field> {
    pub mon: Monomial,
    pub comp: u32,
    pub coef: F::Elem,
}

impl<F: Field> Clone for Term<F> {
    fn clone(&self) -> Self {
        Term {
            mon: self.mon,
            comp: self.comp,
            coef: self.coef.clone(),
        }
    }
}

impl<F: Field> PartialEq for Term<F> {
    fn eq(&self, other: &Self) -> bool {
        self.mon == other.mon && self.comp == other.comp && self.coef == other.coef
    }
}

impl<F: Field> fmt::Debug for Term<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}*{:?}e{}", self.coef, self.mon, self.comp)
    }
}

/// Term order on `S^r`: components below `split` form the first block and
/// dominate every component at or above it. Inside a block, terms compare by
/// monomial first and then by component (lower index is larger).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub mono: MonomialOrder,
    pub split: u32,
}

impl TermOrder {
    pub fn new(mono: MonomialOrder) -> Self {
        TermOrder {
            mono,
            split: u32::MAX,
        }
    }

    pub fn with_split(mono: MonomialOrder, split: u32) -> Self {
        TermOrder { mono, split }
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        let ab = ac >= self.split;
        let bb = bc >= self.split;
        if ab != bb {
            return if ab { Ordering::Less } else { Ordering::Greater };
        }
        match self.mono.cmp(am, bm) {
            Ordering::Equal => bc.cmp(&ac),
            o => o,
        }
    }
}

/// Terms are kept sorted strictly descending under the ambient [`TermOrder`]
/// with no zero coefficients.
pub struct Vector<F: Field> {
    terms: Vec<Term<F>>,
}

impl<F: Field> Clone for Vector<F> {
    fn clone(&self) -> Self {
        Vector {
            terms: self.terms.clone(),
        }
    }
}

impl<F: Field> PartialEq for Vector<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Eq for Vector<F> {}

impl<F: Field> fmt::Debug for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

impl<F: Field> Default for Vector<F> {
    fn default() -> Self {
        Vector::zero()
    }
}

impl<F: Field> Vector<F> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    /// Builds a vector from terms in arbitrary order, combining duplicates.
    pub fn from_terms(field: &F, order: &TermOrder, mut terms: Vec<Term<F>>) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.mon, b.comp, &a.mon, a.comp));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.mon == t.mon && last.comp == t.comp {
                    last.coef = field.add(&last.coef, &t.coef);
                    if field.is_zero(&last.coef) {
                        out.pop();
                    }
                    continue;
                }
            }
            if !field.is_zero(&t.coef) {
                out.push(t);
            }
        }
        Vector { terms: out }
    }

    /// Trusts the caller that `terms` are sorted and nonzero.
    pub(crate) fn from_sorted(terms: Vec<Term<F>>) -> Self {
        Vector { terms }
    }

    pub fn unit(field: &F, comp: u32) -> Self {
        Vector {
            terms: vec![Term {
                mon: Monomial::ONE,
                comp,
                coef: field.one(),
            }],
        }
    }

    pub fn monomial(coef: F::Elem, mon: Monomial, comp: u32) -> Self {
        Vector {
            terms: vec![Term { mon, comp, coef }],
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    #[inline]
    pub fn lead(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    /// `self + c * m * other`.
    pub fn axpy(&self, field: &F, order: &TermOrder, c: &F::Elem, m: &Monomial, other: &Self) -> Self {
        Vector {
            terms: merge_axpy(field, order, &self.terms, c, m, &other.terms),
        }
    }

    pub fn add(&self, field: &F, order: &TermOrder, other: &Self) -> Self {
        self.axpy(field, order, &field.one(), &Monomial::ONE, other)
    }

    pub fn sub(&self, field: &F, order: &TermOrder, other: &Self) -> Self {
        self.axpy(field, order, &field.neg(&field.one()), &Monomial::ONE, other)
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        if field.is_zero(c) {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon,
                    comp: t.comp,
                    coef: field.mul(&t.coef, c),
                })
                .collect(),
        }
    }

    pub fn neg(&self, field: &F) -> Self {
        self.scale(field, &field.neg(&field.one()))
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.mul(m),
                    comp: t.comp,
                    coef: t.coef.clone(),
                })
                .collect(),
        }
    }

    /// Multiplies by a polynomial given as a rank-one vector (component ignored).
    pub fn mul_poly(&self, field: &F, order: &TermOrder, p: &Vector<F>) -> Self {
        let mut acc = Vector::zero();
        for t in &p.terms {
            acc = acc.axpy(field, order, &t.coef, &t.mon, self);
        }
        acc
    }

    /// Makes the leading coefficient one.
    pub fn make_monic(&self, field: &F) -> Self {
        match self.lead() {
            None => Vector::zero(),
            Some(t) => {
                if field.is_one(&t.coef) {
                    self.clone()
                } else {
                    let inv = field.inv(&t.coef).expect("nonzero lead");
                    self.scale(field, &inv)
                }
            }
        }
    }

    /// The entry at component `comp` as a rank-one vector in component 0.
    pub fn entry(&self, comp: u32) -> Vector<F> {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| Term {
                    mon: t.mon,
                    comp: 0,
                    coef: t.coef.clone(),
                })
                .collect(),
        }
    }

    /// Re-indexes components through `f`; the result is re-sorted.
    pub fn map_comps(&self, field: &F, order: &TermOrder, f: impl Fn(u32) -> Option<u32>) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                f(t.comp).map(|c| Term {
                    mon: t.mon,
                    comp: c,
                    coef: t.coef.clone(),
                })
            })
            .collect();
        Vector::from_terms(field, order, terms)
    }

    /// Places a rank-one vector (all terms in component 0) into component `comp`.
    pub fn into_comp(&self, comp: u32) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon,
                    comp,
                    coef: t.coef.clone(),
                })
                .collect(),
        }
    }

    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }

    /// Homogeneous degree with respect to generator degrees `twists`; `None`
    /// for the zero vector or an inhomogeneous one.
    pub fn degree(&self, twists: &[i32]) -> Option<i32> {
        let mut it = self.terms.iter().map(|t| t.mon.degree() as i32 + twists[t.comp as usize]);
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self, twists: &[i32]) -> bool {
        self.is_zero() || self.degree(twists).is_some()
    }

    /// Keeps the terms with `lo <= comp < hi`, shifting components down by `lo`.
    pub fn slice_comps(&self, lo: u32, hi: u32) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp >= lo && t.comp < hi)
                .map(|t| Term {
                    mon: t.mon,
                    comp: t.comp - lo,
                    coef: t.coef.clone(),
                })
                .collect(),
        }
    }

    pub fn retain_terms(&mut self, f: impl FnMut(&Term<F>) -> bool) {
        self.terms.retain(f);
    }

    /// Re-sorts under a different order (e.g. when a split is introduced).
    pub fn reorder(&self, field: &F, order: &TermOrder) -> Self {
        Vector::from_terms(field, order, self.terms.clone())
    }
}

/// `a + c * m * b` for sorted term slices.
pub(crate) fn merge_axpy<F: Field>(
    field: &F,
    order: &TermOrder,
    a: &[Term<F>],
    c: &F::Elem,
    m: &Monomial,
    b: &[Term<F>],
) -> Vec<Term<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Term<F>> = b.first().map(|t| shifted(field, t, c, m));
    while i < a.len() {
        let Some(bt) = bj.as_ref() else {
            out.extend_from_slice(&a[i..]);
            return out;
        };
        let at = &a[i];
        match order.cmp(&at.mon, at.comp, &bt.mon, bt.comp) {
            Ordering::Greater => {
                out.push(at.clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(bj.take().unwrap());
                j += 1;
                bj = b.get(j).map(|t| shifted(field, t, c, m));
            }
            Ordering::Equal => {
                let s = field.add(&at.coef, &bt.coef);
                if !field.is_zero(&s) {
                    out.push(Term {
                        mon: at.mon,
                        comp: at.comp,
                        coef: s,
                    });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| shifted(field, t, c, m));
            }
        }
    }
    if let Some(bt) = bj {
        out.push(bt);
        for t in &b[j + 1..] {
            out.push(shifted(field, t, c, m));
        }
    }
    out
}

#[inline]
fn shifted<F: Field>(field: &F, t: &Term<F>, c: &F::Elem, m: &Monomial) -> Term<F> {
    Term {
        mon: t.mon.mul(m),
        comp: t.comp,
        coef: field.mul(&t.coef, c),
    }
}
