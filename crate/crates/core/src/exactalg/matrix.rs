//! Homogeneous matrices between graded free modules, stored by columns.

use super::field::Field;
use super::poly::Polynomial;
use super::ring::Ring;
use super::vector::{Term, TermOrder, Vector};
use crate::error::{AlgebraError, Result};

/// A degree-zero map `F_1 -> F_0` of graded free modules. `target[i]` is the
/// degree of the i-th generator of `F_0`, `source[j]` the degree of the j-th
/// generator of `F_1`; column `j` is the image of that generator.
pub struct GradedMatrix<F: Field> {
    target: Vec<i32>,
    source: Vec<i32>,
    cols: Vec<Vector<F>>,
}

impl<F: Field> Clone for GradedMatrix<F> {
    fn clone(&self) -> Self {
        GradedMatrix {
            target: self.target.clone(),
            source: self.source.clone(),
            cols: self.cols.clone(),
        }
    }
}

impl<F: Field> PartialEq for GradedMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.target == other.target && self.source == other.source && self.cols == other.cols
    }
}

impl<F: Field> std::fmt::Debug for GradedMatrix<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GradedMatrix")
            .field("target", &self.target)
            .field("source", &self.source)
            .field("cols", &self.cols)
            .finish()
    }
}

impl<F: Field> GradedMatrix<F> {
    pub fn new(target: Vec<i32>, source: Vec<i32>, cols: Vec<Vector<F>>) -> Result<Self> {
        if source.len() != cols.len() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} column degrees for {} columns",
                source.len(),
                cols.len()
            )));
        }
        for (j, c) in cols.iter().enumerate() {
            if let Some(mc) = c.max_comp() {
                if mc as usize >= target.len() {
                    return Err(AlgebraError::DimensionMismatch(format!(
                        "column {j} has an entry in row {mc} but the target has rank {}",
                        target.len()
                    )));
                }
            }
            if !c.is_zero() && c.degree(&target) != Some(source[j]) {
                return Err(AlgebraError::NotHomogeneous(format!(
                    "column {j} is not homogeneous of degree {}",
                    source[j]
                )));
            }
        }
        Ok(GradedMatrix { target, source, cols })
    }

    /// Column degrees are read off the columns; zero columns get degree `fallback`.
    pub fn from_columns(target: Vec<i32>, cols: Vec<Vector<F>>, fallback: i32) -> Result<Self> {
        let mut source = Vec::with_capacity(cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.is_zero() {
                source.push(fallback);
            } else {
                source.push(c.degree(&target).ok_or_else(|| {
                    AlgebraError::NotHomogeneous(format!("column {j} is not homogeneous"))
                })?);
            }
        }
        GradedMatrix::new(target, source, cols)
    }

    /// Builds from a row-major table of entries, reducing modulo the ring.
    pub fn from_rows(ring: &Ring<F>, target: Vec<i32>, source: Vec<i32>, rows: &[Vec<Polynomial<F>>]) -> Result<Self> {
        if rows.len() != target.len() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} rows for a target of rank {}",
                rows.len(),
                target.len()
            )));
        }
        let ncols = source.len();
        let mut cols = vec![Vec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for (j, p) in row.iter().enumerate() {
                for t in p.as_vector().terms() {
                    cols[j].push(Term {
                        mon: t.mon,
                        comp: i as u32,
                        coef: t.coef.clone(),
                    });
                }
            }
        }
        let order = ring.poly().term_order();
        let cols = cols
            .into_iter()
            .map(|ts| ring.reduce_vector(Vector::from_terms(ring.field(), order, ts)))
            .collect();
        GradedMatrix::new(target, source, cols)
    }

    pub fn identity(field: &F, twists: &[i32]) -> Self {
        GradedMatrix {
            target: twists.to_vec(),
            source: twists.to_vec(),
            cols: (0..twists.len()).map(|i| Vector::unit(field, i as u32)).collect(),
        }
    }

    pub fn zero_map(target: Vec<i32>, source: Vec<i32>) -> Self {
        let cols = vec![Vector::zero(); source.len()];
        GradedMatrix { target, source, cols }
    }

    pub fn nrows(&self) -> usize {
        self.target.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn target(&self) -> &[i32] {
        &self.target
    }

    pub fn source(&self) -> &[i32] {
        &self.source
    }

    pub fn cols(&self) -> &[Vector<F>] {
        &self.cols
    }

    pub fn col(&self, j: usize) -> &Vector<F> {
        &self.cols[j]
    }

    pub fn into_cols(self) -> Vec<Vector<F>> {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial<F> {
        Polynomial::from_vector(self.cols[j].entry(i as u32))
    }

    /// Rows of entries (for display and tests).
    pub fn rows(&self) -> Vec<Vec<Polynomial<F>>> {
        (0..self.nrows())
            .map(|i| (0..self.ncols()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// The dual map `F_0^* -> F_1^*`; degrees are negated.
    pub fn transpose(&self, field: &F, order: &TermOrder) -> Self {
        let mut cols: Vec<Vec<Term<F>>> = vec![Vec::new(); self.nrows()];
        for (j, c) in self.cols.iter().enumerate() {
            for t in c.terms() {
                cols[t.comp as usize].push(Term {
                    mon: t.mon,
                    comp: j as u32,
                    coef: t.coef.clone(),
                });
            }
        }
        GradedMatrix {
            target: self.source.iter().map(|d| -d).collect(),
            source: self.target.iter().map(|d| -d).collect(),
            cols: cols.into_iter().map(|ts| Vector::from_terms(field, order, ts)).collect(),
        }
    }

    /// `A (x) Id` acting on `n` copies: row `i` becomes rows `i*n .. i*n+n`,
    /// and generator `(i, s)` gets degree `target[i] + twists[s]`.
    pub fn kron_identity(&self, field: &F, order: &TermOrder, twists: &[i32]) -> Self {
        let n = twists.len();
        let mut cols = Vec::with_capacity(self.ncols() * n);
        let mut source = Vec::with_capacity(self.ncols() * n);
        for (j, c) in self.cols.iter().enumerate() {
            for (s, &ts) in twists.iter().enumerate() {
                let terms: Vec<Term<F>> = c
                    .terms()
                    .iter()
                    .map(|t| Term {
                        mon: t.mon,
                        comp: t.comp * n as u32 + s as u32,
                        coef: t.coef.clone(),
                    })
                    .collect();
                cols.push(Vector::from_terms(field, order, terms));
                source.push(self.source[j] + ts);
            }
        }
        let target = self
            .target
            .iter()
            .flat_map(|&a| twists.iter().map(move |&t| a + t))
            .collect();
        GradedMatrix { target, source, cols }
    }

    /// `[A | B]` for maps with the same target.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.target != other.target {
            return Err(AlgebraError::DimensionMismatch("hconcat of maps with different targets".into()));
        }
        let mut m = self.clone();
        m.source.extend_from_slice(&other.source);
        m.cols.extend(other.cols.iter().cloned());
        Ok(m)
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, field: &F, order: &TermOrder, other: &Self) -> Self {
        let off = self.nrows() as u32;
        let mut m = self.clone();
        m.target.extend_from_slice(&other.target);
        m.source.extend_from_slice(&other.source);
        for c in &other.cols {
            m.cols.push(c.map_comps(field, order, |k| Some(k + off)));
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        GradedMatrix {
            target: self.target.clone(),
            source: idx.iter().map(|&j| self.source[j]).collect(),
            cols: idx.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    /// Image of a vector of the source module, reduced modulo the ring.
    pub fn apply(&self, ring: &Ring<F>, v: &Vector<F>) -> Vector<F> {
        let order = ring.poly().term_order();
        let mut acc = Vector::zero();
        for t in v.terms() {
            acc = acc.axpy(ring.field(), order, &t.coef, &t.mon, &self.cols[t.comp as usize]);
        }
        ring.reduce_vector(acc)
    }

    /// Composition `self * other`.
    pub fn compose(&self, ring: &Ring<F>, other: &Self) -> Result<Self> {
        if other.target != self.source {
            return Err(AlgebraError::DimensionMismatch("composition of incompatible maps".into()));
        }
        Ok(GradedMatrix {
            target: self.target.clone(),
            source: other.source.clone(),
            cols: other.cols.iter().map(|c| self.apply(ring, c)).collect(),
        })
    }

    /// Multiplies every entry by `f` (homogeneous of degree `deg`), shifting
    /// the source degrees.
    pub fn scale_by(&self, ring: &Ring<F>, f: &Polynomial<F>, deg: i32) -> Self {
        let order = ring.poly().term_order();
        GradedMatrix {
            target: self.target.clone(),
            source: self.source.iter().map(|d| d + deg).collect(),
            cols: self
                .cols
                .iter()
                .map(|c| ring.reduce_vector(c.mul_poly(ring.field(), order, f.as_vector())))
                .collect(),
        }
    }

    /// Shifts all degrees by `k` (a twist of both modules).
    pub fn shifted(&self, k: i32) -> Self {
        GradedMatrix {
            target: self.target.iter().map(|d| d + k).collect(),
            source: self.source.iter().map(|d| d + k).collect(),
            cols: self.cols.clone(),
        }
    }

    pub fn format(&self, ring: &Ring<F>) -> String {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|p| ring.format(p)).collect::<Vec<_>>().join(", "))
            .collect();
        format!("[{}]", rows.join("; "))
    }
}
