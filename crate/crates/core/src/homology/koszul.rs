//! Koszul complexes `K(x; R)` and Koszul homology `H_j(x, M)`.

use crate::error::{AlgebraError, Result};
use crate::exactalg::{Field, GradedMatrix, Polynomial, Ring, Term, Vector};
use crate::modcalc::Module;

use super::complex::Subquotient;

/// `K_j = ⊕_{|S| = j} R(-deg x_S)` with
/// `∂(e_S) = Σ (-1)^pos x_{s_pos} e_{S \ s_pos}`.
pub struct KoszulComplex<F: Field> {
    seq: Vec<Polynomial<F>>,
    subsets: Vec<Vec<Vec<usize>>>,
    twists: Vec<Vec<i32>>,
    diffs: Vec<GradedMatrix<F>>,
}

fn subsets_of_size(n: usize, j: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, j: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, j, &mut Vec::new(), &mut out);
    out
}

impl<F: Field> KoszulComplex<F> {
    pub fn new(ring: &Ring<F>, seq: &[Polynomial<F>]) -> Result<Self> {
        let mut degs = Vec::with_capacity(seq.len());
        for x in seq {
            let x = ring.reduce(x);
            degs.push(match x.homogeneous_degree() {
                Some(d) => d as i32,
                None if x.is_zero() => 1,
                None => return Err(AlgebraError::NotHomogeneous(ring.format(&x))),
            });
        }
        let n = seq.len();
        let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|j| subsets_of_size(n, j)).collect();
        let twists: Vec<Vec<i32>> = subsets
            .iter()
            .map(|ss| ss.iter().map(|s| s.iter().map(|&i| degs[i]).sum()).collect())
            .collect();
        let field = ring.field();
        let order = ring.poly().term_order();
        let mut diffs = Vec::with_capacity(n);
        for j in 1..=n {
            let index: std::collections::HashMap<&Vec<usize>, u32> =
                subsets[j - 1].iter().enumerate().map(|(k, s)| (s, k as u32)).collect();
            let cols: Vec<Vector<F>> = subsets[j]
                .iter()
                .map(|s| {
                    let mut terms = Vec::new();
                    for (pos, &i) in s.iter().enumerate() {
                        let mut rest = s.clone();
                        rest.remove(pos);
                        let comp = index[&rest];
                        for t in ring.reduce(&seq[i]).as_vector().terms() {
                            let coef = if pos % 2 == 0 { t.coef.clone() } else { field.neg(&t.coef) };
                            terms.push(Term { mon: t.mon, comp, coef });
                        }
                    }
                    Vector::from_terms(field, order, terms)
                })
                .collect();
            diffs.push(GradedMatrix::new(twists[j - 1].clone(), twists[j].clone(), cols)?);
        }
        Ok(KoszulComplex {
            seq: seq.to_vec(),
            subsets,
            twists,
            diffs,
        })
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Rank of `K_j`.
    pub fn rank(&self, j: usize) -> usize {
        self.subsets.get(j).map_or(0, |s| s.len())
    }

    pub fn twists(&self, j: usize) -> &[i32] {
        &self.twists[j]
    }

    /// `∂_j : K_j -> K_{j-1}` for `1 <= j <= n`.
    pub fn differential(&self, j: usize) -> &GradedMatrix<F> {
        &self.diffs[j - 1]
    }

    fn spot(&self, m: &Module<F>, j: usize) -> Subquotient<F> {
        let n = self.len();
        let incoming = (j < n).then(|| &self.diffs[j]);
        let outgoing = (j >= 1).then(|| &self.diffs[j - 1]);
        Subquotient::new(m, &self.twists[j], incoming, outgoing)
    }

    /// `H_j(x, M)`; zero outside `0..=n`.
    pub fn homology(&self, m: &Module<F>, j: usize) -> Module<F> {
        if j > self.len() {
            return Module::zero(m.ring());
        }
        self.spot(m, j).module()
    }

    pub fn homology_vanishes(&self, m: &Module<F>, j: usize) -> bool {
        j > self.len() || self.spot(m, j).is_zero()
    }
}

/// `H_j(x, M)`.
pub fn koszul_homology<F: Field>(seq: &[Polynomial<F>], m: &Module<F>, j: usize) -> Result<Module<F>> {
    Ok(KoszulComplex::new(m.ring(), seq)?.homology(m, j))
}
