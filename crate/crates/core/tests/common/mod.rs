#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use habw_core::exactalg::{Field, GradedMatrix, Monomial, MonomialOrder, PolyRing, PrimeField, Ring, Vector};

pub type R = Ring<PrimeField>;

pub fn ring(vars: &[&str], gens: &[&str]) -> Arc<R> {
    let poly = PolyRing::new(
        PrimeField::default(),
        vars.iter().map(|s| s.to_string()).collect(),
        MonomialOrder::default(),
    )
    .unwrap();
    let g = poly.parse_all(gens).unwrap();
    Ring::new(poly, g).unwrap()
}

pub fn matrix(r: &R, target: &[i32], source: &[i32], rows: &[&[&str]]) -> GradedMatrix<PrimeField> {
    let rows: Vec<Vec<_>> = rows.iter().map(|row| r.poly().parse_all(row).unwrap()).collect();
    GradedMatrix::from_rows(r, target.to_vec(), source.to_vec(), &rows).unwrap()
}

/// Rank of a dense matrix over GF(p) by plain row reduction.
pub fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] % p != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c];
                for k in 0..ncols {
                    rows[i][k] = (rows[i][k] + p * p - f * rows[rank][k]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Coordinates of degree-`d` elements of the free module `S^twists` over
/// the ambient polynomial ring, indexed by (component, monomial).
pub struct Slice {
    pub index: HashMap<(u32, Monomial), usize>,
    pub p: u64,
}

impl Slice {
    pub fn new(nvars: usize, twists: &[i32], d: i32, p: u64) -> Self {
        let mut index = HashMap::new();
        for (c, &t) in twists.iter().enumerate() {
            if d - t >= 0 {
                for m in Monomial::all_of_degree(nvars, (d - t) as u32) {
                    let n = index.len();
                    index.insert((c as u32, m), n);
                }
            }
        }
        Slice { index, p }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn dense(&self, v: &Vector<PrimeField>) -> Vec<u64> {
        let mut out = vec![0; self.dim()];
        for t in v.terms() {
            out[self.index[&(t.comp, t.mon)]] = t.coef as u64;
        }
        out
    }
}

/// All products `m * g * e_c` of degree `d` with `g` an ideal generator:
/// a spanning set of `(I S^twists)_d`.
pub fn ideal_part(r: &R, twists: &[i32], d: i32) -> Vec<Vector<PrimeField>> {
    let f = r.field();
    let order = r.poly().term_order();
    let mut out = Vec::new();
    for (c, &t) in twists.iter().enumerate() {
        for g in r.generators() {
            let gd = g.homogeneous_degree().unwrap() as i32;
            if d - t - gd < 0 {
                continue;
            }
            for m in Monomial::all_of_degree(r.nvars(), (d - t - gd) as u32) {
                let v = g.as_vector().mul_monomial(&m).map_comps(f, order, |_| Some(c as u32));
                out.push(v);
            }
        }
    }
    out
}

/// Dimension of the degree-`d` part of the submodule of `R^twists`
/// spanned by `gens`, by linear algebra in the ambient ring.
pub fn span_dim(r: &R, twists: &[i32], gens: &[Vector<PrimeField>], gen_degs: &[i32], d: i32) -> usize {
    let p = r.field().characteristic() as u64;
    let slice = Slice::new(r.nvars(), twists, d, p);
    let ideal: Vec<Vec<u64>> = ideal_part(r, twists, d).iter().map(|v| slice.dense(v)).collect();
    let base = rank(ideal.clone(), p);
    let mut rows = ideal;
    for (g, &gd) in gens.iter().zip(gen_degs) {
        if d - gd < 0 {
            continue;
        }
        for m in Monomial::all_of_degree(r.nvars(), (d - gd) as u32) {
            rows.push(slice.dense(&g.mul_monomial(&m)));
        }
    }
    rank(rows, p) - base
}

/// `dim_k (R^twists)_d`.
pub fn free_dim(r: &R, twists: &[i32], d: i32) -> usize {
    let p = r.field().characteristic() as u64;
    let slice = Slice::new(r.nvars(), twists, d, p);
    let ideal: Vec<Vec<u64>> = ideal_part(r, twists, d).iter().map(|v| slice.dense(v)).collect();
    slice.dim() - rank(ideal, p)
}

/// `dim_k (ker M)_d` for `M: R^source -> R^target`, by linear algebra.
pub fn kernel_dim(r: &R, m: &GradedMatrix<PrimeField>, d: i32) -> usize {
    let p = r.field().characteristic() as u64;
    let f = r.field();
    let order = r.poly().term_order();
    let src = Slice::new(r.nvars(), m.source(), d, p);
    let tgt = Slice::new(r.nvars(), m.target(), d, p);
    let tgt_ideal: Vec<Vec<u64>> = ideal_part(r, m.target(), d).iter().map(|v| tgt.dense(v)).collect();
    let base = rank(tgt_ideal.clone(), p);
    let mut rows = tgt_ideal;
    let mut keys: Vec<_> = src.index.iter().map(|(k, &i)| (i, *k)).collect();
    keys.sort_by_key(|x| x.0);
    for (_, (c, mon)) in keys {
        let img = m.col(c as usize).mul_monomial(&mon);
        let img = Vector::from_terms(f, order, img.into_terms());
        rows.push(tgt.dense(&img));
    }
    let image_rank = rank(rows, p) - base;
    let ker_ambient = src.dim() - image_rank;
    ker_ambient - (src.dim() - free_dim(r, m.source(), d))
}

/// A small deterministic generator for test fixtures.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// A random homogeneous presentation matrix with `ngens` generators of
/// degree 0 or 1 and `nrels` relations of degree 1..=3.
pub fn random_presentation(r: &R, seed: u64, ngens: usize, nrels: usize) -> GradedMatrix<PrimeField> {
    let mut rng = Lcg(seed);
    let f = r.field();
    let order = r.poly().term_order();
    let twists: Vec<i32> = (0..ngens).map(|_| rng.below(2) as i32).collect();
    let mut cols = Vec::new();
    let mut degs = Vec::new();
    for _ in 0..nrels {
        let d = twists.iter().max().copied().unwrap_or(0) + 1 + rng.below(2) as i32;
        let mut terms = Vec::new();
        for (i, &t) in twists.iter().enumerate() {
            let mons = Monomial::all_of_degree(r.nvars(), (d - t) as u32);
            for m in mons {
                if rng.below(3) == 0 {
                    let c = f.from_i64(rng.below(7) as i64 - 3);
                    terms.push(habw_core::exactalg::Term { mon: m, comp: i as u32, coef: c });
                }
            }
        }
        cols.push(r.reduce_vector(Vector::from_terms(f, order, terms)));
        degs.push(d);
    }
    GradedMatrix::new(twists, degs, cols).unwrap()
}
