//! Homogeneous Buchberger algorithm for submodules of `S^r`, optionally
//! modulo `I * S^r`, with Gebauer-Moeller pair pruning and normal selection.
//!
//! The same engine computes syzygies: generators are extended by tracking
//! components placed in a lower block of the term order, and every S-pair
//! whose reduction leaves the first block is recorded as a syzygy.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::Arc;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use super::vector::{merge_axpy, Term, TermOrder, Vector};

struct Elem<F: Field> {
    v: Vector<F>,
    lead_mon: Monomial,
    lead_comp: u32,
    deg: i32,
    /// `g * e_j` with `g` from the defining ideal's basis.
    quotient: bool,
    /// All terms live in one component, so the product criterion applies.
    single_comp: bool,
    redundant: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    alive: bool,
}

pub(crate) struct GbEngine<F: Field> {
    field: F,
    order: TermOrder,
    twists: Vec<i32>,
    split: u32,
    ideal: Arc<Vec<Vector<F>>>,
    elems: Vec<Elem<F>>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    comp_pairs: Vec<Vec<usize>>,
    heap: BinaryHeap<Reverse<(i32, usize)>>,
    pending: BinaryHeap<Reverse<(i32, usize)>>,
    pending_vecs: Vec<Option<Vector<F>>>,
    syzygies: Vec<Vector<F>>,
}

impl<F: Field> GbEngine<F> {
    /// `twists` lists generator degrees of every component; components at or
    /// above `split` are tracking components. `ideal` is a Groebner basis of
    /// the defining ideal (rank-one vectors) whose multiples of first-block
    /// unit vectors are included in the module.
    pub fn new(field: &F, mono: &MonomialOrder, twists: Vec<i32>, split: usize, ideal: Arc<Vec<Vector<F>>>) -> Self {
        let order = TermOrder::with_split(mono.clone(), split as u32);
        let mut eng = GbEngine {
            field: field.clone(),
            order,
            split: split as u32,
            ideal,
            elems: Vec::new(),
            by_comp: vec![Vec::new(); split],
            pairs: Vec::new(),
            comp_pairs: vec![Vec::new(); split],
            heap: BinaryHeap::new(),
            pending: BinaryHeap::new(),
            pending_vecs: Vec::new(),
            syzygies: Vec::new(),
            twists,
        };
        let ideal_ref = eng.ideal.clone();
        for j in 0..split as u32 {
            for g in ideal_ref.iter() {
                let v = g.into_comp(j);
                let lt = v.lead().expect("nonzero ideal generator");
                let deg = lt.mon.degree() as i32 + eng.twists[j as usize];
                let idx = eng.elems.len();
                eng.elems.push(Elem {
                    lead_mon: lt.mon,
                    lead_comp: j,
                    v,
                    deg,
                    quotient: true,
                    single_comp: true,
                    redundant: false,
                });
                eng.by_comp[j as usize].push(idx);
            }
        }
        eng
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Queues a homogeneous generator; it is processed in degree order.
    pub fn add_generator(&mut self, v: Vector<F>) {
        if v.is_zero() {
            return;
        }
        let deg = v.degree(&self.twists).expect("generators must be homogeneous");
        let idx = self.pending_vecs.len();
        self.pending_vecs.push(Some(v));
        self.pending.push(Reverse((deg, idx)));
    }

    /// Runs Buchberger until every pending pair or generator of degree at most
    /// `max_deg` (all, if `None`) has been processed.
    pub fn run(&mut self, max_deg: Option<i32>) {
        loop {
            let next_pair = loop {
                match self.heap.peek() {
                    Some(Reverse((_, p))) if !self.pairs[*p].alive => {
                        self.heap.pop();
                    }
                    Some(Reverse((d, _))) => break Some(*d),
                    None => break None,
                }
            };
            let next_gen = self.pending.peek().map(|Reverse((d, _))| *d);
            let take_gen = match (next_gen, next_pair) {
                (None, None) => return,
                (Some(g), Some(p)) => g <= p,
                (Some(_), None) => true,
                (None, Some(_)) => false,
            };
            let d = if take_gen { next_gen.unwrap() } else { next_pair.unwrap() };
            if let Some(m) = max_deg {
                if d > m {
                    return;
                }
            }
            let v = if take_gen {
                let Reverse((_, idx)) = self.pending.pop().unwrap();
                self.pending_vecs[idx].take().unwrap()
            } else {
                let Reverse((_, p)) = self.heap.pop().unwrap();
                self.pairs[p].alive = false;
                self.s_vector(p)
            };
            let r = self.top_reduce(v);
            self.absorb(r);
        }
    }

    /// Accepts an already top-reduced vector: inserts it, or records it as a
    /// syzygy when its lead lies in the tracking block.
    pub fn absorb(&mut self, r: Vector<F>) {
        let Some(lt) = r.lead() else { return };
        if lt.comp >= self.split {
            let syz = self.reduce_tracking(r);
            if !syz.is_zero() {
                self.syzygies.push(syz);
            }
        } else {
            let r = r.make_monic(&self.field);
            let r = self.reduce_tracking(r);
            self.insert(r);
        }
    }

    fn s_vector(&self, p: usize) -> Vector<F> {
        let Pair { i, j, lcm, .. } = self.pairs[p];
        let a = &self.elems[i];
        let b = &self.elems[j];
        let ma = a.lead_mon.quotient_of(&lcm);
        let mb = b.lead_mon.quotient_of(&lcm);
        let neg_one = self.field.neg(&self.field.one());
        let sa = a.v.mul_monomial(&ma);
        sa.axpy(&self.field, &self.order, &neg_one, &mb, &b.v)
    }

    fn find_divisor(&self, mon: &Monomial, comp: u32) -> Option<usize> {
        self.by_comp[comp as usize]
            .iter()
            .copied()
            .find(|&k| self.elems[k].lead_mon.divides(mon))
    }

    /// Reduces until the leading term is irreducible or leaves the first block.
    pub fn top_reduce(&self, mut v: Vector<F>) -> Vector<F> {
        loop {
            let Some(lt) = v.lead() else { return v };
            if lt.comp >= self.split {
                return v;
            }
            let Some(k) = self.find_divisor(&lt.mon, lt.comp) else { return v };
            let e = &self.elems[k];
            let m = e.lead_mon.quotient_of(&lt.mon);
            let c = self.field.neg(&lt.coef);
            v = v.axpy(&self.field, &self.order, &c, &m, &e.v);
        }
    }

    /// Fully reduces every first-block term; tracking terms are carried along.
    pub fn normal_form(&self, v: Vector<F>) -> Vector<F> {
        let mut done: Vec<Term<F>> = Vec::new();
        let mut cur = v.into_terms();
        let mut pos = 0;
        while pos < cur.len() {
            let t = &cur[pos];
            if t.comp >= self.split {
                done.extend_from_slice(&cur[pos..]);
                break;
            }
            match self.find_divisor(&t.mon, t.comp) {
                Some(k) => {
                    let e = &self.elems[k];
                    let m = e.lead_mon.quotient_of(&t.mon);
                    let c = self.field.neg(&t.coef);
                    cur = merge_axpy(&self.field, &self.order, &cur[pos..], &c, &m, e.v.terms());
                    pos = 0;
                }
                None => {
                    done.push(t.clone());
                    pos += 1;
                }
            }
        }
        Vector::from_sorted(done)
    }

    /// Normal form of the tracking part modulo the defining ideal.
    fn reduce_tracking(&self, v: Vector<F>) -> Vector<F> {
        if self.ideal.is_empty() || v.terms().iter().all(|t| t.comp < self.split) {
            return v;
        }
        let terms = v.into_terms();
        let cut = terms.iter().position(|t| t.comp >= self.split).unwrap();
        let mut head = terms;
        let tail = head.split_off(cut);
        let tail = reduce_mod_ideal(&self.field, &self.order, &self.ideal, Vector::from_sorted(tail));
        head.extend(tail.into_terms());
        Vector::from_sorted(head)
    }

    fn insert(&mut self, h: Vector<F>) {
        let lt = h.lead().unwrap();
        let (hmon, hcomp) = (lt.mon, lt.comp);
        let hdeg = h.degree(&self.twists).expect("homogeneous");
        let h_single = h.terms().iter().all(|t| t.comp == hcomp);
        let hidx = self.elems.len();

        // Gebauer-Moeller: prune old pairs whose lcm is properly covered by h.
        for &p in &self.comp_pairs[hcomp as usize] {
            let pr = &self.pairs[p];
            if !pr.alive || !hmon.divides(&pr.lcm) {
                continue;
            }
            let li = self.elems[pr.i].lead_mon.lcm(&hmon);
            let lj = self.elems[pr.j].lead_mon.lcm(&hmon);
            if li != pr.lcm && lj != pr.lcm {
                self.pairs[p].alive = false;
            }
        }
        self.comp_pairs[hcomp as usize].retain(|&p| self.pairs[p].alive);

        // Candidate new pairs (g, h).
        struct Cand {
            g: usize,
            lcm: Monomial,
            coprime: bool,
        }
        let mut cands: Vec<Cand> = self.by_comp[hcomp as usize]
            .iter()
            .map(|&g| {
                let e = &self.elems[g];
                let valid_product = (e.single_comp && h_single) && e.lead_mon.is_coprime(&hmon);
                Cand {
                    g,
                    lcm: e.lead_mon.lcm(&hmon),
                    coprime: valid_product,
                }
            })
            .collect();
        cands.sort_by_key(|c| (c.lcm.degree(), c.g));
        let mut kept: Vec<Cand> = Vec::new();
        for idx in 0..cands.len() {
            let c = &cands[idx];
            let dominated = !c.coprime
                && (cands[idx + 1..].iter().any(|o| o.lcm.divides(&c.lcm))
                    || kept.iter().any(|o| o.lcm.divides(&c.lcm)));
            if !dominated {
                kept.push(Cand {
                    g: c.g,
                    lcm: c.lcm,
                    coprime: c.coprime,
                });
            }
        }
        for c in kept.into_iter().filter(|c| !c.coprime) {
            let deg = c.lcm.degree() as i32 + self.twists[hcomp as usize];
            let p = self.pairs.len();
            self.pairs.push(Pair {
                i: c.g,
                j: hidx,
                lcm: c.lcm,
                alive: true,
            });
            self.comp_pairs[hcomp as usize].push(p);
            self.heap.push(Reverse((deg, p)));
        }

        // Elements whose lead is a multiple of h's lead are no longer needed
        // for reduction or new pairs.
        let elems = &mut self.elems;
        self.by_comp[hcomp as usize].retain(|&g| {
            if hmon.divides(&elems[g].lead_mon) {
                elems[g].redundant = true;
                false
            } else {
                true
            }
        });
        self.elems.push(Elem {
            v: h,
            lead_mon: hmon,
            lead_comp: hcomp,
            deg: hdeg,
            quotient: false,
            single_comp: h_single,
            redundant: false,
        });
        self.by_comp[hcomp as usize].push(hidx);
    }

    /// Tracking-only vectors found so far, shifted to start at component 0.
    pub fn take_syzygies(&mut self) -> Vec<Vector<F>> {
        let split = self.split;
        std::mem::take(&mut self.syzygies)
            .into_iter()
            .map(|v| v.map_comps(&self.field, &TermOrder::new(self.order.mono.clone()), |c| Some(c - split)))
            .collect()
    }

    /// Non-redundant basis elements, quotient multiples excluded when
    /// `with_quotient` is false.
    pub fn basis(&self, with_quotient: bool) -> Vec<Vector<F>> {
        self.elems
            .iter()
            .filter(|e| !e.redundant && (with_quotient || !e.quotient))
            .map(|e| e.v.clone())
            .collect()
    }

    /// Leading monomials of the minimal basis, per first-block component.
    pub fn leading_terms(&self) -> Vec<Vec<Monomial>> {
        self.by_comp
            .iter()
            .map(|ks| ks.iter().map(|&k| self.elems[k].lead_mon).collect())
            .collect()
    }

    /// The reduced basis: minimal, monic, tails fully reduced, sorted by
    /// increasing leading term. Only meaningful without tracking components.
    pub fn reduced_basis(&self, with_quotient: bool) -> Vec<Vector<F>> {
        let mut idx: Vec<usize> = self.by_comp.iter().flatten().copied().collect();
        idx.sort_by(|&a, &b| {
            let (ea, eb) = (&self.elems[a], &self.elems[b]);
            self.order.cmp(&ea.lead_mon, ea.lead_comp, &eb.lead_mon, eb.lead_comp)
        });
        idx.into_iter()
            .filter(|&k| with_quotient || !self.elems[k].quotient)
            .map(|k| {
                let e = &self.elems[k];
                let mut terms = e.v.terms().to_vec();
                let head = terms.remove(0);
                let tail = self.normal_form(Vector::from_sorted(terms));
                let mut out = vec![head];
                out.extend(tail.into_terms());
                Vector::from_sorted(out)
            })
            .collect()
    }

    #[allow(dead_code)]
    pub fn max_degree(&self) -> Option<i32> {
        self.elems.iter().filter(|e| !e.redundant).map(|e| e.deg).max()
    }
}

/// Full normal form of every term of `v` modulo the ideal with Groebner basis
/// `ideal` (rank-one vectors), component by component.
pub(crate) fn reduce_mod_ideal<F: Field>(field: &F, order: &TermOrder, ideal: &[Vector<F>], v: Vector<F>) -> Vector<F> {
    if ideal.is_empty() {
        return v;
    }
    let mut done: Vec<Term<F>> = Vec::new();
    let mut cur = v.into_terms();
    let mut pos = 0;
    while pos < cur.len() {
        let t = &cur[pos];
        let hit = ideal.iter().find(|g| g.lead().unwrap().mon.divides(&t.mon));
        match hit {
            Some(g) => {
                let glt = g.lead().unwrap();
                let m = glt.mon.quotient_of(&t.mon);
                let inv = field.inv(&glt.coef).unwrap();
                let c = field.neg(&field.mul(&t.coef, &inv));
                let shifted = g.into_comp(t.comp);
                cur = merge_axpy(field, order, &cur[pos..], &c, &m, shifted.terms());
                pos = 0;
            }
            None => {
                done.push(t.clone());
                pos += 1;
            }
        }
    }
    Vector::from_sorted(done)
}
