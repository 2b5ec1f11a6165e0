//! Ring-level verdicts: socle, Gorenstein, Cohen-Macaulay, irreducibility
//! of the zero ideal and FP-injective dimension over a sample of ideals.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::exactalg::{syzygies, Field, GradedMatrix, Monomial, Polynomial, Ring, SubmoduleBasis, Term, Vector};
use crate::homology::ext_vanishes;
use crate::modcalc::Module;
use crate::rng::Lcg;

use super::depth::ring_depth;
use super::gdim::{gdim, GdimResult, GdimValue};
use super::verdict::{Status, Verdict, Witness};

/// `(0 : m)` as a module, via the kernel of `R -> R(1)^n`, `1 ↦ (x_1..x_n)`.
pub fn socle<F: Field>(ring: &Arc<Ring<F>>) -> Module<F> {
    let n = ring.nvars();
    if n == 0 {
        return Module::free(ring, &[0]);
    }
    let col = GradedMatrix::from_rows(
        ring,
        vec![-1; n],
        vec![0],
        &ring.variables().into_iter().map(|x| vec![x]).collect::<Vec<_>>(),
    )
    .expect("variables have degree one");
    let gens = syzygies(ring, &col);
    Module::ideal(
        ring,
        &gens.into_iter().map(|g| Polynomial::from_vector(g.entry(0))).collect::<Vec<_>>(),
    )
    .expect("socle generators are homogeneous")
}

/// `dim_k (0 : m)` for an artinian ring.
pub fn socle_dimension<F: Field>(ring: &Arc<Ring<F>>) -> Result<usize> {
    let top = ring.top_degree().ok_or(AlgebraError::NotArtinian(ring.krull_dimension()))?;
    let s = socle(ring);
    Ok((0..=top as i64).map(|d| s.hilbert_function(d) as usize).sum())
}

pub struct GorensteinReport {
    pub verdict: Verdict,
    pub gdim_residue_field: GdimResult,
    pub socle_dimension: Option<usize>,
}

/// Gorenstein iff `G-dim k` is finite; artinian rings are cross-checked
/// against a one-dimensional socle.
pub fn is_gorenstein<F: Field>(ring: &Arc<Ring<F>>, bound: usize) -> Result<GorensteinReport> {
    let k = Module::residue_field(ring);
    let g = gdim(&k, bound)?;
    let socle_dimension = if ring.is_artinian() {
        Some(socle_dimension(ring)?)
    } else {
        None
    };
    let verdict = match (g.value, g.certification.is_exact()) {
        (GdimValue::Finite(_), true) => Verdict::yes(Some(bound)),
        (GdimValue::Infinite, _) => {
            let w = match socle_dimension {
                Some(d) => Witness::Socle { dimension: d },
                None => Witness::ResidueFieldGdimInfinite {
                    witness: Box::new(g.witness.clone().expect("infinite G-dimension carries a witness")),
                },
            };
            Verdict::no(w, Some(bound))
        }
        _ => Verdict::undetermined(bound),
    };
    if let Some(d) = socle_dimension {
        let disagree = (verdict.status == Status::True && d != 1) || (verdict.status == Status::False && d == 1);
        if disagree {
            return Err(AlgebraError::Internal(format!(
                "Gorenstein verdict {} disagrees with socle dimension {d}",
                verdict.status.name()
            )));
        }
    }
    Ok(GorensteinReport {
        verdict,
        gdim_residue_field: g,
        socle_dimension,
    })
}

/// `depth R = dim R`.
pub fn is_cohen_macaulay<F: Field>(ring: &Arc<Ring<F>>) -> Result<bool> {
    Ok(ring_depth(ring)? as i64 == ring.krull_dimension())
}

/// For artinian `R`: `(0)` is irreducible iff the socle is one-dimensional.
pub fn zero_ideal_irreducible<F: Field>(ring: &Arc<Ring<F>>) -> Result<Verdict> {
    if !ring.is_artinian() {
        return Err(AlgebraError::NotArtinian(ring.krull_dimension()));
    }
    let d = socle_dimension(ring)?;
    Ok(if d == 1 {
        Verdict::yes(None)
    } else {
        Verdict::no(Witness::Socle { dimension: d }, None)
    })
}

fn row<F: Field>(ring: &Ring<F>, elems: &[&Polynomial<F>]) -> GradedMatrix<F> {
    let degs = elems
        .iter()
        .map(|e| e.homogeneous_degree().map_or(0, |d| d as i32))
        .collect();
    GradedMatrix::from_rows(ring, vec![0], degs, &[elems.iter().map(|e| (*e).clone()).collect()])
        .expect("homogeneous elements")
}

/// `(x) ∩ (y) = 0`.
pub fn principal_intersection_is_zero<F: Field>(ring: &Ring<F>, x: &Polynomial<F>, y: &Polynomial<F>) -> bool {
    let x = ring.reduce(x);
    let y = ring.reduce(y);
    if x.is_zero() || y.is_zero() {
        return true;
    }
    syzygies(ring, &row(ring, &[&x, &y]))
        .iter()
        .all(|s| ring.mul(&Polynomial::from_vector(s.entry(0)), &x).is_zero())
}

/// `(0 : x) + (0 : y) = R`.
pub fn annihilators_span<F: Field>(ring: &Ring<F>, x: &Polynomial<F>, y: &Polynomial<F>) -> bool {
    let x = ring.reduce(x);
    let y = ring.reduce(y);
    if x.is_zero() || y.is_zero() {
        return true;
    }
    let mut gens: Vec<Vector<F>> = syzygies(ring, &row(ring, &[&x]));
    gens.extend(syzygies(ring, &row(ring, &[&y])));
    SubmoduleBasis::new(ring, &[0], &gens).is_everything()
}

/// Outcome of the `(x) ∩ (y) = 0 ⇒ (0:x) + (0:y) = R` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MechanismCheck {
    pub pairs_tested: usize,
    pub pairs_with_zero_intersection: usize,
    pub failures: Vec<(String, String)>,
}

impl MechanismCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the check over pairs of nonzero standard monomials of positive
/// degree and a few seeded linear forms.
pub fn irreducibility_mechanism<F: Field>(ring: &Arc<Ring<F>>, seed: u64) -> Result<MechanismCheck> {
    let top = ring.top_degree().ok_or(AlgebraError::NotArtinian(ring.krull_dimension()))?;
    let poly = ring.poly();
    let f = ring.field();
    let mut elems: Vec<Polynomial<F>> = (1..=top)
        .flat_map(|d| ring.standard_monomials(d))
        .map(|m| poly.term(f.one(), m))
        .collect();
    let mut rng = Lcg::new(seed);
    for _ in 0..4 {
        let terms: Vec<(Vec<u16>, F::Elem)> = (0..ring.nvars())
            .map(|i| {
                let mut e = vec![0u16; ring.nvars()];
                e[i] = 1;
                (e, f.from_i64(rng.range(-3, 3)))
            })
            .collect();
        let l = ring.reduce(&poly.from_terms(terms)?);
        if !l.is_zero() {
            elems.push(l);
        }
    }
    let mut out = MechanismCheck {
        pairs_tested: 0,
        pairs_with_zero_intersection: 0,
        failures: Vec::new(),
    };
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            out.pairs_tested += 1;
            if principal_intersection_is_zero(ring, &elems[i], &elems[j]) {
                out.pairs_with_zero_intersection += 1;
                if !annihilators_span(ring, &elems[i], &elems[j]) {
                    out.failures.push((ring.format(&elems[i]), ring.format(&elems[j])));
                }
            }
        }
    }
    Ok(out)
}

/// Which ideals the FP-injective test runs over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleSpec {
    pub monomial_degree: u32,
    /// Cap on the number of monomial ideals.
    pub monomial_cap: usize,
    pub random_ideals: usize,
    pub random_max_generators: u32,
    pub random_max_degree: u32,
    pub seed: u64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            monomial_degree: 3,
            monomial_cap: 256,
            random_ideals: 32,
            random_max_generators: 3,
            random_max_degree: 3,
            seed: 0,
        }
    }
}

pub struct IdealSample<F: Field> {
    pub ideals: Vec<Vec<Polynomial<F>>>,
    /// Every homogeneous ideal of the ring occurs.
    pub exhaustive: bool,
}

/// The maximal ideal, ideals generated by subsets of the variables,
/// monomial ideals generated in low degree, and seeded random ideals.
pub fn ideal_sample<F: Field>(ring: &Arc<Ring<F>>, spec: &SampleSpec) -> IdealSample<F> {
    let n = ring.nvars();
    let poly = ring.poly();
    let f = ring.field();
    let mut seen = HashSet::new();
    let mut ideals = Vec::new();
    let mut push = |gens: Vec<Polynomial<F>>, ideals: &mut Vec<Vec<Polynomial<F>>>| {
        let gens: Vec<Polynomial<F>> = gens.into_iter().map(|g| ring.reduce(&g)).filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return;
        }
        let key: Vec<String> = gens.iter().map(|g| ring.format(g)).collect();
        if seen.insert(key) {
            ideals.push(gens);
        }
    };
    for mask in (1u32..(1u32 << n)).rev() {
        let gens = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| ring.var(i)).collect();
        push(gens, &mut ideals);
    }
    let mons: Vec<Monomial> = (1..=spec.monomial_degree).flat_map(|d| ring.standard_monomials(d)).collect();
    let mut capped = false;
    let mut count = 0;
    'sizes: for size in 1..=mons.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let antichain = idx
                .iter()
                .all(|&a| idx.iter().all(|&b| a == b || !mons[a].divides(&mons[b])));
            if antichain {
                if count == spec.monomial_cap {
                    capped = true;
                    break 'sizes;
                }
                count += 1;
                push(idx.iter().map(|&a| poly.term(f.one(), mons[a])).collect(), &mut ideals);
            }
            // next combination
            let mut k = size;
            while k > 0 && idx[k - 1] == mons.len() - size + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            for t in k..size {
                idx[t] = idx[t - 1] + 1;
            }
        }
    }
    let mut rng = Lcg::new(spec.seed);
    let mut made = 0;
    let mut attempts = 0;
    while made < spec.random_ideals && attempts < 8 * spec.random_ideals.max(1) && n > 0 {
        attempts += 1;
        let ngens = 1 + rng.below(spec.random_max_generators.max(1));
        let mut gens = Vec::new();
        for _ in 0..ngens {
            let d = 1 + rng.below(spec.random_max_degree.max(1));
            let terms: Vec<Term<F>> = ring
                .standard_monomials(d)
                .into_iter()
                .filter_map(|m| {
                    let c = rng.range(-4, 4);
                    (c != 0).then(|| Term {
                        mon: m,
                        comp: 0,
                        coef: f.from_i64(c),
                    })
                })
                .collect();
            gens.push(Polynomial::from_vector(Vector::from_terms(f, poly.term_order(), terms)));
        }
        let before = ideals.len();
        push(gens, &mut ideals);
        if ideals.len() > before {
            made += 1;
        }
    }
    // with dim R_1 <= 1 every homogeneous ideal is a power of the maximal ideal
    let chain = ring.hilbert_function(1) <= 1;
    let exhaustive = !capped && chain && ring.top_degree().is_some_and(|t| t <= spec.monomial_degree);
    IdealSample { ideals, exhaustive }
}

/// `FP-id_R R <= n`, tested as `Ext^{n+1}(R/I, R) = 0` over the sample.
/// Without an exhaustive sample the best positive answer is UNDETERMINED.
pub fn fp_injective_dim_at_most<F: Field>(ring: &Arc<Ring<F>>, n: usize, sample: &IdealSample<F>) -> Verdict {
    for gens in &sample.ideals {
        let q = Module::cyclic(ring, gens).expect("sample ideals are homogeneous");
        if !ext_vanishes(&q, n + 1) {
            return Verdict::no(
                Witness::Ideal {
                    generators: gens.iter().map(|g| ring.format(g)).collect(),
                    i: n + 1,
                },
                Some(sample.ideals.len()),
            );
        }
    }
    if sample.exhaustive {
        Verdict::yes(Some(sample.ideals.len()))
    } else {
        Verdict::undetermined(sample.ideals.len())
    }
}
