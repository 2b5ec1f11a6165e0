//! Seeded random rings and modules. All randomness goes through [`Lcg`], so a
//! seed names the same module on every platform.

use std::sync::Arc;

use habw_core::exactalg::{Field, GradedMatrix, MonomialOrder, OrderKind, PolyRing, Polynomial, Ring};
use habw_core::modcalc::{is_nonzerodivisor, ses_from_cover, split_ses, Module, ModuleMap, ShortExactSequence};
use habw_core::rng::Lcg;
use habw_core::Result;

/// Rings whose resolutions grow slowly enough for exhaustive sweeps.
pub const RING_PANEL: &[(&[&str], &[&str])] = &[
    (&["x", "y"], &[]),
    (&["x", "y", "z"], &[]),
    (&["x"], &["x^2"]),
    (&["x", "y"], &["x^2", "y^2"]),
    (&["x", "y"], &["x*y"]),
    (&["x", "y"], &["x^2"]),
    (&["x", "y", "z"], &["x^2", "y^2"]),
    (&["x", "y"], &["x^2", "x*y"]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSize {
    pub max_generators: usize,
    pub max_relations: usize,
    /// Largest degree of an entry of the presentation matrix.
    pub max_degree: u32,
}

impl Default for RandomSize {
    fn default() -> Self {
        RandomSize {
            max_generators: 3,
            max_relations: 3,
            max_degree: 2,
        }
    }
}

pub fn panel_ring<F: Field>(field: F, index: usize) -> Result<Arc<Ring<F>>> {
    let (vars, ideal) = RING_PANEL[index % RING_PANEL.len()];
    let poly = PolyRing::new(
        field,
        vars.iter().map(|v| v.to_string()).collect(),
        MonomialOrder::new(OrderKind::DegRevLex),
    )?;
    let gens = poly.parse_all(ideal)?;
    Ring::new(poly, gens)
}

/// Consecutive seeds cycle through the panel.
pub fn random_ring<F: Field>(field: F, seed: u64) -> Result<Arc<Ring<F>>> {
    panel_ring(field, (seed % RING_PANEL.len() as u64) as usize)
}

/// A random homogeneous form of degree `d`, possibly zero.
fn random_form<F: Field>(ring: &Ring<F>, rng: &mut Lcg, d: u32) -> Polynomial<F> {
    let poly = ring.poly();
    let mons = ring.standard_monomials(d);
    if mons.is_empty() || rng.below(3) == 0 {
        return poly.zero();
    }
    let terms = 1 + rng.below(2);
    let mut out = poly.zero();
    for _ in 0..terms {
        let m = mons[rng.below(mons.len() as u32) as usize].clone();
        let c = ring.field().from_i64(rng.range(1, 7));
        out = poly.add(&out, &poly.term(c, m));
    }
    out
}

/// A cokernel of a random homogeneous matrix with entries of positive degree.
pub fn random_module<F: Field>(ring: &Arc<Ring<F>>, seed: u64, size: RandomSize) -> Result<Module<F>> {
    let mut rng = Lcg::new(seed);
    let ngens = 1 + rng.below(size.max_generators as u32) as usize;
    let nrels = rng.below(size.max_relations as u32 + 1) as usize;
    let twists: Vec<i32> = (0..ngens).map(|_| rng.below(2) as i32).collect();
    let top = *twists.iter().max().unwrap_or(&0);
    let mut rows: Vec<Vec<Polynomial<F>>> = vec![Vec::new(); ngens];
    let mut source = Vec::new();
    for _ in 0..nrels {
        let deg = top + 1 + rng.below(size.max_degree) as i32;
        let mut col: Vec<Polynomial<F>> = twists
            .iter()
            .map(|&t| random_form(ring, &mut rng, (deg - t) as u32))
            .collect();
        if col.iter().all(|p| p.is_zero()) {
            let i = rng.below(ngens as u32) as usize;
            let d = (deg - twists[i]) as u32;
            if let Some(m) = ring.standard_monomials(d).first() {
                col[i] = ring.poly().term(ring.field().one(), m.clone());
            } else {
                continue;
            }
        }
        for (row, p) in rows.iter_mut().zip(col) {
            row.push(p);
        }
        source.push(deg);
    }
    let matrix = GradedMatrix::from_rows(ring, twists, source, &rows)?;
    Ok(Module::coker(ring, matrix))
}

/// A random short exact sequence: the cover sequence of a random module,
/// a split sum of two, or multiplication by a regular linear form.
pub fn random_ses<F: Field>(ring: &Arc<Ring<F>>, seed: u64, size: RandomSize) -> Result<ShortExactSequence<F>> {
    let mut rng = Lcg::new(seed ^ 0x5eed);
    let m = random_module(ring, seed, size)?;
    match rng.below(3) {
        0 => Ok(ses_from_cover(&m)),
        1 => {
            let n = random_module(ring, seed.wrapping_add(1 << 32), size)?;
            split_ses(&m, &n)
        }
        _ => {
            for x in ring.variables() {
                if is_nonzerodivisor(&m, &x)? {
                    return Ok(ShortExactSequence::from_injection(ModuleMap::multiplication(&m, &x)?));
                }
            }
            Ok(ses_from_cover(&m))
        }
    }
}

/// The cover sequence `0 -> K -> F -> M -> 0`; its middle term is free.
pub fn random_cover_ses<F: Field>(ring: &Arc<Ring<F>>, seed: u64, size: RandomSize) -> Result<ShortExactSequence<F>> {
    Ok(ses_from_cover(&random_module(ring, seed, size)?))
}
