//! Degree-zero maps between presented modules, kernels, cokernels and the
//! biduality map `M -> M**`.

use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::exactalg::{syzygies, Field, GradedMatrix, Lifter, Polynomial, Ring, SubmoduleBasis, Vector};

use super::module::Module;

/// A homogeneous map of degree zero, given on free covers.
pub struct ModuleMap<F: Field> {
    source: Module<F>,
    target: Module<F>,
    matrix: GradedMatrix<F>,
}

impl<F: Field> Clone for ModuleMap<F> {
    fn clone(&self) -> Self {
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.clone(),
        }
    }
}

impl<F: Field> ModuleMap<F> {
    /// Checks shapes, degrees and that relations map into relations.
    pub fn new(source: Module<F>, target: Module<F>, matrix: GradedMatrix<F>) -> Result<Self> {
        if !source.same_ring(&target) {
            return Err(AlgebraError::DimensionMismatch("maps must stay over one ring".into()));
        }
        if matrix.target() != target.twists() || matrix.source() != source.twists() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "matrix {:?} <- {:?} does not fit {:?} <- {:?}",
                matrix.target(),
                matrix.source(),
                target.twists(),
                source.twists()
            )));
        }
        let f = ModuleMap { source, target, matrix };
        let sb = f.target.submodule_basis();
        let ring = f.ring();
        for a in f.source.relations().cols() {
            if !sb.contains(&f.matrix.apply(ring, a)) {
                return Err(AlgebraError::InvalidElement("map does not respect relations".into()));
            }
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Module<F>, target: Module<F>, matrix: GradedMatrix<F>) -> Self {
        ModuleMap { source, target, matrix }
    }

    pub fn identity(m: &Module<F>) -> Self {
        Self::new_unchecked(m.clone(), m.clone(), GradedMatrix::identity(m.ring().field(), m.twists()))
    }

    pub fn zero(source: &Module<F>, target: &Module<F>) -> Self {
        let z = GradedMatrix::zero_map(target.twists().to_vec(), source.twists().to_vec());
        Self::new_unchecked(source.clone(), target.clone(), z)
    }

    /// Multiplication by a homogeneous `x` of degree `e`, as `M(-e) -> M`.
    pub fn multiplication(m: &Module<F>, x: &Polynomial<F>) -> Result<Self> {
        let e = x
            .homogeneous_degree()
            .ok_or_else(|| AlgebraError::NotHomogeneous(m.ring().format(x)))? as i32;
        let src = m.shift_degrees(e);
        let id = GradedMatrix::identity(m.ring().field(), m.twists());
        let mat = id.scale_by(m.ring(), x, e);
        Ok(Self::new_unchecked(src, m.clone(), mat))
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        self.source.ring()
    }

    pub fn source(&self) -> &Module<F> {
        &self.source
    }

    pub fn target(&self) -> &Module<F> {
        &self.target
    }

    pub fn matrix(&self) -> &GradedMatrix<F> {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap<F>) -> Result<Self> {
        if other.target.twists() != self.source.twists() {
            return Err(AlgebraError::DimensionMismatch("maps do not compose".into()));
        }
        let m = self.matrix.compose(self.ring(), &other.matrix)?;
        Ok(Self::new_unchecked(other.source.clone(), self.target.clone(), m))
    }

    /// True iff the map is zero on `M`.
    pub fn is_zero_map(&self) -> bool {
        let sb = self.target.submodule_basis();
        self.matrix.cols().iter().all(|c| sb.contains(c))
    }

    /// Generators, in the source cover, of the preimage of the target's
    /// relations.
    fn preimage_generators(&self) -> Vec<Vector<F>> {
        let ring = self.ring();
        let n = self.source.num_generators() as u32;
        let big = self.matrix.hconcat(self.target.relations()).expect("same target");
        let field = ring.field();
        let order = ring.poly().term_order();
        syzygies(ring, &big)
            .into_iter()
            .map(|s| s.map_comps(field, order, |c| (c < n).then_some(c)))
            .filter(|s| !s.is_zero())
            .collect()
    }

    /// `ker f` with its inclusion into the source.
    pub fn kernel(&self) -> (Module<F>, ModuleMap<F>) {
        let gens = self.preimage_generators();
        let (k, incl) = Module::subquotient(self.ring(), self.source.twists(), &gens, self.source.relations().cols());
        let map = Self::new_unchecked(k.clone(), self.source.clone(), incl);
        (k, map)
    }

    /// `coker f` with the projection from the target.
    pub fn cokernel(&self) -> (Module<F>, ModuleMap<F>) {
        let big = self.matrix.hconcat(self.target.relations()).expect("same target");
        let (c, tr) = Module::minimized(self.ring(), big);
        let map = Self::new_unchecked(self.target.clone(), c.clone(), tr.to_new);
        (c, map)
    }

    /// `im f` as a submodule of the target, with its inclusion.
    pub fn image(&self) -> (Module<F>, ModuleMap<F>) {
        let (m, incl) = Module::subquotient(
            self.ring(),
            self.target.twists(),
            self.matrix.cols(),
            self.target.relations().cols(),
        );
        let map = Self::new_unchecked(m.clone(), self.target.clone(), incl);
        (m, map)
    }

    pub fn is_injective(&self) -> bool {
        let sb = self.source.submodule_basis();
        self.preimage_generators().iter().all(|g| sb.contains(g))
    }

    pub fn is_surjective(&self) -> bool {
        let mut gens = self.matrix.cols().to_vec();
        gens.extend(self.target.relations().cols().iter().cloned());
        SubmoduleBasis::new(self.ring(), self.target.twists(), &gens).is_everything()
    }

    /// `f*: N* -> M*` between the duals computed by `Module::dual_with_generators`.
    pub fn dual(&self) -> (Module<F>, Module<F>, ModuleMap<F>) {
        let ring = self.ring();
        let field = ring.field();
        let order = ring.poly().term_order();
        let (ms, km) = self.source.dual_with_generators();
        let (ns, kn) = self.target.dual_with_generators();
        let phit = self.matrix.transpose(field, order);
        let mut lifter = Lifter::new(ring, &km);
        let cols: Vec<Vector<F>> = kn
            .cols()
            .iter()
            .map(|c| {
                let img = phit.apply(ring, c);
                lifter.lift(&img).expect("composition with f is a homomorphism of M")
            })
            .collect();
        let mat = GradedMatrix::new(ms.twists().to_vec(), ns.twists().to_vec(), cols).expect("degree-zero dual map");
        (ns.clone(), ms.clone(), Self::new_unchecked(ns, ms, mat))
    }
}

/// The three-part verdict on `M -> M**`.
pub struct Biduality<F: Field> {
    pub map: ModuleMap<F>,
    pub injective: bool,
    pub surjective: bool,
}

impl<F: Field> Biduality<F> {
    pub fn iso(&self) -> bool {
        self.injective && self.surjective
    }
}

/// The canonical map `M -> M**`, `m ↦ (φ ↦ φ(m))`.
pub fn biduality<F: Field>(m: &Module<F>) -> Biduality<F> {
    let ring = m.ring();
    let field = ring.field();
    let order = ring.poly().term_order();
    let (mstar, k) = m.dual_with_generators();
    let (mss, k2) = mstar.dual_with_generators();
    // row i of K is the evaluation at the i-th generator, a vector of G*
    let rows = k.transpose(field, order);
    let mut lifter = Lifter::new(ring, &k2);
    let cols: Vec<Vector<F>> = rows
        .cols()
        .iter()
        .map(|r| lifter.lift(r).expect("evaluation lies in the bidual"))
        .collect();
    let mat = GradedMatrix::new(mss.twists().to_vec(), m.twists().to_vec(), cols).expect("degree-zero evaluation map");
    let map = ModuleMap::new_unchecked(m.clone(), mss, mat);
    let injective = map.is_injective();
    let surjective = map.is_surjective();
    Biduality { map, injective, surjective }
}

/// `0 -> L -f-> M -g-> N -> 0`, not necessarily exact until checked.
pub struct ShortExactSequence<F: Field> {
    pub f: ModuleMap<F>,
    pub g: ModuleMap<F>,
}

/// Which exactness conditions hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exactness {
    pub injective: bool,
    pub surjective: bool,
    pub composite_zero: bool,
    pub middle: bool,
}

impl Exactness {
    pub fn holds(&self) -> bool {
        self.injective && self.surjective && self.composite_zero && self.middle
    }
}

impl<F: Field> ShortExactSequence<F> {
    pub fn new(f: ModuleMap<F>, g: ModuleMap<F>) -> Result<Self> {
        if f.target.twists() != g.source.twists() || !f.source.same_ring(&g.target) {
            return Err(AlgebraError::DimensionMismatch("maps do not compose".into()));
        }
        Ok(ShortExactSequence { f, g })
    }

    /// Completes an injection `f` by its cokernel.
    pub fn from_injection(f: ModuleMap<F>) -> Self {
        let (_, g) = f.cokernel();
        ShortExactSequence { f, g }
    }

    pub fn left(&self) -> &Module<F> {
        &self.f.source
    }

    pub fn middle(&self) -> &Module<F> {
        &self.f.target
    }

    pub fn right(&self) -> &Module<F> {
        &self.g.target
    }

    pub fn exactness(&self) -> Exactness {
        let injective = self.f.is_injective();
        let surjective = self.g.is_surjective();
        let gf = self.g.compose(&self.f).expect("composable by construction");
        let composite_zero = gf.is_zero_map();
        // ker g ⊆ im f + relations of M
        let (_, kincl) = self.g.kernel();
        let mut span = self.f.matrix.cols().to_vec();
        span.extend(self.middle().relations().cols().iter().cloned());
        let sb = SubmoduleBasis::new(self.f.ring(), self.middle().twists(), &span);
        let middle = kincl.matrix.cols().iter().all(|c| sb.contains(c));
        Exactness {
            injective,
            surjective,
            composite_zero,
            middle,
        }
    }

    /// `dim L_d - dim M_d + dim N_d = 0` for `d` in `lo..=hi`.
    pub fn hilbert_additive(&self, lo: i64, hi: i64) -> bool {
        (lo..=hi).all(|d| {
            self.left().hilbert_function(d) + self.right().hilbert_function(d) == self.middle().hilbert_function(d)
        })
    }
}

/// `0 -> K -> F_0 -> M -> 0` for the minimal free cover.
pub fn ses_from_cover<F: Field>(m: &Module<F>) -> ShortExactSequence<F> {
    let ring = m.ring();
    let f0 = Module::free(ring, m.twists());
    let (k, incl) = Module::subquotient(ring, m.twists(), m.relations().cols(), &[]);
    let f = ModuleMap::new_unchecked(k, f0.clone(), incl);
    let g = ModuleMap::new_unchecked(f0, m.clone(), GradedMatrix::identity(ring.field(), m.twists()));
    ShortExactSequence { f, g }
}

/// `0 -> L -> L ⊕ N -> N -> 0`.
pub fn split_ses<F: Field>(l: &Module<F>, n: &Module<F>) -> Result<ShortExactSequence<F>> {
    let m = l.direct_sum(n)?;
    let field = l.ring().field();
    let a = l.num_generators() as u32;
    let inc = GradedMatrix::new(
        m.twists().to_vec(),
        l.twists().to_vec(),
        (0..a).map(|i| Vector::unit(field, i)).collect(),
    )?;
    let proj = GradedMatrix::new(
        n.twists().to_vec(),
        m.twists().to_vec(),
        (0..m.num_generators() as u32)
            .map(|i| if i < a { Vector::zero() } else { Vector::unit(field, i - a) })
            .collect(),
    )?;
    Ok(ShortExactSequence {
        f: ModuleMap::new_unchecked(l.clone(), m.clone(), inc),
        g: ModuleMap::new_unchecked(m, n.clone(), proj),
    })
}

/// `M/xM` over `R/(x)` with non-zero-divisor flags.
pub struct QuotientByElement<F: Field> {
    pub ring: Arc<Ring<F>>,
    pub module: Module<F>,
    pub nzd_on_ring: bool,
    pub nzd_on_module: bool,
}

/// True iff `x` is a non-zero-divisor on `M`.
pub fn is_nonzerodivisor<F: Field>(m: &Module<F>, x: &Polynomial<F>) -> Result<bool> {
    Ok(ModuleMap::multiplication(m, x)?.is_injective())
}

pub fn quotient_by_element<F: Field>(m: &Module<F>, x: &Polynomial<F>) -> Result<QuotientByElement<F>> {
    let ring = m.ring();
    let x = ring.reduce(x);
    match x.homogeneous_degree() {
        None if x.is_zero() => return Err(AlgebraError::InvalidElement("cannot divide out zero".into())),
        None => return Err(AlgebraError::NotHomogeneous(ring.format(&x))),
        Some(0) => return Err(AlgebraError::InvalidElement(format!("{} is a unit", ring.format(&x)))),
        Some(_) => {}
    }
    let nzd_on_ring = is_nonzerodivisor(&Module::free(ring, &[0]), &x)?;
    let nzd_on_module = is_nonzerodivisor(m, &x)?;
    let quot = ring.quotient(std::slice::from_ref(&x))?;
    let module = m.change_ring(&quot)?;
    Ok(QuotientByElement {
        ring: quot,
        module,
        nzd_on_ring,
        nzd_on_module,
    })
}
