mod common;

use common::{matrix, random_presentation, ring};
use habw_core::exactalg::GradedMatrix;
use habw_core::modcalc::{biduality, quotient_by_element, ses_from_cover, split_ses, Module, ModuleMap, ShortExactSequence};
use proptest::prelude::*;

fn hilb(m: &Module<habw_core::exactalg::PrimeField>, lo: i64, hi: i64) -> Vec<u64> {
    (lo..=hi).map(|d| m.hilbert_function(d)).collect()
}

#[test]
fn dual_of_free_is_free() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = Module::free(&r, &[0, 2]);
    let d = m.dual();
    assert!(d.is_free());
    let mut t = d.twists().to_vec();
    t.sort();
    assert_eq!(t, [-2, 0]);
}

#[test]
fn dual_of_residue_field_over_line_vanishes() {
    let r = ring(&["x"], &[]);
    assert!(Module::residue_field(&r).dual().is_zero());
}

#[test]
fn dual_of_residue_field_over_dual_numbers() {
    let r = ring(&["x"], &["x^2"]);
    let d = Module::residue_field(&r).dual();
    assert_eq!(d.twists(), [1]);
    assert_eq!(hilb(&d, -1, 3), [0, 0, 1, 0, 0]);
}

#[test]
fn biduality_examples() {
    let r = ring(&["x", "y"], &[]);
    assert!(biduality(&Module::free(&r, &[0, 1])).iso());

    let line = ring(&["x"], &[]);
    let b = biduality(&Module::residue_field(&line));
    assert!(!b.injective);
    assert!(b.surjective);

    let dual_numbers = ring(&["x"], &["x^2"]);
    let b = biduality(&Module::residue_field(&dual_numbers));
    assert!(b.injective && b.surjective);
}

#[test]
fn kernel_and_cokernel_of_identity() {
    let r = ring(&["x", "y"], &["x^2"]);
    let m = Module::cyclic(&r, &r.poly().parse_all(&["y"]).unwrap()).unwrap();
    let id = ModuleMap::identity(&m);
    assert!(id.kernel().0.is_zero());
    assert!(id.cokernel().0.is_zero());
}

#[test]
fn multiplication_by_x_on_plane() {
    let r = ring(&["x", "y"], &[]);
    let x = r.poly().parse("x").unwrap();
    let f = ModuleMap::multiplication(&Module::free(&r, &[0]), &x).unwrap();
    assert!(f.kernel().0.is_zero());
    let c = f.cokernel().0;
    assert_eq!(hilb(&c, 0, 5), [1; 6]);
}

#[test]
fn multiplication_by_x_on_dual_numbers() {
    let r = ring(&["x"], &["x^2"]);
    let x = r.poly().parse("x").unwrap();
    let f = ModuleMap::multiplication(&Module::free(&r, &[0]), &x).unwrap();
    let (k, incl) = f.kernel();
    assert_eq!(hilb(&k, 0, 3), [0, 0, 1, 0]);
    assert_eq!(incl.matrix().format(&r), "[x]");
    let c = f.cokernel().0;
    assert_eq!(hilb(&c, 0, 3), [1, 0, 0, 0]);
}

#[test]
fn zero_tests() {
    let r = ring(&["x", "y"], &[]);
    assert!(Module::zero(&r).is_zero());
    let id = GradedMatrix::identity(r.field(), &[0, 1]);
    assert!(Module::coker(&r, id).is_zero());
    assert!(!Module::residue_field(&r).is_zero());
}

#[test]
fn pruning_removes_unit_relations() {
    let r = ring(&["x", "y"], &[]);
    let a = matrix(&r, &[0, 1], &[1, 2], &[&["x", "y^2"], &["1", "x"]]);
    let m = Module::coker(&r, a);
    assert_eq!(m.num_generators(), 1);
    assert_eq!(m.twists(), [0]);
    // e1 = -x e0, so the second relation becomes (y^2 - x^2) e0
    assert_eq!(m.relations().format(&r), "[-x^2 + y^2]");
}

#[test]
fn quotient_by_element_examples() {
    let r = ring(&["x", "y"], &[]);
    let x = r.poly().parse("x").unwrap();
    let q = quotient_by_element(&Module::free(&r, &[0]), &x).unwrap();
    assert!(q.nzd_on_ring && q.nzd_on_module);
    assert_eq!(q.ring.krull_dimension(), 1);
    assert!(q.module.is_free());

    let s = ring(&["x", "y"], &["x*y"]);
    let q = quotient_by_element(&Module::free(&s, &[0]), &s.poly().parse("x").unwrap()).unwrap();
    assert!(!q.nzd_on_ring);

    let q = quotient_by_element(&Module::free(&r, &[0, 0]), &x).unwrap();
    assert!(q.nzd_on_module);
    assert_eq!(q.module.num_generators(), 2);
    assert!(q.module.is_free());

    assert!(quotient_by_element(&Module::free(&r, &[0]), &r.poly().parse("3").unwrap()).is_err());
    assert!(quotient_by_element(&Module::free(&r, &[0]), &r.poly().zero()).is_err());
}

#[test]
fn direct_sum_with_zero() {
    let r = ring(&["x", "y"], &["x^2"]);
    let m = Module::residue_field(&r);
    let s = Module::zero(&r).direct_sum(&m).unwrap();
    assert_eq!(hilb(&s, -2, 6), hilb(&m, -2, 6));
}

#[test]
fn cover_of_residue_field() {
    let r = ring(&["x", "y"], &[]);
    let ses = ses_from_cover(&Module::residue_field(&r));
    let k = ses.left();
    assert_eq!(k.twists(), [1, 1]);
    assert_eq!(k.num_relations(), 1);
    assert_eq!(k.relations().source(), [2]);
    assert!(ses.exactness().holds());
    assert!(ses.hilbert_additive(-1, 6));
}

#[test]
fn cover_of_free_module() {
    let r = ring(&["x", "y"], &[]);
    let ses = ses_from_cover(&Module::free(&r, &[0, 3]));
    assert!(ses.left().is_zero());
    assert!(ses.exactness().holds());
}

#[test]
fn exactness_detects_broken_sequences() {
    let r = ring(&["x", "y"], &[]);
    let free = Module::free(&r, &[0]);
    let x = r.poly().parse("x").unwrap();
    let f = ModuleMap::multiplication(&free, &x).unwrap();
    let g = ModuleMap::identity(&free);
    let e = ShortExactSequence::new(f, g).unwrap().exactness();
    assert!(e.injective && e.surjective);
    assert!(!e.composite_zero);
    assert!(!e.holds());
}

#[test]
fn map_must_respect_relations() {
    let r = ring(&["x", "y"], &[]);
    let k = Module::residue_field(&r);
    let free = Module::free(&r, &[0]);
    assert!(ModuleMap::new(k.clone(), free.clone(), GradedMatrix::identity(r.field(), &[0])).is_err());
    assert!(ModuleMap::new(free, k, GradedMatrix::identity(r.field(), &[0])).is_ok());
}

#[test]
fn dual_map_of_multiplication() {
    let r = ring(&["x", "y"], &[]);
    let free = Module::free(&r, &[0]);
    let x = r.poly().parse("x").unwrap();
    let (_, _, d) = ModuleMap::multiplication(&free, &x).unwrap().dual();
    assert_eq!(d.matrix().format(&r), "[x]");
}

fn rings() -> Vec<(Vec<&'static str>, Vec<&'static str>)> {
    vec![
        (vec!["x", "y"], vec![]),
        (vec!["x", "y"], vec!["x^2", "y^2"]),
        (vec!["x", "y"], vec!["x^2", "x*y", "y^2"]),
        (vec!["x", "y", "z"], vec!["x*y - z^2"]),
        (vec!["x", "y", "z"], vec!["x*y"]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn direct_sum_adds_hilbert_functions(seed in any::<u64>(), which in 0usize..5) {
        let (v, g) = &rings()[which];
        let r = ring(v, g);
        let m = Module::coker(&r, random_presentation(&r, seed, 2, 2));
        let n = Module::coker(&r, random_presentation(&r, seed ^ 0x55, 1, 1));
        let s = m.direct_sum(&n).unwrap();
        for d in -1..6 {
            prop_assert_eq!(s.hilbert_function(d), m.hilbert_function(d) + n.hilbert_function(d));
        }
        let ses = split_ses(&m, &n).unwrap();
        prop_assert!(ses.exactness().holds());
    }

    #[test]
    fn cover_sequence_is_exact(seed in any::<u64>(), which in 0usize..5) {
        let (v, g) = &rings()[which];
        let r = ring(v, g);
        let m = Module::coker(&r, random_presentation(&r, seed, 2, 3));
        let ses = ses_from_cover(&m);
        prop_assert!(ses.exactness().holds());
        prop_assert!(ses.hilbert_additive(-1, 6));
    }

    #[test]
    fn minimization_preserves_the_module(seed in any::<u64>(), which in 0usize..5) {
        let (v, g) = &rings()[which];
        let r = ring(v, g);
        let a = random_presentation(&r, seed, 3, 3);
        let raw = habw_core::exactalg::SubmoduleBasis::new(&r, a.target(), a.cols());
        let m = Module::coker(&r, a);
        for d in -1..6 {
            prop_assert_eq!(m.hilbert_function(d), raw.quotient_hilbert_function(d));
        }
        prop_assert!(m.relations().cols().iter().all(|c| c.terms().iter().all(|t| !t.mon.is_one())));
    }

    #[test]
    fn cokernel_zero_iff_surjective(seed in any::<u64>(), which in 0usize..5) {
        let (v, g) = &rings()[which];
        let r = ring(v, g);
        let m = Module::coker(&r, random_presentation(&r, seed, 2, 2));
        let x = r.var((seed % r.nvars() as u64) as usize);
        let f = ModuleMap::multiplication(&m, &x).unwrap();
        let (c, _) = f.cokernel();
        prop_assert_eq!(c.is_zero(), f.is_surjective());
        prop_assert!(ShortExactSequence::from_injection(f.kernel().1).exactness().holds());
    }
}
