use habw_core::exactalg::PrimeField;
use habw_core::invariants::{default_bound, gclass_membership};
use habw_core::modcalc::quotient_by_element;
use habw_harness::theorems::{certified_gdim, find_regular_element, verify_ab, Gd};
use habw_harness::*;
use proptest::prelude::*;

fn field() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ab_never_fails_on_random_modules(seed in any::<u64>()) {
        let r = random_ring(field(), seed).unwrap();
        let m = random_module(&r, seed, RandomSize::default()).unwrap();
        let c = verify_ab("M", &m, default_bound(r.nvars())).unwrap();
        prop_assert!(!c.failed(), "{}", c);
    }

    #[test]
    fn random_modules_are_reproducible(seed in any::<u64>()) {
        let r = random_ring(field(), seed).unwrap();
        let a = random_module(&r, seed, RandomSize::default()).unwrap();
        let b = random_module(&r, seed, RandomSize::default()).unwrap();
        prop_assert_eq!(a.describe(), b.describe());
    }

    /// A G-class module stays in the G-class after cutting by a regular element.
    #[test]
    fn gclass_survives_regular_quotients(seed in any::<u64>()) {
        let r = random_ring(field(), seed).unwrap();
        let m = random_module(&r, seed, RandomSize::default()).unwrap();
        let bound = default_bound(r.nvars());
        if m.is_zero() || certified_gdim(&m, bound).unwrap() != Some(Gd::Finite(0)) {
            return Ok(());
        }
        if let Some(x) = find_regular_element(&r).unwrap() {
            let q = quotient_by_element(&m, &x).unwrap();
            if q.nzd_on_module {
                let v = gclass_membership(&q.module, bound);
                prop_assert!(!v.is_false(), "{}", v);
            }
        }
    }
}

#[test]
fn zero_relations_give_a_free_module() {
    let size = RandomSize { max_generators: 3, max_relations: 0, max_degree: 2 };
    for seed in 0..16 {
        let r = random_ring(field(), seed).unwrap();
        assert!(random_module(&r, seed, size).unwrap().relations().cols().is_empty());
    }
}

#[test]
fn seed_zero_matches_the_frozen_corpus_fixture() {
    let r = random_ring(field(), 0).unwrap();
    let m = random_module(&r, 0, RandomSize::default()).unwrap();
    assert_eq!(r.describe(), "GF(32003)[x,y]");
    assert_eq!(m.describe(), "coker [5*x*y; 5*x] degrees (0, 1)");
    let fixture = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/random_seed0.habw")).unwrap();
    assert!(fixture.contains("coker [5*x*y; 5*x] degrees (0, 1)"));
}
