use habw_core::exactalg::PrimeField;
use habw_core::invariants::default_bound;
use habw_harness::theorems::{verify_depth_ses, verify_gdim_ses, verify_horseshoe};
use habw_harness::*;

const SEEDS: u64 = 200;

fn field() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn tally(checks: &[TheoremCheck]) -> (usize, usize) {
    let failed = checks.iter().filter(|c| c.failed()).count();
    let skipped = checks.iter().filter(|c| c.skipped()).count();
    (failed, skipped)
}

fn assert_suite(name: &str, checks: Vec<TheoremCheck>) {
    let (failed, skipped) = tally(&checks);
    for c in checks.iter().filter(|c| c.failed()) {
        eprintln!("{c}");
    }
    assert_eq!(failed, 0, "{name}: failures");
    assert!(skipped * 10 <= checks.len(), "{name}: {skipped} of {} skipped", checks.len());
}

#[test]
fn horseshoe_bounds_hold_on_random_sequences() {
    let checks = (0..SEEDS)
        .map(|seed| {
            let r = random_ring(field(), seed).unwrap();
            let ses = random_ses(&r, seed, RandomSize::default()).unwrap();
            verify_horseshoe(&format!("seed {seed}"), &ses, default_bound(r.nvars())).unwrap()
        })
        .collect();
    assert_suite("horseshoe", checks);
}

#[test]
fn gdim_drops_by_one_along_cover_sequences() {
    let checks = (0..SEEDS)
        .map(|seed| {
            let r = random_ring(field(), seed).unwrap();
            let ses = random_cover_ses(&r, seed, RandomSize::default()).unwrap();
            verify_gdim_ses(&format!("seed {seed}"), &ses, default_bound(r.nvars())).unwrap()
        })
        .collect();
    assert_suite("gdim-ses", checks);
}

#[test]
fn depth_lemma_holds_on_random_sequences() {
    let checks = (0..SEEDS)
        .map(|seed| {
            let r = random_ring(field(), seed).unwrap();
            let ses = random_ses(&r, seed, RandomSize::default()).unwrap();
            verify_depth_ses(&format!("seed {seed}"), &ses).unwrap()
        })
        .collect();
    assert_suite("depth-ses", checks);
}
