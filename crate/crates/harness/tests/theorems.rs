use std::sync::Arc;

use habw_core::exactalg::{MonomialOrder, OrderKind, PolyRing, PrimeField, Ring};
use habw_core::invariants::{default_bound, SampleSpec};
use habw_core::modcalc::{is_nonzerodivisor, ses_from_cover, split_ses, Module, ModuleMap, ShortExactSequence};
use habw_harness::theorems::*;
use habw_harness::{Outcome, TheoremId};

type R = Arc<Ring<PrimeField>>;

fn ring(vars: &[&str], ideal: &[&str]) -> R {
    let poly = PolyRing::new(
        PrimeField::new(32003).unwrap(),
        vars.iter().map(|v| v.to_string()).collect(),
        MonomialOrder::new(OrderKind::DegRevLex),
    )
    .unwrap();
    let gens = poly.parse_all(ideal).unwrap();
    Ring::new(poly, gens).unwrap()
}

fn cyclic(r: &R, gens: &[&str]) -> Module<PrimeField> {
    Module::cyclic(r, &r.poly().parse_all(gens).unwrap()).unwrap()
}

fn elem(r: &R, s: &str) -> habw_core::exactalg::Polynomial<PrimeField> {
    r.poly().parse(s).unwrap()
}

fn bound(r: &R) -> usize {
    default_bound(r.nvars())
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Oracle: `dim_k k[x_1..x_n]_d`.
fn poly_hf(n: i64, d: i64) -> i64 {
    if d < 0 {
        0
    } else {
        binom(d + n - 1, n - 1)
    }
}

/// Oracle: the Koszul complex on `c` linear forms resolves `R/(forms)` over
/// `k[x_1..x_n]`, so its Hilbert function is an alternating binomial sum.
fn koszul_hf(n: i64, c: i64, d: i64) -> i64 {
    (0..=c).map(|i| (-1i64).pow(i as u32) * binom(c, i) * poly_hf(n, d - i)).sum()
}

#[test]
fn ab_on_free_module() {
    let r = ring(&["x", "y", "z"], &[]);
    let c = verify_ab("R", &Module::free(&r, &[0]), bound(&r)).unwrap();
    assert!(c.passed(), "{c}");
    assert!(c.detail.contains("depth M = 3, gdim M = 0"), "{c}");
}

#[test]
fn ab_on_regular_sequence_quotient() {
    let r = ring(&["x", "y", "z"], &[]);
    let m = cyclic(&r, &["x", "y"]);
    for d in 0..8 {
        assert_eq!(m.hilbert_function(d) as i64, koszul_hf(3, 2, d));
    }
    let c = verify_ab("R/(x,y)", &m, bound(&r)).unwrap();
    assert!(c.passed() && c.detail.contains("depth M = 1, gdim M = 2"), "{c}");
}

#[test]
fn ab_on_residue_field_of_dual_numbers() {
    let r = ring(&["x"], &["x^2"]);
    let c = verify_ab("k", &Module::residue_field(&r), bound(&r)).unwrap();
    assert!(c.passed() && c.detail.contains("depth M = 0, gdim M = 0, depth R = 0"), "{c}");
}

#[test]
fn ab_is_vacuous_for_infinite_gdim() {
    let r = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
    let c = verify_ab("k", &Module::residue_field(&r), bound(&r)).unwrap();
    assert!(c.passed() && c.detail.contains("infinite"), "{c}");
}

#[test]
fn ab_skips_when_the_bound_is_too_small() {
    let r = ring(&["x", "y"], &[]);
    let c = verify_ab("k", &Module::residue_field(&r), 1).unwrap();
    assert!(c.skipped(), "{c}");
}

#[test]
fn change_of_rings_annihilated_branch() {
    let r = ring(&["x", "y"], &[]);
    let c = verify_change_of_rings("R/(x)", &cyclic(&r, &["x"]), &elem(&r, "x"), bound(&r)).unwrap();
    assert_eq!(c.theorem, TheoremId::ChangeOfRings1);
    assert!(c.passed() && c.detail.contains("gdim_R M = 1, gdim_R/(x) M = 0"), "{c}");
}

#[test]
fn change_of_rings_regular_branch() {
    let r = ring(&["x", "y", "z"], &[]);
    let c = verify_change_of_rings("R/(x,y)", &cyclic(&r, &["x", "y"]), &elem(&r, "z"), bound(&r)).unwrap();
    assert_eq!(c.theorem, TheoremId::ChangeOfRings3);
    assert!(c.passed() && c.detail.contains("gdim_R M/xM = 3"), "{c}");

    let line = ring(&["x"], &[]);
    let c = verify_change_of_rings("R", &Module::free(&line, &[0]), &elem(&line, "x"), 4).unwrap();
    assert!(c.passed() && c.detail.contains("gdim_R M/xM = 1"), "{c}");
}

#[test]
fn change_of_rings_preconditions_skip() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = Module::residue_field(&r);
    let zero_divisor = verify_change_of_rings("k", &m, &elem(&r, "x"), bound(&r)).unwrap();
    assert!(zero_divisor.skipped(), "{zero_divisor}");
    let unit = verify_change_of_rings("k", &m, &elem(&r, "1"), bound(&r)).unwrap();
    assert!(unit.skipped(), "{unit}");
    let inhomogeneous = verify_change_of_rings("k", &m, &elem(&r, "x + y^2"), bound(&r)).unwrap();
    assert!(inhomogeneous.skipped(), "{inhomogeneous}");

    let s = ring(&["x", "y"], &[]);
    let mixed = cyclic(&s, &["x*y"]);
    let neither = verify_change_of_rings("R/(xy)", &mixed.direct_sum(&cyclic(&s, &["x"])).unwrap(), &elem(&s, "y"), 8).unwrap();
    assert!(neither.skipped(), "{neither}");
}

#[test]
fn horseshoe_on_split_free_sequence() {
    let r = ring(&["x", "y"], &[]);
    let f = Module::free(&r, &[0]);
    let ses = split_ses(&f, &f).unwrap();
    let c = verify_horseshoe("F + F", &ses, bound(&r)).unwrap();
    assert!(c.passed() && c.detail == "gdim L = 0, gdim M = 0, gdim N = 0", "{c}");
}

#[test]
fn horseshoe_boundary_case_on_cover_of_residue_field() {
    let r = ring(&["x", "y"], &[]);
    let ses = ses_from_cover(&Module::residue_field(&r));
    let c = verify_horseshoe("cover of k", &ses, bound(&r)).unwrap();
    assert!(c.passed() && c.detail == "gdim L = 1, gdim M = 0, gdim N = 2", "{c}");
    let g = verify_gdim_ses("cover of k", &ses, bound(&r)).unwrap();
    assert!(g.passed(), "{g}");
}

#[test]
fn non_exact_input_is_rejected() {
    let r = ring(&["x", "y"], &[]);
    let f = Module::free(&r, &[0]);
    let x = ModuleMap::multiplication(&Module::free(&r, &[0]), &elem(&r, "x")).unwrap();
    let wrong = ShortExactSequence::new(x, ModuleMap::zero(&f, &f)).unwrap();
    assert!(verify_horseshoe("bad", &wrong, 6).is_err());
    assert!(verify_depth_ses("bad", &wrong).is_err());
}

#[test]
fn depth_lemma_on_maximal_ideal() {
    let r = ring(&["x", "y"], &[]);
    let ses = ses_from_cover(&Module::residue_field(&r));
    let c = verify_depth_ses("0 -> m -> R -> k -> 0", &ses).unwrap();
    assert!(c.passed() && c.detail == "depth L = 1, depth M = 2, depth N = 0", "{c}");
}

#[test]
fn depth_lemma_vacuous_case() {
    let r = ring(&["x", "y"], &[]);
    let k = Module::residue_field(&r);
    let c = verify_depth_ses("k + k", &split_ses(&k, &k).unwrap()).unwrap();
    assert!(c.passed() && c.detail.contains("hypothesis not met"), "{c}");
}

#[test]
fn gorenstein_quotient_by_a_square() {
    let r = ring(&["x", "y"], &[]);
    let c = verify_gorenstein_quotient(&r, Some(&elem(&r, "x^2")), bound(&r)).unwrap();
    assert!(c.passed() && c.detail == "R: TRUE; R/(x): TRUE", "{c}");
    let p = ring(&["x", "y", "z"], &[]);
    assert!(verify_gorenstein_quotient(&p, Some(&elem(&p, "z")), bound(&p)).unwrap().passed());
}

#[test]
fn gorenstein_quotient_skips_depth_zero() {
    let r = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
    let c = verify_gorenstein_quotient(&r, None, bound(&r)).unwrap();
    assert!(c.skipped(), "{c}");
}

#[test]
fn gorenstein_quotient_on_non_gorenstein_ring() {
    let r = ring(&["x", "y", "z"], &["x*y", "x*z", "y*z"]);
    let c = verify_gorenstein_quotient(&r, None, 6).unwrap();
    assert!(c.passed() && c.detail.starts_with("R: FALSE") && c.detail.contains("R/(x): FALSE (socle dimension 2)"), "{c}");
}

#[test]
fn regular_element_search_falls_back_to_the_sum() {
    let r = ring(&["x", "y"], &["x*y"]);
    let x = find_regular_element(&r).unwrap().unwrap();
    assert_eq!(r.format(&x), "x + y");
    assert!(is_nonzerodivisor(&Module::free(&r, &[0]), &x).unwrap());
}

#[test]
fn fpid_on_gorenstein_panel() {
    let spec = SampleSpec::default();
    for (vars, ideal) in [(&["x"][..], &["x^2"][..]), (&["x", "y"], &["x^2", "y^2"])] {
        let r = ring(vars, ideal);
        let c = verify_gor_fpid(&r, bound(&r), &spec).unwrap();
        assert!(c.passed(), "{c}");
    }
    let fat = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
    let c = verify_gor_fpid(&fat, bound(&fat), &spec).unwrap();
    assert!(c.passed() && c.detail.contains("FALSE (Ext^1"), "{c}");
}

#[test]
fn irreducibility_controls() {
    let g = ring(&["x", "y"], &["x^2", "y^2"]);
    let c = verify_irreducibility(&g, bound(&g), 0).unwrap();
    assert!(c.passed() && c.detail.contains("socle dimension 1"), "{c}");
    let fat = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
    let c = verify_irreducibility(&fat, bound(&fat), 0).unwrap();
    assert!(c.passed() && c.detail.contains("socle dimension 2"), "{c}");
    assert!(!c.detail.contains(", 0 failed"), "the mechanism must fail on the control: {c}");
}

#[test]
fn rx_sequences_are_exact() {
    let line = ring(&["t"], &[]);
    assert!(verify_rx_ses("k", &cyclic(&line, &["t"]), "t").unwrap().passed());
    let plane = ring(&["x", "t"], &[]);
    for gens in [&["t - x"][..], &["x", "t"]] {
        let c = verify_rx_ses("M", &cyclic(&plane, gens), "t").unwrap();
        assert!(c.passed(), "{c}");
    }
}

#[test]
fn rx_sequence_needs_a_free_variable() {
    let r = ring(&["x", "t"], &["t^2"]);
    let c = verify_rx_ses("k", &Module::residue_field(&r), "t").unwrap();
    assert!(c.skipped(), "{c}");
    assert!(verify_rx_ses("k", &Module::residue_field(&r), "w").unwrap().skipped());
}

#[test]
fn direct_limit_truncations_are_gorenstein() {
    let c = verify_direct_limit_truncations(PrimeField::new(32003).unwrap(), 3).unwrap();
    assert!(c.passed() && c.detail == "R_1: TRUE, R_2: TRUE, R_3: TRUE", "{c}");
}

#[test]
fn outcomes_render_reasons() {
    let r = ring(&["x", "y"], &[]);
    let c = verify_ab("k", &Module::residue_field(&r), 1).unwrap();
    assert_eq!(c.outcome, Outcome::Skipped("gdim undetermined at bound 1".into()));
    assert!(c.to_string().starts_with("SKIPPED AB [k over "), "{c}");
}
