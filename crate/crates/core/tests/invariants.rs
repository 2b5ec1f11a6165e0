mod common;

use common::{random_presentation, ring};
use habw_core::invariants::{
    default_bound, depth, depth_ext, depth_koszul, fp_injective_dim_at_most, gclass_membership, gdim, ideal_sample,
    irreducibility_mechanism, is_cohen_macaulay, is_gorenstein, projective_dimension, ring_depth, socle_dimension,
    zero_ideal_irreducible, Certification, GdimValue, PdReason, PdValue, SampleSpec, Status, Witness,
};
use habw_core::modcalc::Module;
use habw_core::AlgebraError;
use proptest::prelude::*;

#[test]
fn depth_examples() {
    for (v, g) in [(vec!["x"], vec!["x^2"]), (vec!["x", "y"], vec![]), (vec!["x", "y", "z"], vec!["x*y"])] {
        let r = ring(&v, &g);
        assert_eq!(depth(&Module::residue_field(&r)).unwrap(), 0);
    }
    let r = ring(&["x", "y"], &[]);
    assert_eq!(depth(&Module::free(&r, &[0])).unwrap(), 2);
    let s = ring(&["x", "y"], &["x^2", "x*y"]);
    assert_eq!(depth(&Module::free(&s, &[0])).unwrap(), 0);
    assert!(matches!(depth(&Module::zero(&r)), Err(AlgebraError::ZeroModule(_))));
}

#[test]
fn pd_examples() {
    let r = ring(&["x", "y"], &[]);
    assert_eq!(projective_dimension(&Module::free(&r, &[0, 1]), 8).unwrap().value, PdValue::Finite(0));
    assert_eq!(projective_dimension(&Module::residue_field(&r), 8).unwrap().value, PdValue::Finite(2));
    let s = ring(&["x"], &["x^2"]);
    let pd = projective_dimension(&Module::residue_field(&s), 6).unwrap();
    assert_eq!(pd.value, PdValue::Infinite);
    assert_eq!(pd.reason, PdReason::Periodic);
    let t = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
    let pd = projective_dimension(&Module::residue_field(&t), 6).unwrap();
    assert_eq!(pd.value, PdValue::Infinite);
    assert_eq!(pd.reason, PdReason::DepthBound);
    assert_eq!(projective_dimension(&Module::residue_field(&r), 1).unwrap().value, PdValue::Undetermined);
}

#[test]
fn gclass_examples() {
    let r = ring(&["x", "y"], &[]);
    assert!(gclass_membership(&Module::free(&r, &[0, 2]), 8).is_true());
    let v = gclass_membership(&Module::residue_field(&r), 8);
    assert_eq!(v.status, Status::False);
    assert_eq!(v.witness, Some(Witness::ExtNonzero { i: 2 }));
    let s = ring(&["x"], &["x^2"]);
    assert!(gclass_membership(&Module::residue_field(&s), 6).is_true());
}

#[test]
fn gdim_examples() {
    let r = ring(&["x", "y", "z"], &[]);
    let m = Module::cyclic(&r, &r.poly().parse_all(&["x", "y"]).unwrap()).unwrap();
    let g = gdim(&m, default_bound(3)).unwrap();
    assert_eq!(g.value, GdimValue::Finite(2));
    assert_eq!(g.certification, Certification::ExactPd);

    let s = ring(&["x"], &["x^2"]);
    let g = gdim(&Module::residue_field(&s), default_bound(1)).unwrap();
    assert_eq!(g.value, GdimValue::Finite(0));
    assert_eq!(g.certification, Certification::ExactSyzygy);

    let t = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
    let g = gdim(&Module::residue_field(&t), default_bound(2)).unwrap();
    assert_eq!(g.value, GdimValue::Infinite);
    assert!(g.witness.is_some());

    let z = gdim(&Module::zero(&r), 4).unwrap();
    assert!(z.zero_module);
    assert_eq!(z.value, GdimValue::Finite(0));
}

#[test]
fn gdim_with_tiny_bound_is_undetermined() {
    let r = ring(&["x", "y"], &[]);
    let g = gdim(&Module::residue_field(&r), 1).unwrap();
    assert_eq!(g.value, GdimValue::Undetermined);
    assert_eq!(g.certification, Certification::Bounded);
}

/// Independent oracle: `Ext^i(k, R)` over `k[x,y]/(x^2,xy,y^2)` is nonzero
/// for every `i`, and so is `Ext^1` of every syzygy of `k`.
#[test]
fn residue_field_over_trivial_extension_oracle() {
    let t = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
    let k = Module::residue_field(&t);
    for i in 0..=8 {
        assert!(!habw_core::homology::ext_vanishes(&k, i), "Ext^{i}");
    }
    for j in 0..6 {
        let w = gclass_membership(&habw_core::homology::syzygy(&k, j), 4);
        assert_eq!(w.witness, Some(Witness::ExtNonzero { i: 1 }));
    }
}

#[test]
fn fp_injective_examples() {
    let s = ring(&["x"], &["x^2"]);
    let sample = ideal_sample(&s, &SampleSpec::default());
    assert!(sample.exhaustive);
    assert!(fp_injective_dim_at_most(&s, 0, &sample).is_true());

    let l = ring(&["x"], &[]);
    let v = fp_injective_dim_at_most(&l, 0, &ideal_sample(&l, &SampleSpec::default()));
    assert_eq!(v.status, Status::False);
    assert_eq!(v.witness, Some(Witness::Ideal { generators: vec!["x".into()], i: 1 }));

    let t = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
    let v = fp_injective_dim_at_most(&t, 0, &ideal_sample(&t, &SampleSpec::default()));
    assert_eq!(v.witness, Some(Witness::Ideal { generators: vec!["x".into(), "y".into()], i: 1 }));

    let ci = ring(&["x", "y"], &["x^2", "y^2"]);
    let sample = ideal_sample(&ci, &SampleSpec::default());
    assert!(!sample.exhaustive);
    assert_eq!(fp_injective_dim_at_most(&ci, 0, &sample).status, Status::Undetermined);
}

#[test]
fn ideal_sample_is_reproducible() {
    let r = ring(&["x", "y", "z"], &["x*y"]);
    let a = ideal_sample(&r, &SampleSpec::default());
    let b = ideal_sample(&r, &SampleSpec::default());
    assert_eq!(a.ideals, b.ideals);
    assert_eq!(a.ideals[0].len(), 3);
}

#[test]
fn gorenstein_examples() {
    for (v, g) in [
        (vec!["x"], vec!["x^2"]),
        (vec!["x", "y"], vec!["x^2", "y^2"]),
        (vec!["x", "y", "z"], vec![]),
    ] {
        let r = ring(&v, &g);
        let rep = is_gorenstein(&r, default_bound(v.len())).unwrap();
        assert!(rep.verdict.is_true(), "{v:?}/{g:?}");
    }
    let t = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
    let rep = is_gorenstein(&t, default_bound(2)).unwrap();
    assert_eq!(rep.verdict.witness, Some(Witness::Socle { dimension: 2 }));
    assert_eq!(rep.socle_dimension, Some(2));
}

#[test]
fn cohen_macaulay_examples() {
    assert!(is_cohen_macaulay(&ring(&["x", "y", "z"], &[])).unwrap());
    assert!(!is_cohen_macaulay(&ring(&["x", "y"], &["x^2", "x*y"])).unwrap());
    assert!(is_cohen_macaulay(&ring(&["x", "y"], &["x*y"])).unwrap());
}

#[test]
fn irreducibility_examples() {
    assert!(zero_ideal_irreducible(&ring(&["x"], &["x^3"])).unwrap().is_true());
    let v = zero_ideal_irreducible(&ring(&["x", "y"], &["x^2", "x*y", "y^2"])).unwrap();
    assert_eq!(v.witness, Some(Witness::Socle { dimension: 2 }));
    assert!(zero_ideal_irreducible(&ring(&[], &[])).unwrap().is_true());
    assert!(matches!(zero_ideal_irreducible(&ring(&["x"], &[])), Err(AlgebraError::NotArtinian(1))));
    assert_eq!(socle_dimension(&ring(&["x", "y"], &["x^2", "y^2"])).unwrap(), 1);
}

#[test]
fn irreducibility_mechanism_control() {
    let g = irreducibility_mechanism(&ring(&["x", "y"], &["x^2", "y^2"]), 1).unwrap();
    assert!(g.passed());
    let bad = irreducibility_mechanism(&ring(&["x", "y"], &["x^2", "x*y", "y^2"]), 1).unwrap();
    assert!(!bad.passed());
    assert!(bad.failures.contains(&("x".into(), "y".into())));
}

#[test]
fn depth_routes_and_extended_sequence_agree() {
    let r = ring(&["x", "y", "z"], &["x*z - y^2"]);
    let m = Module::cyclic(&r, &r.poly().parse_all(&["x", "y"]).unwrap()).unwrap();
    let mut seq = r.variables();
    seq.push(r.poly().parse("x + 2*y - z").unwrap());
    let a = depth_koszul(&m, &r.variables()).unwrap();
    assert_eq!(a, depth_koszul(&m, &seq).unwrap());
    assert_eq!(a, depth_ext(&m).unwrap());
}

fn rings() -> Vec<(Vec<&'static str>, Vec<&'static str>)> {
    vec![
        (vec!["x", "y"], vec![]),
        (vec!["x", "y"], vec!["x^2", "y^2"]),
        (vec!["x", "y"], vec!["x^2", "x*y", "y^2"]),
        (vec!["x", "y", "z"], vec!["x*y - z^2"]),
        (vec!["x", "y", "z"], vec!["x*y"]),
        (vec!["x", "y", "z"], vec![]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn auslander_bridger_on_random_modules(seed in any::<u64>(), which in 0usize..6) {
        let (v, g) = &rings()[which];
        let r = ring(v, g);
        let m = Module::coker(&r, random_presentation(&r, seed, 2, 2));
        prop_assume!(!m.is_zero());
        let dr = ring_depth(&r).unwrap();
        let dm = depth(&m).unwrap();
        let gd = gdim(&m, default_bound(r.nvars())).unwrap();
        if let Some(v) = gd.certified() {
            prop_assert_eq!(dm + v, dr);
        }
        if let PdValue::Finite(p) = gd.pd.value {
            prop_assert_eq!(gd.value, GdimValue::Finite(p));
            prop_assert_eq!(dm + p, dr);
        }
        if gclass_membership(&m, default_bound(r.nvars())).is_true() {
            prop_assert_eq!(dm, dr);
        }
    }

    #[test]
    fn depth_routes_agree_on_random_modules(seed in any::<u64>(), which in 0usize..6) {
        let (v, g) = &rings()[which];
        let r = ring(v, g);
        let m = Module::coker(&r, random_presentation(&r, seed, 2, 3));
        prop_assume!(!m.is_zero());
        let mut seq = r.variables();
        seq.push(r.poly().parse(&format!("{} + 3*{}", v[0], v[1])).unwrap());
        let a = depth_koszul(&m, &r.variables()).unwrap();
        prop_assert_eq!(a, depth_ext(&m).unwrap());
        prop_assert_eq!(a, depth_koszul(&m, &seq).unwrap());
    }
}

/// Socle dimension by plain linear algebra: the kernel of
/// `R_d -> R_{d+1}^n`, `r ↦ (x_1 r, .., x_n r)`, summed over degrees.
#[test]
fn socle_dimension_matches_linear_algebra() {
    for (v, g) in [
        (vec!["x"], vec!["x^3"]),
        (vec!["x", "y"], vec!["x^2", "y^2"]),
        (vec!["x", "y"], vec!["x^2", "x*y", "y^2"]),
        (vec!["x", "y", "z"], vec!["x^2", "y^2", "z^2"]),
        (vec!["x", "y", "z"], vec!["x^2", "y^2", "z^2", "x*y*z"]),
        (vec!["x", "y"], vec!["x^2 - y^2", "x*y"]),
    ] {
        let r = ring(&v, &g);
        let col: Vec<Vec<String>> = v.iter().map(|x| vec![x.to_string()]).collect();
        let rows: Vec<Vec<&str>> = col.iter().map(|c| c.iter().map(|s| s.as_str()).collect()).collect();
        let rows: Vec<&[&str]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = common::matrix(&r, &vec![-1; v.len()], &[0], &rows);
        let oracle: usize = (0..8).map(|d| common::kernel_dim(&r, &m, d)).sum();
        assert_eq!(socle_dimension(&r).unwrap(), oracle, "{v:?}/{g:?}");
        let gor = is_gorenstein(&r, default_bound(v.len())).unwrap();
        assert_eq!(gor.verdict.is_true(), oracle == 1, "{v:?}/{g:?}");
    }
}
