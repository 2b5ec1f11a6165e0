mod common;

use common::{kernel_dim, matrix, ring, span_dim};
use habw_core::exactalg::{
    groebner_basis, normal_form, syzygy_matrix, GradedMatrix, MonomialOrder, OrderKind, PolyRing, PrimeField, Rationals, Ring,
    SubmoduleBasis,
};
use habw_core::AlgebraError;
use proptest::prelude::*;

fn xy() -> PolyRing<PrimeField> {
    PolyRing::new(PrimeField::default(), vec!["x".into(), "y".into()], MonomialOrder::default()).unwrap()
}

fn fmt_all(r: &PolyRing<PrimeField>, ps: &[habw_core::exactalg::Polynomial<PrimeField>]) -> Vec<String> {
    ps.iter().map(|p| r.format(p)).collect()
}

#[test]
fn gb_of_unit_ideal() {
    let r = xy();
    let gb = groebner_basis(&r, &[r.one()]).unwrap();
    assert_eq!(fmt_all(&r, &gb), ["1"]);
}

#[test]
fn gb_of_linear_forms() {
    let r = xy();
    let gb = groebner_basis(&r, &r.parse_all(&["x", "y"]).unwrap()).unwrap();
    assert_eq!(fmt_all(&r, &gb), ["x", "y"]);
}

#[test]
fn gb_of_xsquared_xy_is_unchanged() {
    let r = xy();
    let gb = groebner_basis(&r, &r.parse_all(&["x^2", "x*y"]).unwrap()).unwrap();
    assert_eq!(fmt_all(&r, &gb), ["x^2", "x*y"]);
}

#[test]
fn gb_rejects_inhomogeneous_input() {
    let r = xy();
    let err = groebner_basis(&r, &[r.parse("x^2 + y").unwrap()]).unwrap_err();
    assert!(matches!(err, AlgebraError::NotHomogeneous(_)));
}

#[test]
fn gb_rejects_foreign_arity() {
    let r = xy();
    let big = PolyRing::new(PrimeField::default(), vec!["x".into(), "y".into(), "z".into()], MonomialOrder::default()).unwrap();
    let err = groebner_basis(&r, &[big.parse("z").unwrap()]).unwrap_err();
    assert!(matches!(err, AlgebraError::ArityMismatch { .. }));
}

#[test]
fn gb_twisted_cubic() {
    let r = PolyRing::new(
        PrimeField::default(),
        ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
        MonomialOrder::default(),
    )
    .unwrap();
    let gens = r.parse_all(&["a*c - b^2", "b*d - c^2", "a*d - b*c"]).unwrap();
    let gb = groebner_basis(&r, &gens).unwrap();
    assert_eq!(gb.len(), 3);
    for g in &gens {
        assert!(normal_form(&r, g, &gb).is_zero());
    }
}

#[test]
fn normal_form_examples() {
    let r = xy();
    let gb = groebner_basis(&r, &[r.parse("x^2").unwrap()]).unwrap();
    assert_eq!(r.format(&normal_form(&r, &r.parse("x^2 + y").unwrap(), &gb)), "y");
    assert!(normal_form(&r, &r.zero(), &gb).is_zero());
    for g in &gb {
        assert!(normal_form(&r, g, &gb).is_zero());
    }
}

#[test]
fn rationals_keep_exact_coefficients() {
    let r = PolyRing::new(Rationals, vec!["x".into(), "y".into()], MonomialOrder::default()).unwrap();
    let gb = groebner_basis(&r, &r.parse_all(&["2*x^2 + 3*x*y", "3*y^2"]).unwrap()).unwrap();
    let f = r.parse("x^2").unwrap();
    assert_eq!(r.format(&normal_form(&r, &f, &gb)), "-3/2*x*y");
}

#[test]
fn zero_ring_is_refused() {
    let poly = xy();
    let err = Ring::new(poly.clone(), vec![poly.parse("1").unwrap()]).unwrap_err();
    assert_eq!(err, AlgebraError::ZeroRing);
}

#[test]
fn syzygy_of_row_xy() {
    let r = ring(&["x", "y"], &[]);
    let m = matrix(&r, &[0], &[1, 1], &[&["x", "y"]]);
    let s = syzygy_matrix(&r, &m);
    assert_eq!(s.ncols(), 1);
    assert_eq!(s.source(), [2]);
    let col: Vec<String> = (0..2).map(|i| r.format(&s.entry(i, 0))).collect();
    let a = [col[0].as_str(), col[1].as_str()];
    assert!(a == ["y", "-x"] || a == ["-y", "x"], "{a:?}");
}

#[test]
fn syzygy_of_identity_is_zero() {
    let r = ring(&["x", "y"], &[]);
    let id = GradedMatrix::identity(r.field(), &[0, 1]);
    assert_eq!(syzygy_matrix(&r, &id).ncols(), 0);
}

#[test]
fn syzygy_of_x_mod_xsquared() {
    let r = ring(&["x"], &["x^2"]);
    let m = matrix(&r, &[0], &[1], &[&["x"]]);
    let s = syzygy_matrix(&r, &m);
    assert_eq!(s.ncols(), 1);
    assert_eq!(r.format(&s.entry(0, 0)), "x");
}

#[test]
fn hilbert_function_examples() {
    assert_eq!(ring(&["x", "y"], &[]).hilbert_function(1), 2);
    assert_eq!(ring(&["x"], &["x^2"]).hilbert_function(2), 0);
    assert_eq!(ring(&["x", "y"], &["x*y"]).hilbert_function(3), 2);
}

#[test]
fn krull_dimension_examples() {
    assert_eq!(ring(&["x", "y", "z"], &[]).krull_dimension(), 3);
    assert_eq!(ring(&["x", "y"], &["x^2", "x*y", "y^2"]).krull_dimension(), 0);
    assert_eq!(ring(&["x", "y", "z"], &["x*y"]).krull_dimension(), 2);
}

#[test]
fn free_module_hilbert_function_is_shifted() {
    let r = ring(&["x", "y", "z"], &["x*y - z^2"]);
    let twists = [1, 1, 3];
    let sb = SubmoduleBasis::new(&r, &twists, &[]);
    for d in 0..8 {
        let want: u64 = twists.iter().map(|&a| r.hilbert_function(d - a as i64)).sum();
        assert_eq!(sb.quotient_hilbert_function(d), want);
    }
}

#[test]
fn syzygies_complete_against_linear_algebra() {
    let cases: Vec<(Vec<&str>, Vec<&str>, Vec<i32>, Vec<i32>, Vec<Vec<&str>>)> = vec![
        (vec!["x", "y", "z"], vec![], vec![0], vec![1, 1, 1], vec![vec!["x", "y", "z"]]),
        (vec!["x", "y"], vec!["x^2", "x*y", "y^2"], vec![0], vec![1, 1], vec![vec!["x", "y"]]),
        (vec!["x", "y", "z"], vec!["x*y"], vec![0, 0], vec![1, 2], vec![vec!["x", "x*z"], vec!["z", "y^2"]]),
        (vec!["a", "b", "c"], vec!["a^2", "b^2", "c^2"], vec![0], vec![1, 1, 2], vec![vec!["a", "b", "a*c + b*c"]]),
    ];
    for (vars, gens, target, source, rows) in cases {
        let r = ring(&vars, &gens);
        let rows: Vec<&[&str]> = rows.iter().map(|v| v.as_slice()).collect();
        let m = matrix(&r, &target, &source, &rows);
        let s = syzygy_matrix(&r, &m);
        assert!(m.compose(&r, &s).unwrap().is_zero());
        for d in 0..6 {
            assert_eq!(
                span_dim(&r, m.source(), s.cols(), s.source(), d),
                kernel_dim(&r, &m, d),
                "degree {d} over {vars:?}/{gens:?}"
            );
        }
    }
}

fn arb_poly(nvars: usize, deg: u32) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    let mons: Vec<Vec<u16>> = habw_core::exactalg::Monomial::all_of_degree(nvars, deg)
        .iter()
        .map(|m| m.exponents(nvars).to_vec())
        .collect();
    prop::collection::vec((prop::sample::select(mons), -5i64..=5), 1..4)
}

fn build(r: &PolyRing<PrimeField>, terms: Vec<(Vec<u16>, i64)>) -> habw_core::exactalg::Polynomial<PrimeField> {
    use habw_core::exactalg::Field;
    let f = r.field();
    r.from_terms(terms.into_iter().map(|(e, c)| (e, f.from_i64(c))).collect()).unwrap()
}

fn xyz(kind: OrderKind) -> PolyRing<PrimeField> {
    PolyRing::new(
        PrimeField::default(),
        vec!["x".into(), "y".into(), "z".into()],
        MonomialOrder::new(kind),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent_and_differs_by_ideal_element(
        gens in prop::collection::vec(arb_poly(3, 2), 1..4),
        f in arb_poly(3, 3),
        kind in prop::sample::select(vec![OrderKind::DegRevLex, OrderKind::DegLex, OrderKind::Lex]),
    ) {
        let r = xyz(kind);
        let gens: Vec<_> = gens.into_iter().map(|g| build(&r, g)).collect();
        let gb = groebner_basis(&r, &gens).unwrap();
        let f = build(&r, f);
        let nf = normal_form(&r, &f, &gb);
        prop_assert_eq!(&normal_form(&r, &nf, &gb), &nf);
        prop_assert!(normal_form(&r, &r.sub(&f, &nf), &gb).is_zero());
        for g in &gens {
            prop_assert!(normal_form(&r, g, &gb).is_zero());
        }
    }

    #[test]
    fn gb_independent_of_generator_order(
        gens in prop::collection::vec(arb_poly(3, 2), 1..5),
        seed in any::<u64>(),
    ) {
        let r = xyz(OrderKind::DegRevLex);
        let gens: Vec<_> = gens.into_iter().map(|g| build(&r, g)).collect();
        let mut shuffled = gens.clone();
        let n = shuffled.len();
        shuffled.rotate_left((seed as usize) % n);
        if seed & 1 == 1 {
            shuffled.reverse();
        }
        let a = groebner_basis(&r, &gens).unwrap();
        let b = groebner_basis(&r, &shuffled).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn syzygies_annihilate_and_are_complete(
        entries in prop::collection::vec(arb_poly(3, 1), 3),
        quad in prop::option::of(arb_poly(3, 2)),
    ) {
        let names = ["x", "y", "z"];
        let gens: Vec<String> = quad.iter().map(|q| {
            let r = xyz(OrderKind::DegRevLex);
            r.format(&build(&r, q.clone()))
        }).filter(|s| s != "0").collect();
        let gens: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let r = ring(&names, &gens);
        let row: Vec<String> = entries.into_iter().map(|e| r.format(&r.reduce(&build(r.poly(), e)))).collect();
        let row: Vec<&str> = row.iter().map(|s| s.as_str()).collect();
        let m = matrix(&r, &[0], &[1, 1, 1], &[&row]);
        let s = syzygy_matrix(&r, &m);
        prop_assert!(m.compose(&r, &s).unwrap().is_zero());
        for d in 1..5 {
            prop_assert_eq!(span_dim(&r, m.source(), s.cols(), s.source(), d), kernel_dim(&r, &m, d));
        }
    }
}
