use exalg::{ascending, Form};
use g2kit::*;
use liegeom::LieModel;
use proptest::prelude::*;
use ratlin::{q, qi, Rational, Zero};

fn heis7() -> LieModel {
    LieModel::from_exprs("heis7", 7, &[(4, "e16 + e37"), (5, "e13 - e67")]).unwrap()
}

fn solv7() -> LieModel {
    LieModel::from_exprs("solv7", 7, &[(3, "e13 - e24"), (4, "e23 + e14"), (5, "-e15 + e26"), (6, "-e25 - e16")])
        .unwrap()
}

/// `de_k = a_k e1 ∧ e_k` for `k ≥ 2`.
fn diagonal(a: [i64; 6]) -> LieModel {
    let ex: Vec<(usize, String)> = (2..=7).map(|k| (k, format!("{}*e1^e{}", a[k - 2], k))).collect();
    let refs: Vec<(usize, &str)> = ex.iter().map(|(k, s)| (*k, s.as_str())).collect();
    LieModel::from_exprs("diag", 7, &refs).unwrap()
}

fn f(s: &str) -> Form {
    Form::parse(7, s).unwrap()
}

fn all_hold(rows: &[liegeom::IdentityResidual]) {
    for r in rows {
        assert!(r.holds(), "{}: {} residual {}", r.id, r.statement, r.residual);
    }
}

#[test]
fn heisenberg_is_pure_27() {
    let s = G2Structure::canonical(heis7()).unwrap();
    let c = s.classify().unwrap();
    assert!(c.is_pure_27());
    assert!(s.codiff_omega().is_zero());
    let t = s.torsion_form().unwrap();
    assert_eq!(t, -&f("e567 - e135 + e347 + e146"));
    let parts = s.form().project3(&t).unwrap();
    assert!(parts.one.is_zero() && parts.seven.is_zero());
    assert_eq!(s.model().d(&t), f("-4*e1367"));
}

#[test]
fn solvable_model_torsion_and_ricci() {
    let s = G2Structure::canonical(solv7()).unwrap();
    let c = s.classify().unwrap();
    assert!(c.is_cocalibrated() && c.lambda.is_zero() && c.admits_skew_connection());
    assert!(s.d_omega().wedge(s.form().star_omega()).is_zero());
    let t = s.torsion_form().unwrap();
    assert_eq!(t, f("2*e256 - 2*e234"));
    assert_eq!(s.model().d(&t), f("-4*e1256 - 4*e1234"));
    let ric = s.ricci_via_dt(&t).unwrap();
    assert_eq!(ric.trace(), qi(-16));
}

#[test]
fn ricci_formula_matches_curvature() {
    for m in [heis7(), solv7(), diagonal([1, 1, 1, 1, 1, 1]), LieModel::abelian(7)] {
        let s = G2Structure::canonical(m.clone()).unwrap();
        let t = s.torsion_form().unwrap();
        let cur = m.curvature(&m.with_torsion(&t).unwrap());
        assert_eq!(s.ricci_via_dt(&t).unwrap(), cur.ric_matrix(), "{}", m.label());
        assert!(s.scalar_balance(&t).unwrap().iter().all(Zero::is_zero));
        assert!(s.riemannian_ricci_residual(&t).unwrap().is_zero(), "{}", m.label());
    }
    let s = G2Structure::canonical(heis7()).unwrap();
    let t = s.torsion_form().unwrap();
    let d: Vec<Rational> = [-2, 0, -2, 0, 0, -2, -2].into_iter().map(qi).collect();
    assert_eq!(
        s.ricci_via_dt(&t).unwrap(),
        ratlin::Matrix::from_fn(7, 7, |i, j| if i == j { d[i].clone() } else { qi(0) })
    );
}

#[test]
fn decomposition_identities_hold_on_models() {
    all_hold(&constant_identities(&G2Form::canonical()));
    for m in [heis7(), solv7(), diagonal([1, 1, 1, 1, 1, 1]), diagonal([1, 2, 3, 4, 5, 6]), LieModel::abelian(7)] {
        let rows = d_omega_decomposition(&G2Structure::canonical(m).unwrap()).unwrap();
        all_hold(&rows);
    }
}

#[test]
fn hyperbolic_model_has_vector_type() {
    let s = G2Structure::canonical(diagonal([1, 1, 1, 1, 1, 1])).unwrap();
    let c = s.classify().unwrap();
    assert_eq!(c.beta, vec![qi(4), qi(0), qi(0), qi(0), qi(0), qi(0), qi(0)]);
    assert!(c.lambda.is_zero() && c.gamma27.is_zero() && !c.is_cocalibrated());
    let conn = s.characteristic_connection().unwrap();
    assert!(conn.is_parallel(s.omega()));
    assert!(matches!(ricci_flat_conditions(&s, &s.torsion_form().unwrap()), Err(G2Error::NotCocalibrated)));
}

#[test]
fn nonzero_fourteen_component_has_no_skew_connection() {
    let s = G2Structure::canonical(diagonal([1, 2, 3, 4, 5, 6])).unwrap();
    assert!(!s.classify().unwrap().admits_skew_connection());
    assert!(matches!(s.torsion_form(), Err(G2Error::NoSkewConnection { .. })));
}

#[test]
fn abelian_structure_is_parallel() {
    let s = G2Structure::canonical(LieModel::abelian(7)).unwrap();
    let c = s.classify().unwrap();
    assert!(c.is_parallel() && c.obstruction14.is_zero());
    assert!(s.torsion_form().unwrap().is_zero());
    let r = ricci_flat_conditions(&s, &Form::zero(7)).unwrap();
    assert!(r.ricci_vanishes && r.closed_and_coclosed && r.cubic_equation && r.wedge_identity);
}

#[test]
fn ricci_flat_conditions_fail_together_on_examples() {
    for m in [heis7(), solv7()] {
        let s = G2Structure::canonical(m).unwrap();
        let r = ricci_flat_conditions(&s, &s.torsion_form().unwrap()).unwrap();
        assert!(r.consistent() && !r.ricci_vanishes);
    }
}

#[test]
fn nearly_parallel_values() {
    let r = nearly_parallel_algebra(&qi(6));
    all_hold(&r.rows);
    assert_eq!(r.quarter_tt, q(3, 2));
    assert_eq!(r.dt_pairing, qi(12));
    assert_eq!(r.ric_g, q(27, 2));
    let zero = nearly_parallel_algebra(&qi(0));
    assert!(zero.quarter_tt.is_zero() && zero.dt_pairing.is_zero() && zero.ric_g.is_zero());
}

fn coeffs(p: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, ascending(7, p).len())
}

fn form_of(p: usize, c: &[i64]) -> Form {
    Form::from_terms(7, ascending(7, p).into_iter().zip(c.iter().map(|&x| qi(x))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn two_form_projection_is_an_orthogonal_split(c in coeffs(2)) {
        let g = G2Form::canonical();
        let a = form_of(2, &c);
        let (seven, fourteen) = g.project2(&a).unwrap();
        prop_assert_eq!(&(&seven + &fourteen), &a);
        prop_assert_eq!(g.omega().wedge(&seven).hodge(), seven.scale(&qi(2)));
        prop_assert_eq!(g.omega().wedge(&fourteen).hodge(), -&fourteen);
        prop_assert!(seven.inner(&fourteen).is_zero());
        prop_assert_eq!(g.project2(&seven).unwrap().0, seven);
    }

    #[test]
    fn three_form_projection_is_an_orthogonal_split(c in coeffs(3)) {
        let g = G2Form::canonical();
        let a = form_of(3, &c);
        let p = g.project3(&a).unwrap();
        prop_assert_eq!(&(&(&p.one + &p.seven) + &p.twenty_seven), &a);
        prop_assert!(p.twenty_seven.wedge(g.omega()).is_zero());
        prop_assert!(p.twenty_seven.wedge(g.star_omega()).is_zero());
        prop_assert!(p.one.inner(&p.seven).is_zero() && p.seven.inner(&p.twenty_seven).is_zero());
        prop_assert_eq!(g.project3(&p.seven).unwrap().seven, p.seven);
    }
}

#[test]
fn contraction_of_star_omega_is_in_lambda7() {
    let g = G2Form::canonical();
    let a = g.star_contraction(1).clone();
    let p = g.project3(&a).unwrap();
    assert_eq!(p.seven, a);
    assert!(g.project3(g.omega()).unwrap().seven.is_zero());
}
