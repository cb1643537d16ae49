use clifford::{eigenvalues, GammaRep};
use exalg::{sigma_t, Form};
use liegeom::{parallel_spinors, verify_section2, verify_sl_formula, LieModel};
use proptest::prelude::*;
use ratlin::{q, qi, Rational, Tensor};

fn g2_form() -> Form {
    Form::parse(7, "e127 + e135 - e146 - e236 - e245 + e347 + e567").unwrap()
}

fn heis7() -> LieModel {
    LieModel::from_exprs("heis7", 7, &[(4, "e1^e6 + e3^e7"), (5, "e1^e3 - e6^e7")]).unwrap()
}

fn solv7() -> LieModel {
    LieModel::from_exprs(
        "solv7",
        7,
        &[(3, "e1^e3 - e2^e4"), (4, "e2^e3 + e1^e4"), (5, "-e1^e5 + e2^e6"), (6, "-e2^e5 - e1^e6")],
    )
    .unwrap()
}

fn heis5() -> LieModel {
    LieModel::from_exprs("heis5", 5, &[(5, "2*e1^e2 + 2*e3^e4")]).unwrap()
}

/// Non-unimodular: `ad(e_1)` has trace 6.
fn diag4() -> LieModel {
    LieModel::from_exprs("diag4", 4, &[(2, "e1^e2"), (3, "2*e1^e3"), (4, "3*e1^e4")]).unwrap()
}

fn heis7_torsion() -> Form {
    Form::parse(7, "-e567 + e135 - e347 - e146").unwrap()
}

fn solv7_torsion() -> Form {
    Form::parse(7, "2*e256 - 2*e234").unwrap()
}

fn heis5_torsion() -> Form {
    Form::parse(5, "2*e125 + 2*e345").unwrap()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| qi(x)).collect()
}

#[test]
fn heisenberg_g2_differentials_and_curvature() {
    let m = heis7();
    assert_eq!(m.d(&g2_form()), Form::parse(7, "e1234 + e2467 + e1256 - e2357").unwrap());
    let t = heis7_torsion();
    assert_eq!(t, -m.d(&g2_form()).hodge());
    assert_eq!(m.d(&t), Form::term(7, &[1, 3, 6, 7], qi(-4)));
    let cur = m.curvature(&m.with_torsion(&t).unwrap());
    assert_eq!(cur.ric_diagonal().unwrap(), ints(&[-2, 0, -2, 0, 0, -2, -2]));
    assert_eq!(cur.scal, qi(-8));
    let lc = m.curvature(&m.levi_civita());
    assert_eq!(lc.ric_diagonal().unwrap(), ints(&[-1, 0, -1, 1, 1, -1, -1]));
    let tt = Tensor::from_fn(7, 2, |ix| {
        (1..=7)
            .flat_map(|a| (1..=7).map(move |b| (a, b)))
            .fold(qi(0), |s, (a, b)| s + t.eval(&[ix[0] + 1, a, b]) * t.eval(&[ix[1] + 1, a, b]))
    });
    assert_eq!(tt.as_diagonal().unwrap(), ints(&[4, 0, 4, 4, 4, 4, 4]));
    assert!(m.with_torsion(&t).unwrap().is_parallel(&g2_form()));
}

#[test]
fn heisenberg_spinor_endomorphisms() {
    let m = heis7();
    let t = heis7_torsion();
    let rep = GammaRep::new(7).unwrap();
    let dt = m.d(&t);
    let s = sigma_t(&t).unwrap();
    let a = &dt.scale(&q(1, 4)) + &s.scale(&q(1, 2));
    let b = &dt.scale(&q(3, 4)) - &s.scale(&q(1, 2));
    assert!(eigenvalues(&rep.act_form(&a)).has_real_spectrum(&ints(&[2, -4, 2, 0, 2, 0, 2, -4])));
    assert!(eigenvalues(&rep.act_form(&b)).has_real_spectrum(&ints(&[2, 0, 2, -4, 2, -4, 2, 0])));
    let par = parallel_spinors(&m, &t).unwrap();
    assert_eq!(par.len(), 4);
    let tm = rep.act_form(&t);
    assert!(par.iter().all(|p| clifford::is_zero_spinor(&tm.mul_vec(p))));
}

#[test]
fn solvable_model_values() {
    let m = solv7();
    let w = g2_form();
    assert!(m.codiff(&w).is_zero());
    assert!(m.d(&w.hodge()).is_zero());
    assert_eq!(m.d(&w), Form::parse(7, "2*e1347 - 2*e1567").unwrap());
    let t = solv7_torsion();
    assert!(m.with_torsion(&t).unwrap().is_parallel(&w));
    assert_eq!(m.d(&t), Form::parse(7, "-4*e1256 - 4*e1234").unwrap());
    assert_eq!(m.curvature(&m.with_torsion(&t).unwrap()).scal, qi(-16));
    let rep = GammaRep::new(7).unwrap();
    let s = sigma_t(&t).unwrap();
    let dt = m.d(&t);
    let a = &dt.scale(&q(1, 4)) + &s.scale(&q(1, 2));
    let b = &dt.scale(&q(3, 4)) - &s.scale(&q(1, 2));
    assert!(eigenvalues(&rep.act_form(&a)).has_real_spectrum(&ints(&[4, 4, -2, -2, -2, -2, 0, 0])));
    assert!(eigenvalues(&rep.act_form(&b)).has_real_spectrum(&ints(&[4, 4, 2, 2, 2, 2, -8, -8])));
    let par = parallel_spinors(&m, &t).unwrap();
    assert_eq!(par.len(), 2);
    let tm = rep.act_form(&t);
    assert!(par.iter().all(|p| clifford::is_zero_spinor(&tm.mul_vec(p))));
    assert!(m.is_unimodular());
}

#[test]
fn sasakian_heisenberg_values() {
    let m = heis5();
    let t = heis5_torsion();
    let conn = m.with_torsion(&t).unwrap();
    assert!(conn.is_parallel(&t));
    assert!(conn.is_parallel(&Form::blade(5, &[5])));
    assert!(m.codiff(&t).is_zero());
    let cur = m.curvature(&conn);
    assert_eq!(cur.ric_diagonal().unwrap(), ints(&[-4, -4, -4, -4, 0]));
    let lc = m.curvature(&m.levi_civita());
    assert_eq!(lc.ric_diagonal().unwrap(), ints(&[-2, -2, -2, -2, 4]));
    assert_eq!(parallel_spinors(&m, &t).unwrap().len(), 2);
}

#[test]
fn section_two_identities_on_fixed_models() {
    for (m, t) in [(heis7(), heis7_torsion()), (solv7(), solv7_torsion()), (heis5(), heis5_torsion())] {
        for r in verify_section2(&m, &t).unwrap() {
            assert!(r.holds(), "{} on {}: {}", r.id, m.label(), r.residual);
        }
    }
    let flat = LieModel::abelian(5);
    for r in verify_section2(&flat, &Form::blade(5, &[1, 2, 3])).unwrap() {
        assert!(r.holds(), "{}", r.id);
    }
}

#[test]
fn dirac_identities_on_fixed_models() {
    for (m, t, dim) in [(heis7(), heis7_torsion(), 4), (solv7(), solv7_torsion(), 2), (heis5(), heis5_torsion(), 2)] {
        let r = verify_sl_formula(&m, &t).unwrap();
        assert_eq!(r.square_residual, qi(0), "{}", m.label());
        assert_eq!(r.square_residual_unit_codiff, qi(0), "{}", m.label());
        assert_eq!(r.anticommutator_residual, qi(0), "{}", m.label());
        assert_eq!(r.parallel_dim, dim, "{}", m.label());
        assert_eq!(r.parallel_scalar_residual, qi(0), "{}", m.label());
        assert_eq!(r.parallel_ricci_residual, qi(0), "{}", m.label());
    }
    for n in 5..=7 {
        let r = verify_sl_formula(&LieModel::abelian(n), &Form::zero(n)).unwrap();
        assert_eq!(r.square_residual, qi(0));
        assert_eq!(r.parallel_dim, 1 << (n / 2));
    }
}

fn three_form(n: usize) -> impl Strategy<Value = Form> {
    let k = exalg::ascending(n, 3).len();
    proptest::collection::vec(-2i64..=2, k).prop_map(move |c| {
        let mut it = c.into_iter();
        Form::from_fn(n, 3, |_| qi(it.next().unwrap()))
    })
}

fn any_form(n: usize) -> impl Strategy<Value = Form> {
    (0..=n).prop_flat_map(move |p| {
        let k = exalg::ascending(n, p).len();
        proptest::collection::vec(-2i64..=2, k).prop_map(move |c| {
            let mut it = c.into_iter();
            Form::from_fn(n, p, |_| qi(it.next().unwrap()))
        })
    })
}

fn hodge_codiff(m: &LieModel, a: &Form) -> Form {
    let n = m.dim();
    let p = a.degree().unwrap_or(0);
    let s = if (n * (p + 1) + 1) % 2 == 0 { qi(1) } else { qi(-1) };
    m.d(&a.hodge()).hodge().scale(&s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn section_two_identities_for_arbitrary_torsion(t in three_form(7), which in 0usize..2) {
        let m = if which == 0 { heis7() } else { solv7() };
        for r in verify_section2(&m, &t).unwrap() {
            prop_assert!(r.holds(), "{}: {}", r.id, r.residual);
        }
    }

    #[test]
    fn section_two_identities_on_non_unimodular_model(t in three_form(4)) {
        for r in verify_section2(&diag4(), &t).unwrap() {
            prop_assert!(r.holds(), "{}: {}", r.id, r.residual);
        }
    }

    #[test]
    fn dirac_square_identity_for_arbitrary_torsion(t in three_form(5)) {
        let r = verify_sl_formula(&heis5(), &t).unwrap();
        prop_assert_eq!(r.square_residual, qi(0));
        prop_assert_eq!(r.anticommutator_residual, qi(0));
        prop_assert_eq!(r.codiff_vanishes, r.square_residual_unit_codiff == qi(0));
    }

    #[test]
    fn dirac_square_identity_on_non_unimodular_model(t in three_form(4)) {
        let r = verify_sl_formula(&diag4(), &t).unwrap();
        prop_assert_eq!(r.square_residual, qi(0));
        prop_assert_eq!(r.anticommutator_residual, qi(0));
    }

    #[test]
    fn codifferential_matches_star_d_star(a in any_form(5), b in any_form(7), c in any_form(4)) {
        prop_assert_eq!(diag4().codiff(&c), hodge_codiff(&diag4(), &c));
        prop_assert_eq!(heis5().codiff(&a), hodge_codiff(&heis5(), &a));
        prop_assert_eq!(solv7().codiff(&b), hodge_codiff(&solv7(), &b));
        prop_assert_eq!(heis7().codiff(&b), hodge_codiff(&heis7(), &b));
    }
}
