use std::sync::OnceLock;

use equivar::*;
use exalg::Form;
use proptest::prelude::*;
use ratlin::{q, qi, Zero};

fn spaces() -> &'static Spaces {
    static S: OnceLock<Spaces> = OnceLock::new();
    S.get_or_init(Spaces::build)
}

fn calibration() -> &'static Calibration {
    static C: OnceLock<Calibration> = OnceLock::new();
    C.get_or_init(|| Calibration::compute(spaces()).unwrap())
}

#[test]
fn g2_has_dimension_14_and_closes() {
    let s = spaces();
    assert_eq!(s.algebra.dim(), 14);
    assert!(s.algebra.closure_residual().is_zero());
    assert!(s.algebra.stabilizer_residual(&s.form).is_zero());
    assert!(G2Algebra::contains(&Form::parse(7, "e12 - e34").unwrap()));
    assert!(!G2Algebra::contains(s.form.contraction(1)));
    assert!(projection_residual(s).is_zero());
}

#[test]
fn space_dimensions() {
    let s = spaces();
    assert_eq!((s.r7_m.dim(), s.r7_g2.dim(), s.r7_s2.dim()), (49, 98, 196));
}

#[test]
fn phi_is_injective_and_psi_splits() {
    let s = spaces();
    let c = rank_certificates(s).unwrap();
    assert_eq!(c.rank_phi, 98);
    assert!(c.phi_injective());
    assert_eq!(c.summand_span_rank, 49);
    assert!(RankCertificate::contained(c.one, c.rank_phi));
    assert!(RankCertificate::contained(c.seven, c.rank_phi));
    assert!(RankCertificate::contained(c.twenty_seven, c.rank_phi));
    assert_eq!(c.fourteen.1, 14);
    assert!(RankCertificate::transversal(c.fourteen, c.rank_phi));
    // Ψ(λ Id) = 0: the identity summand maps to fully skew tensors.
    assert_eq!(c.one.1, 0);
}

#[test]
fn explicit_sigma_solves_the_skew_torsion_equation() {
    let s = spaces();
    assert!(sigma_solution_residual(s).is_zero());
    assert_eq!(sigma0_constant(s), Some(q(2, 3)));
}

#[test]
fn maps_are_equivariant() {
    assert!(equivariance_residual(spaces()).unwrap().is_zero());
}

#[test]
fn calibration_is_scalar_on_irreducibles() {
    let cal = calibration();
    let dims: Vec<usize> = cal.entries.iter().map(|e| e.1).collect();
    assert_eq!(dims, vec![1, 7, 14, 27]);
    assert!(cal.entries[0].2.is_zero());
    let values: std::collections::BTreeSet<_> = cal.entries.iter().map(|e| e.2.clone()).collect();
    assert_eq!(values.len(), 4);
}

#[test]
fn isotypic_decompositions() {
    let s = spaces();
    let cal = calibration();
    let m = casimir_decompose(s, cal, &s.r7_m).unwrap();
    assert!(m.complete() && m.commutator_residual.is_zero());
    assert_eq!(m.irreducibles(), vec![1, 7, 14, 27]);
    let g = casimir_decompose(s, cal, &s.r7_g2).unwrap();
    assert!(g.complete());
    assert_eq!(g.irreducibles(), vec![7, 27, 64]);
    let sym = casimir_decompose(s, cal, &s.r7_s2).unwrap();
    assert!(sym.complete() && sym.commutator_residual.is_zero());
    assert_eq!(sym.irreducibles(), vec![7, 7, 14, 27, 64, 77]);
    let c64 = |r: &IsotypicReport| r.components.iter().find(|c| c.label == "64").map(|c| c.eigenvalue.clone());
    assert_eq!(c64(&g), c64(&sym));
}

#[test]
fn exterior_powers() {
    let s = spaces();
    let cal = calibration();
    let dec = |p| casimir_decompose(s, cal, &exterior_space(p)).unwrap().irreducibles();
    assert_eq!(dec(2), vec![7, 14]);
    assert_eq!(dec(3), vec![1, 7, 27]);
    assert_eq!(dec(4), vec![1, 7, 27]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn projection_lands_in_g2(c in prop::collection::vec(-5i64..=5, 21)) {
        let s = spaces();
        let a = Form::from_terms(7, exalg::ascending(7, 2).into_iter().zip(c.into_iter().map(qi)));
        let p = s.form.pr_g2(&a);
        prop_assert!(G2Algebra::contains(&p));
        prop_assert!(s.algebra.stabilizer_residual(&s.form).is_zero());
        prop_assert!(s.form.act(&p, s.form.omega()).is_zero());
    }

    #[test]
    fn span_coordinates_roundtrip(c in prop::collection::vec(-3i64..=3, 49)) {
        let s = spaces();
        let coeffs: Vec<_> = c.into_iter().map(qi).collect();
        let t = s.r7_m.combine(&coeffs);
        prop_assert_eq!(s.r7_m.coords(&t), Some(coeffs));
    }
}
