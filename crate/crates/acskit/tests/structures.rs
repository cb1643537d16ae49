use acskit::fixtures::*;
use acskit::tables::{diff, form_table, insert, outer, permute, slot, vector_table};
use acskit::{nearly_kaehler_algebra, AcsError, AlmostContact, AlmostHermitian, ContactClass};
use exalg::{parse_form, Form};
use liegeom::LieModel;
use proptest::prelude::*;
use ratlin::{q, qi, Matrix, Rational, Zero};

fn f(dim: usize, s: &str) -> Form {
    parse_form(dim, s).unwrap()
}

fn contact_fixtures() -> Vec<AlmostContact> {
    vec![heis5(), su2(), r_kt(), heis5_twisted(), su2_r2(), abelian_contact(5).unwrap(), abelian_contact(7).unwrap()]
}

fn diag(entries: &[i64]) -> ratlin::Tensor {
    ratlin::Tensor::diag(&entries.iter().map(|&e| qi(e)).collect::<Vec<_>>())
}

#[test]
fn general_identities_hold_on_every_contact_fixture() {
    for s in contact_fixtures() {
        for r in s.general_identities().into_iter().chain(s.nijenhuis_expressions()) {
            assert!(r.holds(), "{} on {}: residual {}", r.id, s.model().label(), r.residual);
        }
    }
}

/// `N = -N(φX,Y,φZ) + η(Z)N(ξ,X,Y) - η(X)N(ξ,φY,φZ)`, the variant that only
/// holds when `N` is skew.
fn skew_only_variant(s: &AlmostContact) -> Rational {
    let p = s.phi();
    let xi = s.xi();
    let n = s.nijenhuis().table().clone();
    let rhs = slot(&slot(&n, 0, p), 2, p)
        .scale(&qi(-1))
        .add(&outer(&insert(&n, 0, xi), &vector_table(xi)))
        .sub(&outer(&vector_table(xi), &slot(&slot(&insert(&n, 0, xi), 0, p), 1, p)));
    diff(&n, &rhs)
}

#[test]
fn fourth_identity_needs_the_nijenhuis_slot_order_when_not_skew() {
    let twisted = heis5_twisted();
    assert!(!twisted.nijenhuis().is_skew());
    assert!(!skew_only_variant(&twisted).is_zero());
    assert!(twisted.general_identities()[4].holds());
    assert!(skew_only_variant(&su2_r2()).is_zero());
}

#[test]
fn sasakian_torsion_is_eta_wedge_d_eta() {
    for s in [heis5(), su2()] {
        assert_eq!(s.classify().unwrap(), ContactClass::Sasakian);
        assert_eq!(s.torsion().unwrap(), s.eta().wedge(&s.d_eta()));
    }
    assert_eq!(heis5().torsion().unwrap(), f(5, "2*e125 + 2*e345"));
    assert_eq!(su2().torsion().unwrap(), f(3, "2*e123"));
}

#[test]
fn normal_torsion_adds_the_phi_differential() {
    let s = r_kt();
    assert!(s.is_normal() && !s.is_contact_metric());
    assert_eq!(s.classify().unwrap(), ContactClass::Normal);
    let t = s.torsion().unwrap();
    assert_eq!(t, &s.eta().wedge(&s.d_eta()) + &s.d_phi_f());
    assert_eq!(t, f(5, "e124"));
}

#[test]
fn non_normal_structure_with_skew_nijenhuis() {
    let s = su2_r2();
    assert_eq!(s.classify().unwrap(), ContactClass::General);
    assert_eq!(s.torsion().unwrap(), f(5, "2*e235"));
    let conn = s.characteristic_connection().unwrap();
    assert!(s.parallelism_defect(&conn).is_zero());
    let chain = s.chain_identities().unwrap();
    assert!(chain.holds());
    assert_eq!(chain.common_value(), &f(5, "-2*e13 + 2*e24"));
    assert!(!s.d_fundamental().is_zero());
}

#[test]
fn characteristic_connection_preserves_the_structure() {
    for s in contact_fixtures() {
        let Ok(conn) = s.characteristic_connection() else { continue };
        assert!(s.parallelism_defect(&conn).is_zero(), "{}", s.model().label());
        let (rank, unknowns) = s.uniqueness_rank();
        assert_eq!(rank, unknowns);
    }
}

#[test]
fn closed_fundamental_form_forces_normality() {
    for s in contact_fixtures() {
        if s.torsion().is_ok() && s.d_fundamental().is_zero() {
            assert!(s.nijenhuis().is_zero(), "{}", s.model().label());
        }
    }
}

#[test]
fn chain_is_zero_on_normal_structures() {
    for s in [heis5(), su2(), r_kt()] {
        let chain = s.chain_identities().unwrap();
        assert!(chain.holds());
        assert!(chain.common_value().is_zero());
    }
}

#[test]
fn obstructions_are_reported() {
    assert!(matches!(heis5_twisted().torsion(), Err(AcsError::NijenhuisNotSkew { .. })));
    assert!(matches!(heis5_twisted().chain_identities(), Err(AcsError::NijenhuisNotSkew { .. })));
    let ak = kt_almost_kaehler();
    assert!(matches!(ak.torsion(), Err(AcsError::AlmostKaehler { .. })));
    assert!(ak.torsion().unwrap_err().is_no_skew_connection());

    // ξ = e1 on the Heisenberg algebra: ad(ξ) is not skew.
    let m = heis5_model();
    let s = AlmostContact::from_frame(m, 1, &[(2, 3, -1), (3, 2, 1), (4, 5, -1), (5, 4, 1)]).unwrap();
    assert!(!s.is_killing());
    assert!(s.torsion().is_err());
}

#[test]
fn invalid_structures_are_rejected() {
    let m = heis5_model();
    assert!(matches!(
        AlmostContact::from_frame(m.clone(), 5, &[(1, 2, -1), (2, 1, 1)]),
        Err(AcsError::NotAlmostContact(_))
    ));
    assert!(matches!(
        AlmostHermitian::from_pairs(LieModel::abelian(4), &[(1, 2)]),
        Err(AcsError::NotAlmostHermitian(_))
    ));
    assert!(matches!(abelian_hermitian(5), Err(AcsError::WrongDimension { .. })));
    assert!(matches!(abelian_contact(4), Err(AcsError::WrongDimension { .. })));
}

#[test]
fn contact_ricci_form_identity() {
    for s in contact_fixtures() {
        let Ok(t) = s.torsion() else { continue };
        let r = s.ricci_form_identity(&t).unwrap();
        assert!(r.holds(), "{}: {}", s.model().label(), r.residual);
    }
    let s = heis5();
    let rf = s.ricci_forms(&s.torsion().unwrap()).unwrap();
    assert_eq!(rf.rho, f(5, "-8*e12 - 8*e34"));
    assert_eq!(rf.omega, f(5, "4*e5"));
    assert_eq!(rf.lambda, f(5, "-16*e12 - 16*e34"));
}

#[test]
fn tanno_deformation() {
    for s in [heis5(), su2()] {
        let same = s.tanno(&qi(1)).unwrap();
        assert_eq!(same.model().differentials(), s.model().differentials());
        let d = s.tanno(&q(4, 3)).unwrap();
        assert!(d.is_sasakian(), "{}", s.model().label());
    }
    // ξ-weights: dη is unchanged, horizontal equations pick up a².
    let d = su2().tanno(&qi(4)).unwrap();
    assert_eq!(d.model().de(3), &f(3, "2*e12"));
    assert_eq!(d.model().de(1), &f(3, "8*e23"));
    assert_eq!(heis5().tanno(&q(9, 4)).unwrap().d_eta(), heis5().d_eta());

    assert!(matches!(r_kt().tanno(&qi(2)), Err(AcsError::NotSasakian)));
    assert!(matches!(heis5().tanno(&qi(-1)), Err(AcsError::BadDeformation(_))));
}

#[test]
fn sasakian_ricci_conditions() {
    let h = heis5().sasakian_ricci().unwrap();
    assert_eq!(h.k, 2);
    assert!(h.tt_residual.is_zero());
    assert!(h.omega_parallel && h.torsion_parallel);
    assert_eq!(h.lambda_coefficient(), Some(qi(-16)));
    assert_eq!(h.ric_nabla, diag(&[-4, -4, -4, -4, 0]));
    assert_eq!(h.ric_g, diag(&[-2, -2, -2, -2, 4]));
    assert!(!h.nabla_condition && !h.riemannian_condition);

    let s = su2().sasakian_ricci().unwrap();
    assert_eq!(s.k, 1);
    assert!(s.tt_residual.is_zero());
    assert_eq!(s.lambda_coefficient(), Some(Rational::zero()));
    assert!(s.lambda.is_zero());
    assert!(s.nabla_condition && s.riemannian_condition);

    assert!(matches!(r_kt().sasakian_ricci(), Err(AcsError::NotSasakian)));
}

#[test]
fn hermitian_fixtures() {
    let kt = kt_hermitian();
    assert!(kt.is_integrable() && !kt.is_kaehler());
    let t = kt.torsion().unwrap();
    assert_eq!(t, f(4, "e124"));
    assert_eq!(kt.d_kaehler(), f(4, "e123"));

    let solv = solv6_hermitian();
    let ts = solv.torsion().unwrap();
    assert_eq!(ts, f(6, "-2*e234 + 2*e256"));
    assert_eq!(solv.special_unitary_criterion(&ts).unwrap(), (true, true));

    for h in [kt, solv, abelian_hermitian(4).unwrap()] {
        let t = h.torsion().unwrap();
        let conn = h.characteristic_connection().unwrap();
        assert!(h.parallelism_defect(&conn).is_zero());
        let (rank, unknowns) = h.uniqueness_rank();
        assert_eq!(rank, unknowns);
        for r in h.torsion_identities(&t) {
            assert!(r.holds(), "{} on {}", r.id, h.model().label());
        }
        assert!(h.ricci_form_identity(&t).unwrap().holds());
    }
    assert!(abelian_hermitian(6).unwrap().torsion().unwrap().is_zero());
}

#[test]
fn nearly_kaehler_pointwise() {
    let r = nearly_kaehler_algebra(&qi(1));
    assert!(r.holds());
    let spectrum: Vec<Rational> = [0, 4, 4, 4].iter().map(|&e| qi(e)).collect();
    assert_eq!(r.half_module_spectra, vec![Some(spectrum.clone()), Some(spectrum)]);
    assert_eq!(r.ricci_kernel_dim, 2);
    assert!(r.ricci_kernel_is_e_plus_minus);

    let flat = nearly_kaehler_algebra(&Rational::zero());
    assert!(flat.holds());
    assert_eq!(flat.ricci_kernel_dim, 8);

    assert!(nearly_kaehler_algebra(&qi(2)).holds());
}

/// Cayley transform `(I - A)(I + A)⁻¹` of a skew matrix: orthogonal and rational.
fn cayley(n: usize, upper: &[i64]) -> Matrix<Rational> {
    let mut a = Matrix::zeros(n, n);
    let mut it = upper.iter();
    for i in 0..n {
        for j in i + 1..n {
            let v = qi(*it.next().unwrap());
            a[(i, j)] = v.clone();
            a[(j, i)] = -v;
        }
    }
    let id = Matrix::identity(n);
    &(&id - &a) * &(&id + &a).inverse().unwrap()
}

fn rotated_contact(s: &AlmostContact, qm: &Matrix<Rational>) -> AlmostContact {
    let phi = &(qm * s.phi()) * &qm.transpose();
    AlmostContact::new(s.model().clone(), qm.mul_vec(s.xi()), phi).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn identities_hold_for_rotated_contact_structures(
        upper in prop::collection::vec(-1i64..=1, 10),
        which in 0usize..3,
    ) {
        let base = [su2_r2(), heis5(), heis5_twisted()][which].clone();
        let s = rotated_contact(&base, &cayley(5, &upper));
        for r in s.general_identities().into_iter().chain(s.nijenhuis_expressions()) {
            prop_assert!(r.holds(), "{}: {}", r.id, r.residual);
        }
        if s.nijenhuis().is_skew() && s.is_killing() {
            prop_assert!(s.chain_identities().unwrap().holds());
            let t = s.torsion().unwrap();
            let conn = s.characteristic_connection().unwrap();
            prop_assert!(s.parallelism_defect(&conn).is_zero());
            prop_assert!(s.ricci_form_identity(&t).unwrap().holds());
        }
    }

    #[test]
    fn nijenhuis_tensor_is_j_anti_linear(upper in prop::collection::vec(-1i64..=1, 6), kt in any::<bool>()) {
        let base = if kt { kt_hermitian() } else { kt_almost_kaehler() };
        let qm = cayley(4, &upper);
        let j = &(&qm * base.j()) * &qm.transpose();
        let h = AlmostHermitian::new(base.model().clone(), j.clone()).unwrap();
        let n = h.nijenhuis().table().clone();
        prop_assert!(diff(&slot(&n, 0, &j), &slot(&n, 2, &j)).is_zero());
        prop_assert!(n.add(&permute(&n, &[1, 0, 2])).is_zero());
        // Ω(X, Y) = g(X, JY)
        let omega = form_table(&h.kaehler_form(), 2);
        for a in 0..4 {
            for b in 0..4 {
                prop_assert_eq!(&omega[[a, b]], &j[(a, b)]);
            }
        }
    }
}
