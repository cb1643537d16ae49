use clifford::{common_kernel, eigenvalues, kernel_conditions_5d, kernel_membership_5d, GammaRep, SpinorType};
use exalg::Form;
use proptest::prelude::*;
use ratlin::{g, qi, Gauss, Matrix, Rational};

fn g2_form() -> Form {
    Form::parse(7, "e127 + e135 - e146 - e236 - e245 + e347 + e567").unwrap()
}

#[test]
fn g2_form_spectrum_and_distinguished_spinor() {
    let rep = GammaRep::new(7).unwrap();
    let w = g2_form();
    let act = rep.act_form(&w);
    let r = eigenvalues(&act);
    assert_eq!(r.values, vec![(g(-7, 0), 1), (g(1, 0), 7)]);
    assert!(act.is_hermitian());
    let shifted = &act + &Matrix::scalar(8, g(7, 0));
    let psi0 = common_kernel(8, &[shifted]).unwrap();
    assert_eq!(psi0.len(), 1);
    let star = w.hodge();
    for i in 1..=7 {
        let lhs = rep.act_form(&star.interior_e(i)).mul_vec(&psi0[0]);
        let rhs: Vec<Gauss> = rep.gamma(i).mul_vec(&psi0[0]).into_iter().map(|z| z * g(4, 0)).collect();
        assert_eq!(lhs, rhs, "X = e{i}");
    }
}

#[test]
fn kaehler_form_spectrum_in_dimension_six() {
    let rep = GammaRep::new(6).unwrap();
    let omega = Form::parse(6, "e12 + e34 + e56").unwrap();
    let r = eigenvalues(&rep.act_form(&omega));
    assert_eq!(r.values, vec![(g(0, -3), 1), (g(0, -1), 3), (g(0, 1), 3), (g(0, 3), 1)]);
}

#[test]
fn contact_torsion_spectrum_in_dimension_five() {
    let rep = GammaRep::new(5).unwrap();
    let t = Form::parse(5, "2*e125 + 2*e345").unwrap();
    let r = eigenvalues(&rep.act_form(&t));
    assert!(r.has_real_spectrum(&[qi(-4), qi(0), qi(0), qi(4)]));
}

#[test]
fn blade_products_with_disjoint_indices_multiply() {
    let rep = GammaRep::new(8).unwrap();
    let a = Form::blade(8, &[1, 4, 6]);
    let b = Form::blade(8, &[2, 8]);
    assert_eq!(rep.act_form(&a.wedge(&b)), &rep.act_form(&a) * &rep.act_form(&b));
}

#[test]
fn degree_parity_decides_hermitian_symmetry() {
    let rep = GammaRep::new(6).unwrap();
    for p in 0..=6 {
        for idx in exalg::ascending(6, p).into_iter().take(3) {
            let m = rep.act_form(&Form::blade(6, &idx));
            if GammaRep::degree_is_hermitian(p) {
                assert!(m.is_hermitian(), "degree {p}");
            } else {
                assert!(m.is_antihermitian(), "degree {p}");
            }
        }
    }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| ratlin::q(n, d))
}

/// Random `(t, x)`; in most cases the data is first forced onto one of the
/// two closed-form solution sets and then optionally perturbed in a single
/// coordinate, so that both outcomes occur often.
fn five_dim_data() -> impl Strategy<Value = (Form, Vec<Rational>)> {
    (
        proptest::collection::vec(rational(), 10),
        proptest::collection::vec(rational(), 5),
        0u8..3,
        proptest::option::of((0usize..15, rational())),
    )
        .prop_map(|(tc, mut x, mode, kick)| {
            let mut it = tc.into_iter();
            let mut t = Form::from_fn(5, 3, |_| it.next().unwrap());
            if mode > 0 {
                let s = if mode == 1 { qi(1) } else { qi(-1) };
                let c = |t: &Form, i, j, k| t.eval(&[i, j, k]);
                x = vec![-&s * c(&t, 2, 3, 4), &s * c(&t, 1, 3, 4), -&s * c(&t, 1, 2, 4), &s * c(&t, 1, 2, 3), qi(0)];
                let fix = |t: &Form, a: [usize; 3], b: [usize; 3], sign: Rational| {
                    let delta = &sign * c(t, b[0], b[1], b[2]) - c(t, a[0], a[1], a[2]);
                    t + &Form::term(5, &a, delta)
                };
                t = fix(&t, [1, 2, 5], [3, 4, 5], -&s);
                t = fix(&t, [2, 3, 5], [1, 4, 5], -&s);
                t = fix(&t, [2, 4, 5], [1, 3, 5], s.clone());
            }
            if let Some((pos, v)) = kick {
                if pos < 5 {
                    x[pos] += v;
                } else {
                    let idx = &exalg::ascending(5, 3)[pos - 5];
                    t = &t + &Form::term(5, idx, v);
                }
            }
            (t, x)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closed_form_conditions_match_kernel_membership((t, x) in five_dim_data()) {
        let rep = GammaRep::new(5).unwrap();
        for which in [SpinorType::Line, SpinorType::Plane] {
            prop_assert_eq!(kernel_conditions_5d(&t, &x, which), kernel_membership_5d(&rep, &t, &x, which));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spectrum_is_invariant_under_conjugation(
        p in proptest::collection::vec(-2i64..=2, 16),
        coeffs in proptest::collection::vec(-2i64..=2, 10),
    ) {
        let rep = GammaRep::new(5).unwrap();
        let mut it = coeffs.into_iter();
        let t = Form::from_fn(5, 3, |_| qi(it.next().unwrap()));
        let e = rep.act_form(&t);
        let unit_lower = Matrix::from_fn(4, 4, |r, c| if r == c { g(1, 0) } else if r > c { g(p[r * 4 + c], 0) } else { g(0, 0) });
        let unit_upper = Matrix::from_fn(4, 4, |r, c| if r == c { g(1, 0) } else if r < c { g(0, p[r * 4 + c]) } else { g(0, 0) });
        let s = &unit_lower * &unit_upper;
        let conj = &(&s * &e) * &s.inverse().unwrap();
        prop_assert_eq!(eigenvalues(&conj).charpoly, eigenvalues(&e).charpoly);
        prop_assert_eq!(eigenvalues(&conj).values, eigenvalues(&e).values);
    }
}
