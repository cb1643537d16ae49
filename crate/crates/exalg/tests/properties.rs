use exalg::{ascending, sigma_t, sigma_t_quadratic, Form};
use proptest::prelude::*;
use ratlin::{qi, Rational};

fn form(dim: usize, p: usize) -> impl Strategy<Value = Form> {
    let n = ascending(dim, p).len();
    proptest::collection::vec(-3i64..=3, n).prop_map(move |c| {
        let mut it = c.into_iter();
        Form::from_fn(dim, p, |_| qi(it.next().expect("coefficient")))
    })
}

fn dim_and_degrees() -> impl Strategy<Value = (usize, usize, usize)> {
    (2usize..=8).prop_flat_map(|n| (Just(n), 0..=n, 0..=n))
}

fn vector(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(-3i64..=3, dim).prop_map(|v| v.into_iter().map(qi).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interior_is_an_antiderivation(
        (a, b, x) in dim_and_degrees().prop_flat_map(|(n, p, r)| (form(n, p), form(n, r), vector(n)))
    ) {
        let p = a.degree().unwrap_or(0);
        let lhs = a.wedge(&b).interior(&x);
        let sign = if p % 2 == 0 { qi(1) } else { qi(-1) };
        let rhs = &a.interior(&x).wedge(&b) + &a.wedge(&b.interior(&x)).scale(&sign);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hodge_squares_to_the_parity_sign(
        (a, n, p) in dim_and_degrees().prop_flat_map(|(n, p, _)| (form(n, p), Just(n), Just(p)))
    ) {
        let sign = if (p * (n - p)) % 2 == 0 { qi(1) } else { qi(-1) };
        prop_assert_eq!(a.hodge().hodge(), a.scale(&sign));
    }

    #[test]
    fn pairing_times_volume_is_wedge_with_star(
        (a, b, n) in dim_and_degrees().prop_flat_map(|(n, p, _)| (form(n, p), form(n, p), Just(n)))
    ) {
        prop_assert_eq!(Form::volume(n).scale(&a.inner(&b)), a.wedge(&b.hodge()));
    }

    #[test]
    fn wedge_is_graded_commutative(
        (a, b) in dim_and_degrees().prop_flat_map(|(n, p, r)| (form(n, p), form(n, r)))
    ) {
        let pq = a.degree().unwrap_or(0) * b.degree().unwrap_or(0);
        let sign = if pq % 2 == 0 { qi(1) } else { qi(-1) };
        prop_assert_eq!(a.wedge(&b), b.wedge(&a).scale(&sign));
    }

    #[test]
    fn both_torsion_four_forms_agree(t in (3usize..=8).prop_flat_map(|n| form(n, 3))) {
        prop_assert_eq!(sigma_t(&t).unwrap(), sigma_t_quadratic(&t).unwrap());
    }
}

#[test]
fn g2_form_contractions() {
    let w = Form::parse(7, "e127 + e135 - e146 - e236 - e245 + e347 + e567").unwrap();
    assert_eq!(w.interior_e(1), Form::parse(7, "e2^e7 + e3^e5 - e4^e6").unwrap());
    assert_eq!(w.inner(&w), qi(7));
    assert!(w.wedge(&w).is_zero());
    let star = w.hodge();
    for i in 1..=7 {
        let c = star.interior_e(i);
        assert_eq!(c.inner(&c), qi(4));
    }
}

#[test]
fn sasakian_contact_contraction() {
    let eta = Form::blade(5, &[5]);
    let deta = Form::parse(5, "2*e1^e2 + 2*e3^e4").unwrap();
    assert_eq!(eta.wedge(&deta).interior_e(5), deta);
    assert_eq!(deta.wedge(&deta), Form::term(5, &[1, 2, 3, 4], qi(8)));
}
