use proptest::prelude::*;
use ratlin::{exact_roots, g, qi, Gauss, Matrix, Poly, Rational, Zero};

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| qi(v[r * cols + c])))
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_column_count(a in int_matrix(5, 7)) {
        let k = a.kernel();
        prop_assert_eq!(a.rank() + k.len(), 7);
        for v in &k {
            prop_assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn fraction_free_rank_agrees_with_rref(a in int_matrix(6, 6)) {
        prop_assert_eq!(a.rank_fraction_free(), a.rank());
        prop_assert_eq!(a.transpose().rank_fraction_free(), a.rank());
    }

    #[test]
    fn charpoly_annihilates_its_matrix(a in int_matrix(4, 4)) {
        let p = Poly::charpoly(&a);
        let mut acc = Matrix::<Rational>::zeros(4, 4);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * &a) + &Matrix::scalar(4, c.clone());
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn triangular_gauss_matrix_eigenvalues_are_its_diagonal(
        d in proptest::collection::vec((-4i64..=4, -2i64..=2), 5),
        u in proptest::collection::vec(-3i64..=3, 25),
    ) {
        let a: Matrix<Gauss> = Matrix::from_fn(5, 5, |r, c| {
            if r == c { g(d[r].0, d[r].1) } else if r < c { g(u[r * 5 + c], 0) } else { g(0, 0) }
        });
        let rep = exact_roots(&Poly::charpoly(&a));
        prop_assert!(rep.splits());
        let mut got = rep.flattened();
        let mut want: Vec<Gauss> = d.iter().map(|&(re, im)| g(re, im)).collect();
        let key = |z: &Gauss| (z.re.clone(), z.im.clone());
        got.sort_by_key(key);
        want.sort_by_key(key);
        prop_assert_eq!(got, want);
    }
}
