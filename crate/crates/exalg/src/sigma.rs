use ratlin::{q, Rational, Zero};

use crate::{ExalgError, Form};

/// `σ^T = ½ Σ_i (e_i ⌟ T) ∧ (e_i ⌟ T)`.
pub fn sigma_t(t: &Form) -> Result<Form, ExalgError> {
    if !t.has_degree(3) {
        return Err(ExalgError::WrongDegree { expected: 3 });
    }
    let mut acc = Form::zero(t.dim());
    for i in 1..=t.dim() {
        let c = t.interior_e(i);
        acc += &c.wedge(&c);
    }
    Ok(acc.scale(&q(1, 2)))
}

/// `σ^T(X,Y,Z,V) = g(T(X,Y),T(Z,V)) + g(T(Y,Z),T(X,V)) + g(T(Z,X),T(Y,V))`,
/// evaluated componentwise on basis quadruples.
pub fn sigma_t_quadratic(t: &Form) -> Result<Form, ExalgError> {
    if !t.has_degree(3) {
        return Err(ExalgError::WrongDegree { expected: 3 });
    }
    let n = t.dim();
    let pair = |a: usize, b: usize, c: usize, d: usize| -> Rational {
        (1..=n).fold(Rational::zero(), |s, k| s + t.eval(&[a, b, k]) * t.eval(&[c, d, k]))
    };
    Ok(Form::from_fn(n, 4, |ix| {
        let (x, y, z, v) = (ix[0], ix[1], ix[2], ix[3]);
        pair(x, y, z, v) + pair(y, z, x, v) + pair(z, x, y, v)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratlin::qi;

    #[test]
    fn decomposable_torsion_has_zero_sigma() {
        assert!(sigma_t(&Form::blade(5, &[1, 2, 3])).unwrap().is_zero());
    }

    #[test]
    fn sasakian_torsion_sigma() {
        let deta = Form::from_terms(5, [(vec![1, 2], qi(2)), (vec![3, 4], qi(2))]);
        let t = Form::blade(5, &[5]).wedge(&deta);
        let s = sigma_t(&t).unwrap();
        assert_eq!(s, Form::term(5, &[1, 2, 3, 4], qi(4)));
        assert_eq!(s, sigma_t_quadratic(&t).unwrap());
        assert_eq!(s.scale(&qi(2)), deta.wedge(&deta));
    }

    #[test]
    fn rejects_wrong_degree() {
        assert_eq!(sigma_t(&Form::blade(4, &[1, 2])), Err(ExalgError::WrongDegree { expected: 3 }));
    }
}
