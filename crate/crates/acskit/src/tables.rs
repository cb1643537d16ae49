//! Dense multilinear tables over an orthonormal frame, 0-based.

use exalg::{ascending, Form};
use ratlin::{Matrix, Rational, Tensor, Zero};

/// `f(e_{i1}, ..., e_{ip})` for every index tuple.
pub fn form_table(f: &Form, p: usize) -> Tensor {
    Tensor::from_fn(f.dim(), p, |ix| {
        let one_based: Vec<usize> = ix.iter().map(|i| i + 1).collect();
        f.eval(&one_based)
    })
}

/// The `p`-form with the given table, read at ascending index tuples.
pub fn table_form(t: &Tensor) -> Form {
    let n = t.dim();
    Form::from_terms(
        n,
        ascending(n, t.rank()).into_iter().map(|ix| {
            let zero_based: Vec<usize> = ix.iter().map(|i| i - 1).collect();
            let c = t[zero_based.as_slice()].clone();
            (ix, c)
        }),
    )
}

/// Rank-1 table of a vector.
pub fn vector_table(v: &[Rational]) -> Tensor {
    Tensor::from_fn(v.len(), 1, |ix| v[ix[0]].clone())
}

/// Precomposes slot `s` with an endomorphism: `t(.., m X, ..)`, where column
/// `j` of `m` is the image of `e_j`.
pub fn slot(t: &Tensor, s: usize, m: &Matrix<Rational>) -> Tensor {
    let n = t.dim();
    Tensor::from_fn(n, t.rank(), |ix| {
        let mut jx = ix.to_vec();
        let mut acc = Rational::zero();
        for l in 0..n {
            let c = &m[(l, ix[s])];
            if c.is_zero() {
                continue;
            }
            jx[s] = l;
            acc += c * &t[jx.as_slice()];
        }
        acc
    })
}

/// Inserts the vector `v` into slot `s`, lowering the rank by one.
pub fn insert(t: &Tensor, s: usize, v: &[Rational]) -> Tensor {
    let n = t.dim();
    Tensor::from_fn(n, t.rank() - 1, |ix| {
        let mut jx: Vec<usize> = Vec::with_capacity(ix.len() + 1);
        jx.extend_from_slice(&ix[..s]);
        jx.push(0);
        jx.extend_from_slice(&ix[s..]);
        let mut acc = Rational::zero();
        for (l, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            jx[s] = l;
            acc += c * &t[jx.as_slice()];
        }
        acc
    })
}

pub fn outer(a: &Tensor, b: &Tensor) -> Tensor {
    let (ra, rb) = (a.rank(), b.rank());
    Tensor::from_fn(a.dim(), ra + rb, |ix| &a[&ix[..ra]] * &b[&ix[ra..]])
}

/// `out(i_0, ..., i_r) = t(i_{perm[0]}, ..., i_{perm[r]})`.
pub fn permute(t: &Tensor, perm: &[usize]) -> Tensor {
    Tensor::from_fn(t.dim(), t.rank(), |ix| {
        let jx: Vec<usize> = perm.iter().map(|&p| ix[p]).collect();
        t[jx.as_slice()].clone()
    })
}

/// Traces slots `a < b` of `t` against the endomorphism `m`:
/// `Σ_i t(.., e_i, .., m e_i, ..)`.
pub fn trace_against(t: &Tensor, a: usize, b: usize, m: &Matrix<Rational>) -> Tensor {
    let n = t.dim();
    Tensor::from_fn(n, t.rank() - 2, |ix| {
        let mut acc = Rational::zero();
        let mut jx: Vec<usize> = Vec::with_capacity(ix.len() + 2);
        for i in 0..n {
            for l in 0..n {
                let c = &m[(l, i)];
                if c.is_zero() {
                    continue;
                }
                jx.clear();
                let mut rest = ix.iter();
                for k in 0..ix.len() + 2 {
                    if k == a {
                        jx.push(i);
                    } else if k == b {
                        jx.push(l);
                    } else {
                        jx.push(*rest.next().expect("arity"));
                    }
                }
                acc += c * &t[jx.as_slice()];
            }
        }
        acc
    })
}

pub fn column(m: &Matrix<Rational>, j: usize) -> Vec<Rational> {
    m.column(j)
}

/// Largest entry of `|a - b|`.
pub fn diff(a: &Tensor, b: &Tensor) -> Rational {
    a.sub(b).max_abs()
}

/// `true` iff the table changes sign under every transposition of slots.
pub fn is_alternating(t: &Tensor) -> bool {
    alternation_defect(t).is_zero()
}

pub fn alternation_defect(t: &Tensor) -> Rational {
    let r = t.rank();
    let mut worst = Rational::zero();
    for s in 0..r.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..r).collect();
        perm.swap(s, s + 1);
        worst = worst.max(t.add(&permute(t, &perm)).max_abs());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratlin::qi;

    #[test]
    fn table_roundtrip() {
        let f = Form::parse(5, "2*e125 - e345").unwrap();
        let t = form_table(&f, 3);
        assert_eq!(t[[1, 0, 4]], qi(-2));
        assert!(is_alternating(&t));
        assert_eq!(table_form(&t), f);
    }

    #[test]
    fn slot_and_insert_agree_with_direct_evaluation() {
        let f = Form::parse(4, "e12 + 3*e34").unwrap();
        let m = Matrix::from_fn(4, 4, |i, j| qi((i * 4 + j) as i64 % 3 - 1));
        let t = slot(&form_table(&f, 2), 1, &m);
        for x in 0..4 {
            for y in 0..4 {
                let ex = exalg::basis_vector(4, x + 1);
                let my = m.column(y);
                assert_eq!(t[[x, y]], f.eval_vectors(&[&ex, &my]));
            }
        }
        let v = vec![qi(1), qi(0), qi(2), qi(0)];
        let i = insert(&form_table(&f, 2), 0, &v);
        assert_eq!(table_form(&i), f.interior(&v));
    }
}
