use exalg::{mask_indices, Form};
use ratlin::{q, Rational, Tensor};

use crate::{Connection, LieError};

/// A Lie algebra with an orthonormal basis, given by the differentials of the
/// dual coframe.
#[derive(Debug, Clone, PartialEq)]
pub struct LieModel {
    label: String,
    de: Vec<Form>,
    c: Tensor,
}

impl LieModel {
    /// `de[k]` is `de_{k+1}`. Rejects data violating `d(de_k) = 0`.
    pub fn new(label: impl Into<String>, dim: usize, de: Vec<Form>) -> Result<Self, LieError> {
        if de.len() != dim {
            return Err(LieError::WrongCount { expected: dim, got: de.len() });
        }
        for (k, f) in de.iter().enumerate() {
            if f.dim() != dim || !f.has_degree(2) {
                return Err(LieError::NotATwoForm { index: k + 1, dim });
            }
        }
        let c = Tensor::from_fn(dim, 3, |ix| -de[ix[2]].eval(&[ix[0] + 1, ix[1] + 1]));
        let model = LieModel { label: label.into(), de, c };
        for k in 0..dim {
            let r = model.d(&model.de[k]);
            if !r.is_zero() {
                return Err(LieError::Jacobi { index: k + 1, residual: r.to_string() });
            }
        }
        Ok(model)
    }

    /// Builds from `(k, expression)` pairs; unlisted differentials are zero.
    ///
    /// # Panics
    ///
    /// Panics on an unparsable expression; meant for fixed literals.
    pub fn from_exprs(label: &str, dim: usize, exprs: &[(usize, &str)]) -> Result<Self, LieError> {
        let mut de = vec![Form::zero(dim); dim];
        for &(k, e) in exprs {
            de[k - 1] = Form::parse(dim, e).expect("structure equation literal");
        }
        LieModel::new(label, dim, de)
    }

    pub fn abelian(dim: usize) -> Self {
        LieModel::new(format!("abelian{dim}"), dim, vec![Form::zero(dim); dim]).expect("abelian algebra")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.de.len()
    }

    /// `de_k` for a 1-based `k`.
    pub fn de(&self, k: usize) -> &Form {
        &self.de[k - 1]
    }

    pub fn differentials(&self) -> &[Form] {
        &self.de
    }

    /// `c_ijk = g([e_i, e_j], e_k)`, 0-based.
    pub fn structure_constants(&self) -> &Tensor {
        &self.c
    }

    /// `[X, Y]` for coefficient vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![q(0, 1); n];
        for i in 0..n {
            if x[i] == q(0, 1) {
                continue;
            }
            for j in 0..n {
                if y[j] == q(0, 1) {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &xy * &self.c[[i, j, k]];
                }
            }
        }
        out
    }

    /// Exterior derivative of an invariant form: the Leibniz extension
    /// `d(e_{i1} ∧ ... ∧ e_{ip}) = Σ_r (-1)^r e_{i1} ∧ ... ∧ de_{ir} ∧ ... ∧ e_{ip}`.
    pub fn d(&self, a: &Form) -> Form {
        let n = self.dim();
        let mut out = Form::zero(n);
        for (&mask, c) in a.raw_terms() {
            let idx = mask_indices(mask);
            for (r, &i) in idx.iter().enumerate() {
                let left = Form::blade(n, &idx[..r]);
                let right = Form::blade(n, &idx[r + 1..]);
                let term = left.wedge(&self.de[i - 1]).wedge(&right);
                let s = if r % 2 == 0 { c.clone() } else { -c.clone() };
                out += &term.scale(&s);
            }
        }
        out
    }

    /// `V = Σ_i ∇^g_{e_i} e_i`; zero exactly for unimodular algebras.
    pub fn mean_curvature_vector(&self) -> Vec<Rational> {
        let lc = self.levi_civita();
        let n = self.dim();
        (0..n).map(|k| (0..n).fold(q(0, 1), |s, i| s + &lc.coeffs()[[i, i, k]])).collect()
    }

    pub fn is_unimodular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|j| (0..n).fold(q(0, 1), |s, i| s + &self.c[[i, j, i]]) == q(0, 1))
    }

    /// Levi-Civita connection by the Koszul formula
    /// `ω_ijk = ½(c_ijk - c_jki + c_kij)`.
    pub fn levi_civita(&self) -> Connection {
        let c = &self.c;
        let half = q(1, 2);
        let table = Tensor::from_fn(self.dim(), 3, |ix| {
            let (i, j, k) = (ix[0], ix[1], ix[2]);
            (&c[[i, j, k]] - &c[[j, k, i]] + &c[[k, i, j]]) * &half
        });
        Connection::from_table(table, None)
    }

    /// The metric connection `g(∇_X Y, Z) = g(∇^g_X Y, Z) + ½ T(X, Y, Z)`.
    pub fn with_torsion(&self, t: &Form) -> Result<Connection, LieError> {
        let n = self.dim();
        if t.dim() != n || !t.has_degree(3) {
            return Err(LieError::BadTorsion { dim: n });
        }
        let lc = self.levi_civita();
        let half = q(1, 2);
        let table = Tensor::from_fn(n, 3, |ix| &lc.coeffs()[ix] + t.eval(&[ix[0] + 1, ix[1] + 1, ix[2] + 1]) * &half);
        Ok(Connection::from_table(table, Some(t.clone())))
    }

    /// `δ^g α = -Σ e_i ⌟ ∇^g_{e_i} α`.
    pub fn codiff(&self, a: &Form) -> Form {
        self.levi_civita().codiff(a)
    }

    /// Torsion `T(X,Y) = ∇_X Y - ∇_Y X - [X,Y]` of a connection, as a
    /// 0-based `(0,3)` table `T_ijk`.
    pub fn torsion_table(&self, conn: &Connection) -> Tensor {
        let w = conn.coeffs();
        Tensor::from_fn(self.dim(), 3, |ix| {
            let (i, j, k) = (ix[0], ix[1], ix[2]);
            &w[[i, j, k]] - &w[[j, i, k]] - &self.c[[i, j, k]]
        })
    }

    pub fn curvature(&self, conn: &Connection) -> crate::Curvature {
        crate::connection::curvature(self, conn)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratlin::qi;

    fn heis5() -> LieModel {
        LieModel::from_exprs("heis5", 5, &[(5, "2*e1^e2 + 2*e3^e4")]).unwrap()
    }

    #[test]
    fn rejects_jacobi_violation() {
        // d(de3) = de1 ^ e2 = e1^e3^e2
        let err = LieModel::from_exprs("bad", 3, &[(1, "e1^e3"), (3, "e1^e2")]);
        assert!(matches!(err, Err(LieError::Jacobi { .. })));
    }

    #[test]
    fn exterior_derivative_squares_to_zero() {
        let m = heis5();
        for p in 0..=5 {
            for idx in exalg::ascending(5, p) {
                assert!(m.d(&m.d(&Form::blade(5, &idx))).is_zero());
            }
        }
        assert_eq!(m.d(&Form::blade(5, &[5])), Form::parse(5, "2*e12 + 2*e34").unwrap());
    }

    #[test]
    fn levi_civita_is_torsion_free_and_metric() {
        let m = heis5();
        let lc = m.levi_civita();
        assert!(m.torsion_table(&lc).is_zero());
        assert!(lc.is_metric());
        // ∇^g_{e1} e2 = -e5
        assert_eq!(lc.coeffs()[[0, 1, 4]], qi(-1));
    }

    #[test]
    fn bracket_recovers_structure_constants() {
        let m = heis5();
        let e = |i: usize| exalg::basis_vector(5, i);
        assert_eq!(m.bracket(&e(1), &e(2)), vec![qi(0), qi(0), qi(0), qi(0), qi(-2)]);
        assert!(m.is_unimodular());
    }
}
