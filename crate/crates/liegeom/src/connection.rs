use exalg::{mask_indices, Form};
use ratlin::{q, Matrix, Rational, Tensor, Zero};

use crate::LieModel;

/// An invariant connection, stored as `ω_ijk = g(∇_{e_i} e_j, e_k)`
/// (0-based table), together with the skew torsion it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct Connection {
    table: Tensor,
    torsion: Option<Form>,
}

impl Connection {
    pub fn from_table(table: Tensor, torsion: Option<Form>) -> Self {
        assert_eq!(table.rank(), 3, "connection table must have three indices");
        Connection { table, torsion }
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn coeffs(&self) -> &Tensor {
        &self.table
    }

    /// The torsion 3-form this connection was built with; `None` for the
    /// Levi-Civita connection.
    pub fn torsion_form(&self) -> Option<&Form> {
        self.torsion.as_ref()
    }

    /// Skewness of `ω_ijk` in `(j, k)`.
    pub fn is_metric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| (&self.table[[i, j, k]] + &self.table[[i, k, j]]).is_zero())))
    }

    /// Matrix of `∇_{e_i}` on vectors: column `j` holds `∇_{e_i} e_j`. 1-based `i`.
    pub fn matrix(&self, i: usize) -> Matrix<Rational> {
        Matrix::from_fn(self.dim(), self.dim(), |k, j| self.table[[i - 1, j, k]].clone())
    }

    /// `∇_X Y` for invariant vector fields.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if x[i].is_zero() || y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &xy * &self.table[[i, j, k]];
                }
            }
        }
        out
    }

    /// `∇_{e_i} α` for an invariant form; `∇` acts as a derivation with
    /// `∇_{e_i} e_j = Σ_k ω_ijk e_k`. 1-based `i`.
    pub fn derivative(&self, i: usize, a: &Form) -> Form {
        let n = self.dim();
        let mut out = Form::zero(n);
        for (&mask, c) in a.raw_terms() {
            let idx = mask_indices(mask);
            for p in 0..idx.len() {
                for l in 1..=n {
                    let w = &self.table[[i - 1, idx[p] - 1, l - 1]];
                    if w.is_zero() || (l != idx[p] && idx.contains(&l)) {
                        continue;
                    }
                    let mut swapped = idx.clone();
                    swapped[p] = l;
                    out += &Form::term(n, &swapped, c * w);
                }
            }
        }
        out
    }

    /// `∇_X α` for an invariant vector `X`.
    pub fn derivative_along(&self, x: &[Rational], a: &Form) -> Form {
        let mut out = Form::zero(self.dim());
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out += &self.derivative(i + 1, a).scale(c);
            }
        }
        out
    }

    /// `true` iff `∇_{e_i} α = 0` for every `i`.
    pub fn is_parallel(&self, a: &Form) -> bool {
        (1..=self.dim()).all(|i| self.derivative(i, a).is_zero())
    }

    /// `∇_{e_i} A = [∇_{e_i}, A]` for an invariant endomorphism `A`.
    pub fn derivative_endo(&self, i: usize, a: &Matrix<Rational>) -> Matrix<Rational> {
        let w = self.matrix(i);
        &(&w * a) - &(a * &w)
    }

    /// `-Σ e_i ⌟ ∇_{e_i} α`.
    pub fn codiff(&self, a: &Form) -> Form {
        let mut out = Form::zero(self.dim());
        for i in 1..=self.dim() {
            out -= &self.derivative(i, a).interior_e(i);
        }
        out
    }

    /// `(∇_{e_i} T)(e_j, e_k, e_l)` as a 0-based rank-4 table for a form of
    /// degree 3.
    pub fn derivative_table3(&self, t: &Form) -> Tensor {
        let n = self.dim();
        let ders: Vec<Form> = (1..=n).map(|i| self.derivative(i, t)).collect();
        Tensor::from_fn(n, 4, |ix| ders[ix[0]].eval(&[ix[1] + 1, ix[2] + 1, ix[3] + 1]))
    }
}

/// Curvature of an invariant connection.
#[derive(Debug, Clone, PartialEq)]
pub struct Curvature {
    /// `R(e_i, e_j, e_k, e_l)`, 0-based.
    pub r: Tensor,
    /// `Ric(e_i, e_j) = Σ_m R(e_m, e_i, e_j, e_m)`.
    pub ric: Tensor,
    pub scal: Rational,
}

impl Curvature {
    /// Diagonal of the Ricci tensor if it is diagonal.
    pub fn ric_diagonal(&self) -> Option<Vec<Rational>> {
        self.ric.as_diagonal()
    }

    /// The vector `Ric(X) = Σ_j Ric(X, e_j) e_j`.
    pub fn ric_vector(&self, x: &[Rational]) -> Vec<Rational> {
        let n = self.ric.dim();
        (0..n).map(|j| (0..n).fold(Rational::zero(), |s, i| s + &x[i] * &self.ric[[i, j]])).collect()
    }

    pub fn ric_matrix(&self) -> Matrix<Rational> {
        let n = self.ric.dim();
        Matrix::from_fn(n, n, |i, j| self.ric[[i, j]].clone())
    }
}

pub(crate) fn curvature(model: &LieModel, conn: &Connection) -> Curvature {
    let n = model.dim();
    let w = conn.coeffs();
    let c = model.structure_constants();
    let r = Tensor::from_fn(n, 4, |ix| {
        let (i, j, k, m) = (ix[0], ix[1], ix[2], ix[3]);
        let mut s = Rational::zero();
        for l in 0..n {
            s += &w[[j, k, l]] * &w[[i, l, m]];
            s -= &w[[i, k, l]] * &w[[j, l, m]];
            s -= &c[[i, j, l]] * &w[[l, k, m]];
        }
        s
    });
    let ric = Tensor::from_fn(n, 2, |ix| (0..n).fold(Rational::zero(), |s, m| s + &r[[m, ix[0], ix[1], m]]));
    let scal = (0..n).fold(q(0, 1), |s, i| s + &ric[[i, i]]);
    Curvature { r, ric, scal }
}
