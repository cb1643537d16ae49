use exalg::Form;
use liegeom::{Connection, LieModel};
use ratlin::{q, Matrix, Rational, Tensor};

use crate::tables::{diff, form_table, slot, table_form, trace_against};
use crate::AcsError;

/// Whether traces run against `φ` (contact) or `J` (hermitian); the two
/// settings differ in the torsion 1-form and the normalization of `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceKind {
    Contact,
    Hermitian,
}

/// Ricci form, torsion 1-form and `dT`-trace of a connection with skew
/// torsion, traced against a fixed endomorphism `A = φ` or `J`.
///
/// - `ϱ(X,Y) = ½ Σ R^∇(X, Y, e_i, A e_i)`;
/// - contact: `ω^∇(X) = -½ Σ T(X, e_i, φe_i)`, `λ^∇(X,Y) = Σ dT(X, Y, e_i, φe_i)`;
/// - hermitian: `θ(X) = -½ Σ T(JX, e_i, Je_i)`, `λ^ω(X,Y) = Σ dT(X, Y, e_i, Je_i)`.
///
/// `λ^∇` is the full trace: with the factor ½ the contact Ricci form
/// identity fails on Sasakian structures with `dT ≠ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct RicciForms {
    pub rho: Form,
    /// `ω^∇` or the Lee form `θ`.
    pub omega: Form,
    pub lambda: Form,
    pub ric: Tensor,
    pub connection: Connection,
}

impl RicciForms {
    pub fn compute(model: &LieModel, a: &Matrix<Rational>, t: &Form, kind: TraceKind) -> Result<Self, AcsError> {
        let connection = model.with_torsion(t)?;
        let cur = model.curvature(&connection);
        let half = q(1, 2);
        let rho = table_form(&trace_against(&cur.r, 2, 3, a).scale(&half));
        let traced = trace_against(&form_table(t, 3), 1, 2, a).scale(&-half.clone());
        let dt = form_table(&model.d(t), 4);
        let (omega, lambda) = match kind {
            TraceKind::Contact => (traced, trace_against(&dt, 2, 3, a)),
            TraceKind::Hermitian => (slot(&traced, 0, a), trace_against(&dt, 2, 3, a)),
        };
        Ok(RicciForms { rho, omega: table_form(&omega), lambda: table_form(&lambda), ric: cur.ric, connection })
    }

    /// `(∇_{e_x} ω)(e_y)`, 0-based.
    fn omega_derivative(&self) -> Tensor {
        let n = self.ric.dim();
        let ders: Vec<Form> = (1..=n).map(|i| self.connection.derivative(i, &self.omega)).collect();
        Tensor::from_fn(n, 2, |ix| ders[ix[0]].eval(&[ix[1] + 1]))
    }

    /// Contact: `Ric^∇(X,φY) - (∇_X ω^∇)(Y) + ¼λ^∇(X,Y)`.
    /// Hermitian: `Ric^∇(X,JY) + (∇_X θ)(JY) + ¼λ^ω(X,Y)`.
    pub fn right_hand_side(&self, a: &Matrix<Rational>, kind: TraceKind) -> Tensor {
        let ric_a = slot(&self.ric, 1, a);
        let lam = form_table(&self.lambda, 2).scale(&q(1, 4));
        let dw = self.omega_derivative();
        match kind {
            TraceKind::Contact => ric_a.sub(&dw).add(&lam),
            TraceKind::Hermitian => ric_a.add(&slot(&dw, 1, a)).add(&lam),
        }
    }

    /// Largest entry of `ϱ - right_hand_side`.
    pub fn identity_residual(&self, a: &Matrix<Rational>, kind: TraceKind) -> Rational {
        diff(&form_table(&self.rho, 2), &self.right_hand_side(a, kind))
    }
}
