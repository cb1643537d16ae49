use exalg::Form;
use liegeom::{Connection, IdentityResidual, LieModel};
use ratlin::{qi, Matrix, Rational, Tensor, Zero};

use crate::contact::uniqueness_rank;
use crate::nijenhuis::nijenhuis_table;
use crate::ricci::{RicciForms, TraceKind};
use crate::tables::{diff, form_table, slot, table_form};
use crate::{AcsError, NijTensor};

/// An almost hermitian structure `(g, J)` on a Lie algebra with orthonormal
/// frame; `J` acts on columns.
#[derive(Debug, Clone, PartialEq)]
pub struct AlmostHermitian {
    model: LieModel,
    j: Matrix<Rational>,
}

impl AlmostHermitian {
    /// Checks `J² = -Id` and `g(JX, JY) = g(X, Y)`.
    pub fn new(model: LieModel, j: Matrix<Rational>) -> Result<Self, AcsError> {
        let n = model.dim();
        if n % 2 == 1 {
            return Err(AcsError::WrongDimension { dim: n, parity: "even" });
        }
        if j.rows() != n || j.cols() != n {
            return Err(AcsError::NotAlmostHermitian("J must match the model dimension".into()));
        }
        let id = Matrix::identity(n);
        if &j * &j != id.scale(&qi(-1)) {
            return Err(AcsError::NotAlmostHermitian("J² ≠ -Id".into()));
        }
        if &j.transpose() * &j != id {
            return Err(AcsError::NotAlmostHermitian("J is not orthogonal".into()));
        }
        Ok(AlmostHermitian { model, j })
    }

    /// `J` given on basis vectors as `(i, j)`: `J e_i = e_j`, `J e_j = -e_i`.
    pub fn from_pairs(model: LieModel, pairs: &[(usize, usize)]) -> Result<Self, AcsError> {
        let n = model.dim();
        let mut j = Matrix::zeros(n, n);
        for &(a, b) in pairs {
            j[(b - 1, a - 1)] = qi(1);
            j[(a - 1, b - 1)] = qi(-1);
        }
        AlmostHermitian::new(model, j)
    }

    pub fn model(&self) -> &LieModel {
        &self.model
    }

    pub fn dim(&self) -> usize {
        self.model.dim()
    }

    pub fn j(&self) -> &Matrix<Rational> {
        &self.j
    }

    /// `Ω(X, Y) = g(X, JY)`.
    pub fn kaehler_form(&self) -> Form {
        Form::from_fn(self.dim(), 2, |ix| self.j[(ix[0] - 1, ix[1] - 1)].clone())
    }

    pub fn d_kaehler(&self) -> Form {
        self.model.d(&self.kaehler_form())
    }

    pub fn nijenhuis(&self) -> NijTensor {
        NijTensor::new(nijenhuis_table(&self.model, &self.j, None))
    }

    pub fn is_integrable(&self) -> bool {
        self.nijenhuis().is_zero()
    }

    pub fn is_kaehler(&self) -> bool {
        self.is_integrable() && self.d_kaehler().is_zero()
    }

    /// `∇^g Ω` is totally skew, i.e. `(∇^g_X J)X = 0`.
    pub fn is_nearly_kaehler(&self) -> bool {
        let lc = self.model.levi_civita();
        let omega = self.kaehler_form();
        let n = self.dim();
        let ders: Vec<Form> = (1..=n).map(|i| lc.derivative(i, &omega)).collect();
        let t = Tensor::from_fn(n, 3, |ix| ders[ix[0]].eval(&[ix[1] + 1, ix[2] + 1]));
        crate::tables::is_alternating(&t)
    }

    /// `T(X,Y,Z) = -dΩ(JX, JY, JZ) + N(X,Y,Z)`, defined when `N` is a 3-form.
    pub fn torsion(&self) -> Result<Form, AcsError> {
        let nij = self.nijenhuis();
        let d_omega = self.d_kaehler();
        let Some(n_form) = nij.to_form() else {
            if d_omega.is_zero() {
                return Err(AcsError::AlmostKaehler { defect: nij.skew_defect().to_string() });
            }
            return Err(AcsError::NijenhuisNotSkew { defect: nij.skew_defect().to_string() });
        };
        let d = form_table(&d_omega, 3);
        let djjj = slot(&slot(&slot(&d, 0, &self.j), 1, &self.j), 2, &self.j);
        Ok(&n_form - &table_form(&djjj))
    }

    pub fn characteristic_connection(&self) -> Result<Connection, AcsError> {
        Ok(self.model.with_torsion(&self.torsion()?)?)
    }

    /// Largest coefficient of `∇J`.
    pub fn parallelism_defect(&self, conn: &Connection) -> Rational {
        (1..=self.dim()).map(|i| conn.derivative_endo(i, &self.j).max_abs()).max().unwrap_or_else(Rational::zero)
    }

    /// Rank of `[T_X, J] = 0` on 3-forms, against the number of unknowns.
    pub fn uniqueness_rank(&self) -> (usize, usize) {
        uniqueness_rank(self.dim(), |a| (&(a * &self.j) - &(&self.j * a)).entries().to_vec())
    }

    /// `T(JX,JY,Z) - T(X,Y,Z) + T(JX,Y,JZ) + T(X,JY,JZ) = -N(X,Y,Z)` for a
    /// `J`-preserving connection with torsion `t`, and `4dΩ⁻ = -3N(JX,Y,Z)`.
    pub fn torsion_identities(&self, t: &Form) -> Vec<IdentityResidual> {
        let j = &self.j;
        let tt = form_table(t, 3);
        let n = self.nijenhuis().table().clone();
        let lhs =
            slot(&slot(&tt, 0, j), 1, j).sub(&tt).add(&slot(&slot(&tt, 0, j), 2, j)).add(&slot(&slot(&tt, 1, j), 2, j));
        let d = form_table(&self.d_kaehler(), 3);
        let dm =
            slot(&slot(&d, 1, j), 2, j).sub(&d).add(&slot(&slot(&d, 0, j), 1, j)).add(&slot(&slot(&d, 0, j), 2, j));
        let rhs = slot(&n, 0, j).scale(&qi(-3));
        vec![
            IdentityResidual {
                id: "torsion-nijenhuis",
                statement: "T(JX,JY,Z) - T(X,Y,Z) + T(JX,Y,JZ) + T(X,JY,JZ) = -N(X,Y,Z)",
                residual: diff(&lhs, &n.scale(&qi(-1))),
            },
            IdentityResidual {
                id: "d-kaehler-minus",
                statement: "dΩ(X,JY,JZ) - dΩ(X,Y,Z) + dΩ(JX,JY,Z) + dΩ(JX,Y,JZ) = -3N(JX,Y,Z)",
                residual: diff(&dm, &rhs),
            },
        ]
    }

    /// For a nearly Kähler structure, `4T = N` with `T` from [`AlmostHermitian::torsion`].
    pub fn nearly_kaehler_torsion_residual(&self) -> Result<Rational, AcsError> {
        let t = self.torsion()?;
        let n = self.nijenhuis().to_form().unwrap_or_else(|| Form::zero(self.dim()));
        Ok((&t.scale(&qi(4)) - &n).max_abs())
    }

    pub fn ricci_forms(&self, t: &Form) -> Result<RicciForms, AcsError> {
        RicciForms::compute(&self.model, &self.j, t, TraceKind::Hermitian)
    }

    /// `ϱ^∇(X,Y) = Ric^∇(X,JY) + (∇_X θ)(JY) + ¼λ^ω(X,Y)`.
    pub fn ricci_form_identity(&self, t: &Form) -> Result<IdentityResidual, AcsError> {
        let rf = self.ricci_forms(t)?;
        Ok(IdentityResidual {
            id: "hermitian-ricci-form",
            statement: "ϱ^∇(X,Y) = Ric^∇(X,JY) + (∇_X θ)(JY) + ¼λ^ω(X,Y)",
            residual: rf.identity_residual(&self.j, TraceKind::Hermitian),
        })
    }

    /// Holonomy in `SU(n)` certificate: `ϱ^∇ = 0` together with the vanishing
    /// of the right-hand side of the Ricci form identity.
    pub fn special_unitary_criterion(&self, t: &Form) -> Result<(bool, bool), AcsError> {
        let rf = self.ricci_forms(t)?;
        Ok((rf.rho.is_zero(), rf.right_hand_side(&self.j, TraceKind::Hermitian).is_zero()))
    }
}
