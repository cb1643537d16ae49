use exalg::Form;
use liegeom::{Connection, LieModel};
use ratlin::{q, qi, Matrix, Rational, Signed, Zero};

use crate::{G2Error, G2Form};

/// A left-invariant G₂-structure: a 7-dimensional Lie algebra with an
/// orthonormal frame and a G₂ 3-form in that frame.
#[derive(Debug, Clone, PartialEq)]
pub struct G2Structure {
    model: LieModel,
    form: G2Form,
}

/// Components of the intrinsic torsion `Γ ∈ ℝ⁷ ⊗ m`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorsionClass {
    /// `λ = -(1/7)(dω³, *ω³)`.
    pub lambda: Rational,
    /// From `δ^g ω³ = -β ⌟ ω³`.
    pub beta: Vec<Rational>,
    /// The Λ³₂₇ component, normalized by `Γ₂₇(X) = ½ pr_m(X ⌟ Γ₂₇)`.
    pub gamma27: Form,
    /// The Λ²₁₄ part of the skew part of `Γ`; a skew connection preserving
    /// `ω³` exists iff this vanishes.
    pub obstruction14: Form,
    /// `Γ` as a matrix: row `x` holds `Z` with `Γ(e_x) = Z ⌟ ω³`.
    pub gamma: Matrix<Rational>,
}

impl TorsionClass {
    pub fn admits_skew_connection(&self) -> bool {
        self.obstruction14.is_zero()
    }

    pub fn is_cocalibrated(&self) -> bool {
        self.beta.iter().all(Zero::is_zero)
    }

    pub fn is_parallel(&self) -> bool {
        self.gamma.is_zero()
    }

    /// `Γ = λ Id` only.
    pub fn is_nearly_parallel(&self) -> bool {
        self.is_cocalibrated() && self.gamma27.is_zero() && self.admits_skew_connection() && !self.lambda.is_zero()
    }

    /// `Γ` lies in Λ³₂₇ alone.
    pub fn is_pure_27(&self) -> bool {
        self.lambda.is_zero() && self.is_cocalibrated() && self.admits_skew_connection() && !self.gamma27.is_zero()
    }
}

impl G2Structure {
    /// Structure with the canonical 3-form.
    pub fn canonical(model: LieModel) -> Result<Self, G2Error> {
        Self::new(model, G2Form::canonical())
    }

    pub fn new(model: LieModel, form: G2Form) -> Result<Self, G2Error> {
        if model.dim() != 7 {
            return Err(G2Error::WrongDimension(model.dim()));
        }
        Ok(G2Structure { model, form })
    }

    pub fn model(&self) -> &LieModel {
        &self.model
    }

    pub fn form(&self) -> &G2Form {
        &self.form
    }

    pub fn omega(&self) -> &Form {
        self.form.omega()
    }

    pub fn d_omega(&self) -> Form {
        self.model.d(self.form.omega())
    }

    pub fn codiff_omega(&self) -> Form {
        self.model.codiff(self.form.omega())
    }

    /// `∇^g_{e_x} ω³` for every `x`.
    pub fn lc_derivatives(&self) -> Vec<Form> {
        let lc = self.model.levi_civita();
        (1..=7).map(|i| lc.derivative(i, self.form.omega())).collect()
    }

    /// Solves `∇^g_X ω³ = ϱ(Γ(X)) ω³` for `Γ(X) ∈ m`, using
    /// `ϱ(Z ⌟ ω³) ω³ = -3 Z ⌟ *ω³`. Returns the residual of the solve too;
    /// it is zero for every G₂-structure since `∇^g_X ω³ ∈ Λ³₇`.
    pub fn gamma_matrix(&self) -> (Matrix<Rational>, Rational) {
        let ders = self.lc_derivatives();
        let mut residual = Rational::zero();
        let rows: Vec<Vec<Rational>> = ders
            .iter()
            .map(|dx| {
                let z: Vec<Rational> = self.form.three_form_vector(dx).iter().map(|c| c * q(-1, 3)).collect();
                let back = self.form.act(&self.form.vector_to_two_form(&z), self.form.omega());
                residual = residual.clone().max((&back - dx).max_abs());
                z
            })
            .collect();
        (Matrix::from_rows(rows), residual)
    }

    pub fn classify(&self) -> Result<TorsionClass, G2Error> {
        let (gamma, residual) = self.gamma_matrix();
        if !residual.is_zero() {
            return Err(G2Error::Internal(format!("∇^g ω³ has a component outside Λ³₇: {residual}")));
        }
        let g = &self.form;
        let d = self.d_omega();
        let lambda = -d.inner(g.star_omega()) * q(1, 7);
        let delta = self.codiff_omega();
        let beta: Vec<Rational> = (1..=7).map(|j| -delta.inner(g.contraction(j)) * q(1, 3)).collect();

        let skew = Form::from_fn(7, 2, |ix| {
            let (x, k) = (ix[0] - 1, ix[1] - 1);
            (&gamma[(x, k)] - &gamma[(k, x)]) * q(1, 2)
        });
        let obstruction14 = g.pr_g2(&skew);
        let gamma27 = self.solve_gamma27(&gamma)?;
        Ok(TorsionClass { lambda, beta, gamma27, obstruction14, gamma })
    }

    /// Recovers `Γ₂₇ ∈ Λ³₂₇` from the traceless symmetric part `S` of `Γ`
    /// through `S_xi = (1/6)(e_x ⌟ Γ₂₇, e_i ⌟ ω³)`.
    fn solve_gamma27(&self, gamma: &Matrix<Rational>) -> Result<Form, G2Error> {
        let g = &self.form;
        let trace = gamma.trace() * q(1, 7);
        let target: Vec<Rational> = (0..7)
            .flat_map(|x| {
                let trace = trace.clone();
                (0..7).map(move |i| {
                    let s = (&gamma[(x, i)] + &gamma[(i, x)]) * q(1, 2);
                    if x == i {
                        s - &trace
                    } else {
                        s
                    }
                })
            })
            .collect();
        let basis = g.lambda27_basis();
        let columns: Vec<Vec<Rational>> = basis.iter().map(|b| sym_image(g, b)).collect();
        let sol = Matrix::from_columns(&columns)
            .solve(&target)
            .ok_or_else(|| G2Error::Internal("symmetric part of Γ is not in the image of Λ³₂₇".into()))?;
        let mut out = Form::zero(7);
        for (b, c) in basis.iter().zip(sol) {
            out += &b.scale(&c);
        }
        Ok(out)
    }

    /// The characteristic torsion
    /// `T = (1/6)(dω³, *ω³) ω³ - *dω³ + *(β ∧ ω³)`.
    pub fn torsion_form(&self) -> Result<Form, G2Error> {
        let class = self.classify()?;
        if !class.admits_skew_connection() {
            return Err(G2Error::NoSkewConnection { obstruction: class.obstruction14.to_string() });
        }
        let g = &self.form;
        let d = self.d_omega();
        let beta = Form::vector(&class.beta);
        let t = &(&g.omega().scale(&(d.inner(g.star_omega()) * q(1, 6))) - &d.hodge()) + &beta.wedge(g.omega()).hodge();
        Ok(t)
    }

    pub fn characteristic_connection(&self) -> Result<Connection, G2Error> {
        let t = self.torsion_form()?;
        Ok(self.model.with_torsion(&t)?)
    }

    /// `Ric^∇(e_x, e_i) = ½(e_x ⌟ dT + 2 ∇_{e_x} T, e_i ⌟ *ω³)`, 0-based table.
    pub fn ricci_via_dt(&self, t: &Form) -> Result<Matrix<Rational>, G2Error> {
        let conn = self.model.with_torsion(t)?;
        let dt = self.model.d(t);
        let g = &self.form;
        let rows = (1..=7)
            .map(|x| {
                let a = &dt.interior_e(x) + &conn.derivative(x, t).scale(&qi(2));
                (1..=7).map(|i| a.inner(g.star_contraction(i)) * q(1, 2)).collect()
            })
            .collect();
        Ok(Matrix::from_rows(rows))
    }

    /// `(X ⌟ dT, ω³) + 2(∇_X T, ω³)` for every basis `X`; all zero for the
    /// characteristic torsion.
    pub fn scalar_balance(&self, t: &Form) -> Result<Vec<Rational>, G2Error> {
        let conn = self.model.with_torsion(t)?;
        let dt = self.model.d(t);
        Ok((1..=7)
            .map(|x| dt.interior_e(x).inner(self.omega()) + conn.derivative(x, t).inner(self.omega()) * qi(2))
            .collect())
    }

    /// `Ric^g_ij - ¼ T_imn T_jmn - ½(e_i ⌟ dT + 2∇_i T, e_j ⌟ *ω³) - ½ δ^g(T)_ij`,
    /// as the largest absolute entry.
    pub fn riemannian_ricci_residual(&self, t: &Form) -> Result<Rational, G2Error> {
        let lc = self.model.levi_civita();
        let ric_g = self.model.curvature(&lc).ric;
        let ric = self.ricci_via_dt(t)?;
        let delta = lc.codiff(t);
        let mut worst = Rational::zero();
        for i in 1..=7 {
            for j in 1..=7 {
                let mut tt = Rational::zero();
                for m in 1..=7 {
                    for n in 1..=7 {
                        tt += t.eval(&[i, m, n]) * t.eval(&[j, m, n]);
                    }
                }
                let r = &ric_g[[i - 1, j - 1]] - tt * q(1, 4) - &ric[(i - 1, j - 1)] - delta.eval(&[i, j]) * q(1, 2);
                worst = worst.max(r.abs());
            }
        }
        Ok(worst)
    }
}

/// `(e_x ⌟ γ, e_i ⌟ ω³) / 6` flattened row-major.
fn sym_image(g: &G2Form, gamma: &Form) -> Vec<Rational> {
    let mut v = Vec::with_capacity(49);
    for x in 1..=7 {
        let c = gamma.interior_e(x);
        for i in 1..=7 {
            v.push(c.inner(g.contraction(i)) * q(1, 6));
        }
    }
    v
}
