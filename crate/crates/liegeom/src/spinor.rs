use clifford::{common_kernel, GammaRep, SpinEndo};
use exalg::{sigma_t, Form};
use ratlin::{q, Field, Gauss, Matrix, Rational, Zero};

use crate::{Connection, LieError, LieModel};

/// The connection on invariant spinors: `∇_{e_i} Ψ = Λ_i Ψ` with
/// `Λ_i = ½ Σ_{j<k} ω_ijk Γ_j Γ_k`, so that `[Λ_i, Γ_l] = Σ_m ω_ilm Γ_m`.
#[derive(Debug, Clone)]
pub struct SpinorConnection {
    rep: GammaRep,
    lambdas: Vec<SpinEndo>,
}

fn gauss(r: &Rational) -> Gauss {
    Gauss::from_rational(r.clone())
}

impl SpinorConnection {
    pub fn new(conn: &Connection, rep: &GammaRep) -> Result<Self, LieError> {
        let n = conn.dim();
        if rep.dim() != n {
            return Err(clifford::CliffordError::DimensionMismatch { form: n, rep: rep.dim() }.into());
        }
        let w = conn.coeffs();
        let lambdas = (0..n)
            .map(|i| {
                let two_form = Form::from_fn(n, 2, |jk| &w[[i, jk[0] - 1, jk[1] - 1]] * q(1, 2));
                rep.act_form(&two_form)
            })
            .collect();
        Ok(SpinorConnection { rep: rep.clone(), lambdas })
    }

    pub fn rep(&self) -> &GammaRep {
        &self.rep
    }

    /// `Λ_i` for a 1-based `i`.
    pub fn lambda(&self, i: usize) -> &SpinEndo {
        &self.lambdas[i - 1]
    }

    pub fn lambdas(&self) -> &[SpinEndo] {
        &self.lambdas
    }

    /// `D = Σ e_i · ∇_{e_i}`.
    pub fn dirac(&self) -> SpinEndo {
        let size = self.rep.size();
        self.lambdas
            .iter()
            .enumerate()
            .fold(Matrix::zeros(size, size), |acc, (i, l)| &acc + &(&self.rep.gamma(i + 1) * l))
    }

    /// `∇*∇ = -Σ ∇_{e_i} ∇_{e_i} + ∇_{V}` with `V = Σ ∇^g_{e_i} e_i`.
    pub fn laplacian(&self, v: &[Rational]) -> SpinEndo {
        let size = self.rep.size();
        let mut out = Matrix::zeros(size, size);
        for (k, l) in self.lambdas.iter().enumerate() {
            out = &out - &(l * l);
            if !v[k].is_zero() {
                out = &out + &l.scale(&gauss(&v[k]));
            }
        }
        out
    }

    /// `Σ_k (e_k ⌟ T) · ∇_{e_k}`.
    pub fn torsion_contraction(&self, t: &Form) -> SpinEndo {
        let size = self.rep.size();
        (1..=t.dim()).fold(Matrix::zeros(size, size), |acc, k| {
            &acc + &(&self.rep.act_form(&t.interior_e(k)) * &self.lambdas[k - 1])
        })
    }

    /// Exact basis of the invariant `∇`-parallel spinors.
    pub fn parallel_spinors(&self) -> Vec<Vec<Gauss>> {
        common_kernel(self.rep.size(), &self.lambdas).expect("all Λ_i have the module size")
    }
}

/// Invariant `∇`-parallel spinors of the connection with torsion `T`.
pub fn parallel_spinors(model: &LieModel, t: &Form) -> Result<Vec<Vec<Gauss>>, LieError> {
    let rep = GammaRep::new(model.dim())?;
    Ok(SpinorConnection::new(&model.with_torsion(t)?, &rep)?.parallel_spinors())
}

/// Residuals of the Dirac-operator identities on invariant spinors.
#[derive(Debug, Clone, PartialEq)]
pub struct SlReport {
    /// `D² - (∇*∇ + ¾dT - ½σ^T + ½δ^g(T) - Σ e_k⌟T·∇_{e_k} + ¼Scal^∇)`.
    pub square_residual: Rational,
    /// The same with the codifferential term at coefficient 1 instead of ½.
    pub square_residual_unit_codiff: Rational,
    /// `DT + TD - (dT + δ^g(T) - 2σ^T - 2Σ e_i⌟T·∇_{e_i})`.
    pub anticommutator_residual: Rational,
    pub parallel_dim: usize,
    /// `(¾dT - ½σ^T + ½δ^g(T) + ¼Scal^∇)Ψ` over the parallel spinors.
    pub parallel_scalar_residual: Rational,
    /// `((½X⌟dT + ∇_X T) - Ric^∇(X))Ψ` over basis `X` and parallel spinors.
    pub parallel_ricci_residual: Rational,
    pub scal: Rational,
    pub codiff_vanishes: bool,
}

fn spinor_residual(e: &SpinEndo, basis: &[Vec<Gauss>]) -> Rational {
    basis
        .iter()
        .flat_map(|psi| e.mul_vec(psi))
        .map(|z| z.re.abs_value() + z.im.abs_value())
        .max()
        .unwrap_or_else(Rational::zero)
}

trait AbsValue {
    fn abs_value(&self) -> Rational;
}

impl AbsValue for Rational {
    fn abs_value(&self) -> Rational {
        if *self < Rational::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

/// Assembles both Dirac-operator identities as exact matrices and checks the
/// parallel-spinor consequences.
pub fn verify_sl_formula(model: &LieModel, t: &Form) -> Result<SlReport, LieError> {
    let n = model.dim();
    let rep = GammaRep::new(n)?;
    let conn = model.with_torsion(t)?;
    let sc = SpinorConnection::new(&conn, &rep)?;
    let cur = model.curvature(&conn);
    let dt = model.d(t);
    let sigma = sigma_t(t).map_err(|_| LieError::BadTorsion { dim: n })?;
    let delta = model.codiff(t);
    let size = rep.size();

    let d = sc.dirac();
    let lap = sc.laplacian(&model.mean_curvature_vector());
    let contr = sc.torsion_contraction(t);
    let scal_term = Matrix::scalar(size, gauss(&(&cur.scal * q(1, 4))));
    let zero_order = |codiff_coeff: Rational| {
        let f = &(&dt.scale(&q(3, 4)) - &sigma.scale(&q(1, 2))) + &delta.scale(&codiff_coeff);
        rep.act_form(&f)
    };
    let square = &d * &d;
    let rhs = |c: Rational| &(&(&lap + &zero_order(c)) - &contr) + &scal_term;
    let square_residual = (&square - &rhs(q(1, 2))).max_abs();
    let square_residual_unit_codiff = (&square - &rhs(q(1, 1))).max_abs();

    let tm = rep.act_form(t);
    let anti = &(&d * &tm) + &(&tm * &d);
    let anti_rhs = &rep.act_form(&(&(&dt + &delta) - &sigma.scale(&q(2, 1)))) - &contr.scale(&gauss(&q(2, 1)));
    let anticommutator_residual = (&anti - &anti_rhs).max_abs();

    let parallel = sc.parallel_spinors();
    let scalar_endo =
        &rep.act_form(&(&(&dt.scale(&q(3, 4)) - &sigma.scale(&q(1, 2))) + &delta.scale(&q(1, 2)))) + &scal_term;
    let parallel_scalar_residual = spinor_residual(&scalar_endo, &parallel);

    let mut parallel_ricci_residual = Rational::zero();
    for i in 1..=n {
        let x = exalg::basis_vector(n, i);
        let f = &dt.interior_e(i).scale(&q(1, 2)) + &conn.derivative(i, t);
        let ric = Form::vector(&cur.ric_vector(&x));
        let e = rep.act_form(&(&f - &ric));
        parallel_ricci_residual = parallel_ricci_residual.max(spinor_residual(&e, &parallel));
    }

    Ok(SlReport {
        square_residual,
        square_residual_unit_codiff,
        anticommutator_residual,
        parallel_dim: parallel.len(),
        parallel_scalar_residual,
        parallel_ricci_residual,
        scal: cur.scal,
        codiff_vanishes: delta.is_zero(),
    })
}
