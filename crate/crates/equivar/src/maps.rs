use exalg::{basis_vector, Form};
use g2kit::G2Form;
use ratlin::{q, Matrix, Rational, Signed, Zero};

use crate::{EquivarError, G2Algebra, SparseTensor, TensorSpace};

/// `F(T)(X,Y,Z) = T(Z,X,Y) + T(Y,X,Z)`. On `Σ ∈ ℝ⁷ ⊗ g₂` with
/// `T(Z,X,Y) = g(Σ(Z)X, Y)` this is `Φ`; on `Γ ∈ ℝ⁷ ⊗ m` it is `Ψ`.
pub fn symmetrizer(t: &SparseTensor) -> SparseTensor {
    t.permute(&[2, 0, 1]).add(&t.permute(&[1, 0, 2]))
}

/// The tensor `X ⊗ A(X)` summed over a frame, for a map `A: ℝ⁷ → Λ²`.
pub fn one_form_valued(a: impl Fn(usize) -> Form) -> SparseTensor {
    let mut t = SparseTensor::zero(3);
    for x in 1..=7 {
        let ex = SparseTensor::vector(&basis_vector(7, x));
        t = t.add(&ex.tensor(&SparseTensor::from_form(&a(x))));
    }
    t
}

/// The tensor spaces on which g₂ acts, with fixed bases.
#[derive(Debug, Clone)]
pub struct Spaces {
    pub form: G2Form,
    pub algebra: G2Algebra,
    /// ℝ⁷ ⊗ m, spanned by `e_x ⊗ (e_z ⌟ ω³)`.
    pub r7_m: TensorSpace,
    /// ℝ⁷ ⊗ g₂.
    pub r7_g2: TensorSpace,
    /// ℝ⁷ ⊗ S²(ℝ⁷).
    pub r7_s2: TensorSpace,
}

impl Spaces {
    pub fn build() -> Self {
        let form = G2Form::canonical();
        let algebra = G2Algebra::build();
        let vectors: Vec<SparseTensor> = (1..=7).map(|i| SparseTensor::vector(&basis_vector(7, i))).collect();
        let mut m_span = Vec::new();
        let mut g_span = Vec::new();
        let mut s_span = Vec::new();
        for x in &vectors {
            for z in 1..=7 {
                m_span.push(x.tensor(&SparseTensor::from_form(form.contraction(z))));
            }
            for b in algebra.basis() {
                g_span.push(x.tensor(&SparseTensor::from_form(b)));
            }
            for (i, y) in vectors.iter().enumerate() {
                for z in &vectors[i..] {
                    let yz = y.tensor(z).add(&z.tensor(y));
                    s_span.push(x.tensor(&yz));
                }
            }
        }
        Spaces {
            r7_m: TensorSpace::span("R7⊗m", 3, &m_span),
            r7_g2: TensorSpace::span("R7⊗g2", 3, &g_span),
            r7_s2: TensorSpace::span("R7⊗S2", 3, &s_span),
            form,
            algebra,
        }
    }

    /// `Γ(X) = (λ/12) X ⌟ ω³` at `λ = 1`.
    pub fn gamma_lambda(&self) -> SparseTensor {
        one_form_valued(|x| self.form.contraction(x).scale(&q(1, 12)))
    }

    /// `β(X) = ¼ pr_m(β ∧ X)`.
    pub fn gamma_beta(&self, beta: &[Rational]) -> SparseTensor {
        let b = Form::vector(beta);
        one_form_valued(|x| self.form.pr_m(&b.wedge(&Form::blade(7, &[x]))).scale(&q(1, 4)))
    }

    /// `Γ₂₇(X) = ½ pr_m(X ⌟ Γ₂₇)`.
    pub fn gamma_27(&self, g27: &Form) -> SparseTensor {
        one_form_valued(|x| self.form.pr_m(&g27.interior_e(x)).scale(&q(1, 2)))
    }

    /// The Λ²₁₄ summand of ℝ⁷ ⊗ m: `Γ(X) = (a(X, ·)) ⌟ ω³` for `a ∈ g₂`,
    /// i.e. `Γ(e_x) = Σ_k a(e_x, e_k) e_k ⌟ ω³`.
    pub fn gamma_14(&self, a: &Form) -> SparseTensor {
        one_form_valued(|x| {
            let z: Vec<Rational> = (1..=7).map(|k| a.eval(&[x, k])).collect();
            self.form.vector_to_two_form(&z)
        })
    }

    /// The vector `Γ` as the element `Y ↦ ((Γ ⌟ ω³)(Y, ·)) ⌟ ω³` of ℝ⁷ ⊗ m.
    /// This is 12 times the embedding `¼ pr_m(Γ ∧ Y)` of [`Spaces::gamma_beta`].
    pub fn gamma_vector(&self, v: &[Rational]) -> SparseTensor {
        let a = self.form.vector_to_two_form(v);
        one_form_valued(|y| {
            let z: Vec<Rational> = (1..=7).map(|k| a.eval(&[y, k])).collect();
            self.form.vector_to_two_form(&z)
        })
    }

    /// `Σ(Γ)(Y) = -½ pr_g₂(Y ⌟ Γ₂₇ - ¼ β ∧ Y)`.
    pub fn sigma_of(&self, beta: &[Rational], g27: &Form) -> SparseTensor {
        let b = Form::vector(beta);
        one_form_valued(|y| {
            let a = &g27.interior_e(y) - &b.wedge(&Form::blade(7, &[y])).scale(&q(1, 4));
            self.form.pr_g2(&a).scale(&q(-1, 2))
        })
    }

    /// `Σ₀(β)(Y) = pr_g₂(β ∧ Y)`.
    pub fn sigma0_of(&self, beta: &[Rational]) -> SparseTensor {
        let b = Form::vector(beta);
        one_form_valued(|y| self.form.pr_g2(&b.wedge(&Form::blade(7, &[y]))))
    }

    pub fn phi_matrix(&self) -> Result<Matrix<Rational>, EquivarError> {
        self.r7_g2.map_matrix(&self.r7_s2, symmetrizer)
    }

    /// Columns `Ψ(v)` in ℝ⁷ ⊗ S² coordinates.
    pub fn psi_columns(&self, vs: &[SparseTensor]) -> Result<Matrix<Rational>, EquivarError> {
        let cols = vs
            .iter()
            .map(|v| {
                self.r7_s2.coords(&symmetrizer(v)).ok_or_else(|| EquivarError::NotInSpace {
                    space: self.r7_s2.label().to_string(),
                    source_space: "Ψ".into(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(&cols))
    }

    /// Bases of the four summands of ℝ⁷ ⊗ m.
    pub fn summands(&self) -> Summands {
        Summands {
            one: vec![self.gamma_lambda()],
            seven: (1..=7).map(|i| self.gamma_beta(&basis_vector(7, i))).collect(),
            fourteen: self.algebra.basis().iter().map(|a| self.gamma_14(a)).collect(),
            twenty_seven: self.form.lambda27_basis().iter().map(|g| self.gamma_27(g)).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Summands {
    pub one: Vec<SparseTensor>,
    pub seven: Vec<SparseTensor>,
    pub fourteen: Vec<SparseTensor>,
    pub twenty_seven: Vec<SparseTensor>,
}

/// Exact ranks certifying injectivity of `Φ` and the position of `Ψ` of each
/// summand relative to `Im Φ`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankCertificate {
    pub rank_phi: usize,
    pub domain_dim: usize,
    /// Dimension of ℝ⁷ ⊗ m and the rank of the spanning set of its four summands.
    pub r7_m_dim: usize,
    pub summand_span_rank: usize,
    /// `(summand dimension, rank Ψ(summand), rank [Φ | Ψ(summand)])`.
    pub one: (usize, usize, usize),
    pub seven: (usize, usize, usize),
    pub fourteen: (usize, usize, usize),
    pub twenty_seven: (usize, usize, usize),
}

impl RankCertificate {
    pub fn phi_injective(&self) -> bool {
        self.rank_phi == self.domain_dim
    }

    /// `Ψ(V) ⊂ Im Φ`.
    pub fn contained(part: (usize, usize, usize), rank_phi: usize) -> bool {
        part.2 == rank_phi
    }

    /// `Ψ(V) ∩ Im Φ = 0`.
    pub fn transversal(part: (usize, usize, usize), rank_phi: usize) -> bool {
        part.2 == rank_phi + part.1
    }
}

pub fn rank_certificates(s: &Spaces) -> Result<RankCertificate, EquivarError> {
    let phi = s.phi_matrix()?;
    let rank_phi = phi.rank_fraction_free();
    let parts = s.summands();
    let all: Vec<SparseTensor> =
        parts.one.iter().chain(&parts.seven).chain(&parts.fourteen).chain(&parts.twenty_seven).cloned().collect();
    let span = Matrix::from_columns(
        &all.iter()
            .map(|t| {
                s.r7_m.coords(t).ok_or_else(|| EquivarError::NotInSpace {
                    space: s.r7_m.label().to_string(),
                    source_space: "summand".into(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?,
    );
    let summand_span_rank = span.rank_fraction_free();
    let certify = |vs: &[SparseTensor]| -> Result<(usize, usize, usize), EquivarError> {
        let psi = s.psi_columns(vs)?;
        Ok((vs.len(), psi.rank_fraction_free(), phi.hstack(&psi).rank_fraction_free()))
    };
    Ok(RankCertificate {
        rank_phi,
        domain_dim: s.r7_g2.dim(),
        r7_m_dim: s.r7_m.dim(),
        summand_span_rank,
        one: certify(&parts.one)?,
        seven: certify(&parts.seven)?,
        fourteen: certify(&parts.fourteen)?,
        twenty_seven: certify(&parts.twenty_seven)?,
    })
}

/// Largest entry of `Φ(Σ(Γ)) - Ψ(Γ)` with `Σ(Γ)(Y) = -½ pr_g₂(Y ⌟ Γ₂₇ - ¼ β ∧ Y)`,
/// over every basis `β` and every basis element of Λ³₂₇.
pub fn sigma_solution_residual(s: &Spaces) -> Rational {
    let zero7 = vec![Rational::zero(); 7];
    let mut worst = Rational::zero();
    let mut check = |beta: &[Rational], g27: &Form| {
        let gamma = s.gamma_beta(beta).add(&s.gamma_27(g27));
        let diff = symmetrizer(&s.sigma_of(beta, g27)).sub(&symmetrizer(&gamma));
        for (_, v) in diff.entries() {
            worst = worst.clone().max(v.abs());
        }
    };
    for i in 1..=7 {
        check(&basis_vector(7, i), &Form::zero(7));
    }
    for g in s.form.lambda27_basis() {
        check(&zero7, &g);
    }
    worst
}

/// The constant `c` with `Φ(Σ₀(β)) = c Ψ(β)` for every basis `β`, where
/// `Σ₀(β)(Y) = pr_g₂(β ∧ Y)` and `β` sits in ℝ⁷ ⊗ m through
/// [`Spaces::gamma_vector`]; `None` if the two are not proportional.
pub fn sigma0_constant(s: &Spaces) -> Option<Rational> {
    let mut c: Option<Rational> = None;
    for i in 1..=7 {
        let b = basis_vector(7, i);
        let lhs = symmetrizer(&s.sigma0_of(&b));
        let rhs = symmetrizer(&s.gamma_vector(&b));
        let (k, v) = rhs.entries().next()?;
        let ratio = lhs.get(k) / v;
        if !lhs.sub(&rhs.scale(&ratio)).is_zero() {
            return None;
        }
        match &c {
            Some(prev) if *prev != ratio => return None,
            _ => c = Some(ratio),
        }
    }
    c
}

/// Largest violation of `ξ · F(v) = F(ξ · v)` for `F = Φ` on ℝ⁷ ⊗ g₂ and
/// `F = Ψ` on ℝ⁷ ⊗ m, over all basis elements and all 14 generators; also
/// checks that both domains are invariant.
pub fn equivariance_residual(s: &Spaces) -> Result<Rational, EquivarError> {
    let mut worst = Rational::zero();
    for xi in s.algebra.matrices() {
        for space in [&s.r7_g2, &s.r7_m] {
            space.rep_matrix(xi)?;
            for b in space.basis() {
                let d = symmetrizer(b).act(xi).sub(&symmetrizer(&b.act(xi)));
                for (_, v) in d.entries() {
                    worst = worst.max(v.abs());
                }
            }
        }
    }
    Ok(worst)
}
