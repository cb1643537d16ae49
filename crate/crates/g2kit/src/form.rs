use exalg::{ascending, Form};
use ratlin::{q, qi, Matrix, Rational, Zero};

use crate::G2Error;

/// `e127 + e135 - e146 - e236 - e245 + e347 + e567`.
pub const CANONICAL: &str = "e127 + e135 - e146 - e236 - e245 + e347 + e567";

/// A G₂ 3-form on ℝ⁷ in an orthonormal frame, with its dual 4-form and the
/// contractions `e_i ⌟ ω³`, `e_i ⌟ *ω³` cached.
#[derive(Debug, Clone, PartialEq)]
pub struct G2Form {
    omega: Form,
    star: Form,
    contr: Vec<Form>,
    star_contr: Vec<Form>,
}

/// The three type components of a 3-form.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeFormParts {
    pub one: Form,
    pub seven: Form,
    pub twenty_seven: Form,
}

impl G2Form {
    pub fn canonical() -> Self {
        Self::build(Form::parse(7, CANONICAL).expect("canonical form literal"))
    }

    /// Accepts `ω³` when `(ω³, ω³) = 7`, `*(ω³ ∧ (e_i ⌟ ω³)) = 2 e_i ⌟ ω³`
    /// and `(e_i ⌟ *ω³, e_j ⌟ *ω³) = 4δ_ij` for every basis vector.
    pub fn new(omega: Form) -> Result<Self, G2Error> {
        if omega.dim() != 7 {
            return Err(G2Error::WrongDimension(omega.dim()));
        }
        if !omega.has_degree(3) || omega.norm_sq() != qi(7) {
            return Err(G2Error::NotG2Form);
        }
        let g = Self::build(omega);
        for i in 0..7 {
            if g.omega.wedge(&g.contr[i]).hodge() != g.contr[i].scale(&qi(2)) {
                return Err(G2Error::NotG2Form);
            }
            for j in 0..7 {
                let expected = if i == j { qi(4) } else { qi(0) };
                if g.star_contr[i].inner(&g.star_contr[j]) != expected {
                    return Err(G2Error::NotG2Form);
                }
            }
        }
        Ok(g)
    }

    fn build(omega: Form) -> Self {
        let star = omega.hodge();
        let contr = (1..=7).map(|i| omega.interior_e(i)).collect();
        let star_contr = (1..=7).map(|i| star.interior_e(i)).collect();
        G2Form { omega, star, contr, star_contr }
    }

    pub fn omega(&self) -> &Form {
        &self.omega
    }

    pub fn star_omega(&self) -> &Form {
        &self.star
    }

    /// `e_i ⌟ ω³`, 1-based.
    pub fn contraction(&self, i: usize) -> &Form {
        &self.contr[i - 1]
    }

    /// `e_i ⌟ *ω³`, 1-based.
    pub fn star_contraction(&self, i: usize) -> &Form {
        &self.star_contr[i - 1]
    }

    /// `X ⌟ ω³`.
    pub fn vector_to_two_form(&self, x: &[Rational]) -> Form {
        self.omega.interior(x)
    }

    /// `X ⌟ *ω³`.
    pub fn vector_to_three_form(&self, x: &[Rational]) -> Form {
        self.star.interior(x)
    }

    /// The vector `Z` with `pr_m(α) = Z ⌟ ω³`.
    pub fn two_form_vector(&self, a: &Form) -> Vec<Rational> {
        self.contr.iter().map(|c| c.inner(a) * q(1, 3)).collect()
    }

    /// The vector `Z` with `π₇(α) = Z ⌟ *ω³`.
    pub fn three_form_vector(&self, a: &Form) -> Vec<Rational> {
        self.star_contr.iter().map(|c| c.inner(a) * q(1, 4)).collect()
    }

    /// `pr_m(α) = ⅓ Σ (e_i ⌟ ω³, α) e_i ⌟ ω³`, the Λ²₇ part.
    pub fn pr_m(&self, a: &Form) -> Form {
        self.vector_to_two_form(&self.two_form_vector(a))
    }

    /// `pr_g₂(α) = α - pr_m(α)`, the Λ²₁₄ part.
    pub fn pr_g2(&self, a: &Form) -> Form {
        a - &self.pr_m(a)
    }

    /// Splits a 2-form into its Λ²₇ and Λ²₁₄ parts.
    pub fn project2(&self, a: &Form) -> Result<(Form, Form), G2Error> {
        self.check(a, 2)?;
        let seven = self.pr_m(a);
        let fourteen = a - &seven;
        Ok((seven, fourteen))
    }

    /// Splits a 3-form into its Λ³₁, Λ³₇ and Λ³₂₇ parts.
    pub fn project3(&self, a: &Form) -> Result<ThreeFormParts, G2Error> {
        self.check(a, 3)?;
        let one = self.omega.scale(&(a.inner(&self.omega) * q(1, 7)));
        let seven = self.vector_to_three_form(&self.three_form_vector(a));
        let twenty_seven = &(a - &one) - &seven;
        Ok(ThreeFormParts { one, seven, twenty_seven })
    }

    /// Action of a 2-form `α ∈ so(7)` on forms as a derivation, with
    /// `e_j ↦ Σ_k α(e_j, e_k) e_k`. In this convention
    /// `ϱ(Z ⌟ ω³) ω³ = -3 Z ⌟ *ω³`.
    pub fn act(&self, alpha: &Form, f: &Form) -> Form {
        act(alpha, f)
    }

    /// A basis of Λ³₂₇: 3-forms `γ` with `γ ∧ ω³ = 0` and `γ ∧ *ω³ = 0`.
    pub fn lambda27_basis(&self) -> Vec<Form> {
        let blades = ascending(7, 3);
        let images: Vec<Vec<Rational>> = blades
            .iter()
            .map(|b| {
                let f = Form::blade(7, b);
                let w6 = f.wedge(&self.omega);
                let mut v: Vec<Rational> = ascending(7, 6).iter().map(|ix| w6.eval(ix)).collect();
                v.push(f.wedge(&self.star).eval(&[1, 2, 3, 4, 5, 6, 7]));
                v
            })
            .collect();
        let m = Matrix::from_columns(&images);
        m.kernel().into_iter().map(|k| Form::from_terms(7, blades.iter().cloned().zip(k))).collect()
    }

    fn check(&self, a: &Form, p: usize) -> Result<(), G2Error> {
        if a.dim() != 7 {
            return Err(G2Error::WrongDimension(a.dim()));
        }
        if !a.has_degree(p) {
            return Err(G2Error::WrongDegree { expected: p });
        }
        Ok(())
    }
}

impl Default for G2Form {
    fn default() -> Self {
        Self::canonical()
    }
}

/// Derivation action of the 2-form `α` on `f`, `e_j ↦ Σ_k α(e_j, e_k) e_k`.
pub fn act(alpha: &Form, f: &Form) -> Form {
    let n = f.dim();
    let mut out = Form::zero(n);
    for (idx, c) in f.terms() {
        for p in 0..idx.len() {
            for l in 1..=n {
                let a = alpha.eval(&[idx[p], l]);
                if a.is_zero() || (l != idx[p] && idx.contains(&l)) {
                    continue;
                }
                let mut swapped = idx.clone();
                swapped[p] = l;
                out += &Form::term(n, &swapped, &c * &a);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use exalg::basis_vector;

    #[test]
    fn canonical_form_passes_its_own_checks() {
        let g = G2Form::canonical();
        assert!(G2Form::new(g.omega().clone()).is_ok());
        assert!(matches!(G2Form::new(Form::parse(7, "e123").unwrap()), Err(G2Error::NotG2Form)));
    }

    #[test]
    fn action_on_omega_has_constant_minus_three() {
        let g = G2Form::canonical();
        for i in 1..=7 {
            let z = basis_vector(7, i);
            let lhs = g.act(&g.vector_to_two_form(&z), g.omega());
            assert_eq!(lhs, g.vector_to_three_form(&z).scale(&qi(-3)));
        }
    }

    #[test]
    fn lambda27_has_dimension_27() {
        let g = G2Form::canonical();
        let b = g.lambda27_basis();
        assert_eq!(b.len(), 27);
        for f in &b {
            let parts = g.project3(f).unwrap();
            assert!(parts.one.is_zero() && parts.seven.is_zero());
        }
    }

    #[test]
    fn g2_element_has_no_seven_part() {
        let g = G2Form::canonical();
        let (seven, fourteen) = g.project2(&Form::parse(7, "e12 - e34").unwrap()).unwrap();
        assert!(seven.is_zero());
        assert_eq!(fourteen, Form::parse(7, "e12 - e34").unwrap());
    }
}
