use exalg::{ascending, Form};
use g2kit::G2Form;
use ratlin::{q, qi, Matrix, Rational, Signed, Zero};

/// The seven linear equations cutting out g₂ inside Λ²(ℝ⁷), as
/// `(coefficient, i, j)` terms in `ω_ij`.
pub const G2_EQUATIONS: [[(i64, usize, usize); 3]; 7] = [
    [(1, 1, 2), (1, 3, 4), (1, 5, 6)],
    [(-1, 1, 3), (1, 2, 4), (-1, 6, 7)],
    [(1, 1, 4), (1, 2, 3), (1, 5, 7)],
    [(1, 1, 6), (1, 2, 5), (-1, 3, 7)],
    [(1, 1, 5), (-1, 2, 6), (-1, 4, 7)],
    [(1, 1, 7), (1, 3, 6), (1, 4, 5)],
    [(1, 2, 7), (1, 3, 5), (-1, 4, 6)],
];

/// Residuals of the seven equations on a 2-form.
pub fn g2_equations(a: &Form) -> Vec<Rational> {
    G2_EQUATIONS
        .iter()
        .map(|eq| eq.iter().fold(Rational::zero(), |s, &(c, i, j)| s + a.eval(&[i, j]) * qi(c)))
        .collect()
}

/// 2-forms as endomorphisms of ℝ⁷: `e_j ↦ Σ_k α(e_j, e_k) e_k`, so column
/// `j` holds the image of `e_j`.
pub fn endomorphism(a: &Form) -> Matrix<Rational> {
    Matrix::from_fn(7, 7, |k, j| a.eval(&[j + 1, k + 1]))
}

/// Inverse of [`endomorphism`] on skew matrices.
pub fn two_form(m: &Matrix<Rational>) -> Form {
    Form::from_fn(7, 2, |ix| m[(ix[1] - 1, ix[0] - 1)].clone())
}

/// The Lie algebra g₂ ⊂ so(7) = Λ², with a basis orthogonal for the form
/// inner product.
#[derive(Debug, Clone, PartialEq)]
pub struct G2Algebra {
    basis: Vec<Form>,
    matrices: Vec<Matrix<Rational>>,
}

impl G2Algebra {
    /// Solves the seven equations on Λ² and orthogonalizes the solutions.
    pub fn build() -> Self {
        let blades = ascending(7, 2);
        let system = Matrix::from_fn(7, blades.len(), |r, c| {
            G2_EQUATIONS[r]
                .iter()
                .find(|&&(_, i, j)| blades[c] == [i, j])
                .map_or_else(Rational::zero, |&(k, _, _)| qi(k))
        });
        let raw: Vec<Form> =
            system.kernel().into_iter().map(|v| Form::from_terms(7, blades.iter().cloned().zip(v))).collect();
        let mut basis: Vec<Form> = Vec::new();
        for f in raw {
            let mut g = f;
            for b in &basis {
                let c = g.inner(b) / b.norm_sq();
                g = &g - &b.scale(&c);
            }
            basis.push(g);
        }
        let matrices = basis.iter().map(endomorphism).collect();
        G2Algebra { basis, matrices }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Form] {
        &self.basis
    }

    pub fn matrices(&self) -> &[Matrix<Rational>] {
        &self.matrices
    }

    /// `true` iff `a` satisfies the seven equations.
    pub fn contains(a: &Form) -> bool {
        g2_equations(a).iter().all(Zero::is_zero)
    }

    /// Largest violation of the seven equations by `[ξ_a, ξ_b]` over all
    /// pairs of basis elements.
    pub fn closure_residual(&self) -> Rational {
        let mut worst = Rational::zero();
        for a in &self.matrices {
            for b in &self.matrices {
                let br = two_form(&a.commutator(b));
                for r in g2_equations(&br) {
                    worst = worst.max(r.abs());
                }
            }
        }
        worst
    }

    /// Largest coefficient of `ξ · ω³` over the basis; zero since g₂ is the
    /// stabilizer of `ω³`.
    pub fn stabilizer_residual(&self, g: &G2Form) -> Rational {
        self.basis.iter().map(|b| g.act(b, g.omega()).max_abs()).max().unwrap_or_else(Rational::zero)
    }

    /// Coefficients of the Casimir sum `Σ_a ρ(ξ_a)² / |ξ_a|²`.
    pub fn casimir_weights(&self) -> Vec<Rational> {
        self.basis.iter().map(|b| q(1, 1) / b.norm_sq()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endomorphism_roundtrip() {
        let a = Form::parse(7, "e12 - 3*e47").unwrap();
        let m = endomorphism(&a);
        // e1 ↦ α(e1, e2) e2
        assert_eq!(m[(1, 0)], qi(1));
        assert_eq!(two_form(&m), a);
    }

    #[test]
    fn basis_is_orthogonal() {
        let g = G2Algebra::build();
        for (i, a) in g.basis().iter().enumerate() {
            for b in &g.basis()[i + 1..] {
                assert!(a.inner(b).is_zero());
            }
        }
    }
}
