use exalg::{mask_indices, Form};
use ratlin::{Gauss, Matrix, Rational, Zero};

use crate::{CliffordError, SpinEndo};

/// A matrix with exactly one nonzero entry `i^phase[r]` per row `r`, in
/// column `col[r]`. Every Clifford monomial has this shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    col: Vec<usize>,
    phase: Vec<u8>,
}

impl Monomial {
    pub fn identity(size: usize) -> Self {
        Monomial { col: (0..size).collect(), phase: vec![0; size] }
    }

    pub fn size(&self) -> usize {
        self.col.len()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let col = self.col.iter().map(|&c| rhs.col[c]).collect();
        let phase = self.col.iter().zip(&self.phase).map(|(&c, &p)| (p + rhs.phase[c]) % 4).collect();
        Monomial { col, phase }
    }

    fn times_i_pow(mut self, k: u8) -> Monomial {
        for p in &mut self.phase {
            *p = (*p + k) % 4;
        }
        self
    }

    fn kron(&self, rhs: &Monomial) -> Monomial {
        let m = rhs.size();
        let mut col = Vec::with_capacity(self.size() * m);
        let mut phase = Vec::with_capacity(self.size() * m);
        for r in 0..self.size() {
            for s in 0..m {
                col.push(self.col[r] * m + rhs.col[s]);
                phase.push((self.phase[r] + rhs.phase[s]) % 4);
            }
        }
        Monomial { col, phase }
    }

    /// Adds `c · self` into `acc`.
    pub fn accumulate(&self, c: &Rational, acc: &mut SpinEndo) {
        for (r, (&col, &p)) in self.col.iter().zip(&self.phase).enumerate() {
            let e = &mut acc[(r, col)];
            match p {
                0 => e.re += c,
                1 => e.im += c,
                2 => e.re -= c,
                _ => e.im -= c,
            }
        }
    }

    pub fn to_matrix(&self) -> SpinEndo {
        let mut m = Matrix::zeros(self.size(), self.size());
        self.accumulate(&Rational::from_integer(1.into()), &mut m);
        m
    }
}

fn pauli(k: u8) -> Monomial {
    match k {
        0 => Monomial::identity(2),
        1 => Monomial { col: vec![1, 0], phase: vec![0, 0] },
        2 => Monomial { col: vec![1, 0], phase: vec![3, 1] },
        _ => Monomial { col: vec![0, 1], phase: vec![0, 2] },
    }
}

/// Gamma matrices `Γ_1, ..., Γ_n` of size `2^⌊n/2⌋` built from Kronecker
/// products of Pauli matrices:
/// `Γ_{2k+1} = i σ3^{⊗k} ⊗ σ1 ⊗ 1...`, `Γ_{2k+2} = i σ3^{⊗k} ⊗ σ2 ⊗ 1...`
/// and, for odd `n`, `Γ_n = -i σ3^{⊗m}`. The last sign makes the 7-dimensional
/// `ω³` act with the simple eigenvalue `-7`.
#[derive(Debug, Clone)]
pub struct GammaRep {
    dim: usize,
    gammas: Vec<Monomial>,
}

impl GammaRep {
    pub fn new(n: usize) -> Result<Self, CliffordError> {
        if !(2..=8).contains(&n) {
            return Err(CliffordError::UnsupportedDimension(n));
        }
        let m = n / 2;
        let factors = |k: usize, mid: u8| -> Monomial {
            (0..m).fold(Monomial::identity(1), |acc, j| {
                let f = if j < k {
                    3
                } else if j == k {
                    mid
                } else {
                    0
                };
                acc.kron(&pauli(f))
            })
        };
        let mut gammas = Vec::with_capacity(n);
        for k in 0..m {
            gammas.push(factors(k, 1).times_i_pow(1));
            gammas.push(factors(k, 2).times_i_pow(1));
        }
        if n % 2 == 1 {
            gammas.push(factors(m, 0).times_i_pow(3));
        }
        Ok(GammaRep { dim: n, gammas })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Size of the spinor module, `2^⌊n/2⌋`.
    pub fn size(&self) -> usize {
        1 << (self.dim / 2)
    }

    /// `Γ_i` for a 1-based index.
    pub fn gamma(&self, i: usize) -> SpinEndo {
        self.gammas[i - 1].to_matrix()
    }

    /// `Γ_{i1} ⋯ Γ_{ip}` for 1-based indices.
    pub fn product(&self, indices: &[usize]) -> Monomial {
        indices.iter().fold(Monomial::identity(self.size()), |acc, &i| acc.mul(&self.gammas[i - 1]))
    }

    /// Clifford multiplication by a (possibly inhomogeneous) form:
    /// `e_{i1} ∧ ... ∧ e_{ip} ↦ Γ_{i1} ⋯ Γ_{ip}` for ascending blades.
    pub fn try_act_form(&self, a: &Form) -> Result<SpinEndo, CliffordError> {
        if a.dim() != self.dim {
            return Err(CliffordError::DimensionMismatch { form: a.dim(), rep: self.dim });
        }
        let mut out = Matrix::zeros(self.size(), self.size());
        for (&mask, c) in a.raw_terms() {
            self.product(&mask_indices(mask)).accumulate(c, &mut out);
        }
        Ok(out)
    }

    /// # Panics
    ///
    /// Panics when the form lives in another dimension.
    pub fn act_form(&self, a: &Form) -> SpinEndo {
        self.try_act_form(a).expect("form and representation dimensions differ")
    }

    /// Clifford multiplication by the vector `Σ x_i e_i`.
    pub fn act_vector(&self, x: &[Rational]) -> SpinEndo {
        self.act_form(&Form::vector(x))
    }

    /// Applies an endomorphism to a spinor.
    pub fn apply(e: &SpinEndo, psi: &[Gauss]) -> Vec<Gauss> {
        e.mul_vec(psi)
    }

    /// `true` iff the Clifford image of a `p`-form is hermitian rather than
    /// anti-hermitian: `(Γ_I)^* = (-1)^{p(p+1)/2} Γ_I`.
    pub fn degree_is_hermitian(p: usize) -> bool {
        (p * (p + 1) / 2) % 2 == 0
    }
}

/// All spinor entries zero.
pub fn is_zero_spinor(psi: &[Gauss]) -> bool {
    psi.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratlin::g;

    #[test]
    fn clifford_relations_hold_in_every_dimension() {
        for n in 2..=8 {
            let rep = GammaRep::new(n).unwrap();
            let id = Matrix::<Gauss>::identity(rep.size());
            for i in 1..=n {
                for j in 1..=n {
                    let (a, b) = (rep.gamma(i), rep.gamma(j));
                    let anti = &(&a * &b) + &(&b * &a);
                    let want = if i == j { id.scale(&g(-2, 0)) } else { Matrix::zeros(rep.size(), rep.size()) };
                    assert_eq!(anti, want, "n={n} i={i} j={j}");
                }
                assert!(rep.gamma(i).is_antihermitian());
            }
        }
    }

    #[test]
    fn monomial_product_matches_matrix_product() {
        let rep = GammaRep::new(7).unwrap();
        let dense = &(&rep.gamma(2) * &rep.gamma(5)) * &rep.gamma(7);
        assert_eq!(rep.product(&[2, 5, 7]).to_matrix(), dense);
    }

    #[test]
    fn rejects_unsupported_dimension() {
        assert_eq!(GammaRep::new(9).unwrap_err(), CliffordError::UnsupportedDimension(9));
        assert!(GammaRep::new(1).is_err());
    }
}
