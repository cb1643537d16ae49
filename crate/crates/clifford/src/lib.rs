//! Exact complex spin representations `Δ_n`, `2 <= n <= 8`, with Clifford
//! relation `e_i · e_j + e_j · e_i = -2 δ_ij`.

mod eigen;
mod five;
mod rep;

pub use eigen::{common_kernel, eigenvalues, restrict, span_is_invariant, EigenReport};
pub use five::{distinguished_spinors_5d, kernel_conditions_5d, kernel_membership_5d, SpinorType};
pub use rep::{is_zero_spinor, GammaRep, Monomial};

use ratlin::{Gauss, Matrix};

/// Endomorphism of the spinor module.
pub type SpinEndo = Matrix<Gauss>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("spin representations are built for dimensions 2..=8, not {0}")]
    UnsupportedDimension(usize),
    #[error("form lives in dimension {form}, representation in dimension {rep}")]
    DimensionMismatch { form: usize, rep: usize },
    #[error("endomorphisms of sizes {0} and {1} cannot be combined")]
    SizeMismatch(usize, usize),
}
