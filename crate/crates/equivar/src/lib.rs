//! The Lie algebra g₂ ⊂ so(7) and its action on tensor spaces over ℝ⁷.
//!
//! Everything lives inside `⊗ᵖ ℝ⁷` as sparse exact tensors; an invariant
//! subspace is stored with a reduced basis so coordinates are read off at
//! pivot entries. Ranks use fraction-free elimination and Casimir
//! eigenvalues are found exactly.

mod algebra;
mod casimir;
mod maps;
mod space;
mod tensor;

pub use algebra::{endomorphism, g2_equations, two_form, G2Algebra, G2_EQUATIONS};
pub use casimir::{
    casimir, casimir_commutator_residual, casimir_decompose, exterior_space, projection_residual, Calibration,
    IsotypicComponent, IsotypicReport,
};
pub use maps::{
    equivariance_residual, one_form_valued, rank_certificates, sigma0_constant, sigma_solution_residual, symmetrizer,
    RankCertificate, Spaces, Summands,
};
pub use space::TensorSpace;
pub use tensor::SparseTensor;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EquivarError {
    #[error("image of {source_space} is not contained in {space}")]
    NotInSpace { space: String, source_space: String },
    #[error("Casimir is not scalar on the calibration space {0}")]
    NotIrreducible(String),
    #[error("Casimir spectrum is not rational")]
    IrrationalSpectrum,
    #[error("Casimir eigenspaces do not span the space")]
    NotDiagonalizable,
}
