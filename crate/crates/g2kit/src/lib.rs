//! G₂-structures on 7-dimensional Lie algebras with an orthonormal frame.
//!
//! The intrinsic torsion `Γ ∈ ℝ⁷ ⊗ m` is read off from `∇^g ω³` and split as
//! `λ Id ⊕ β ⊕ Γ₂₇ ⊕ (Λ²₁₄ obstruction)`. When the obstruction vanishes the
//! unique metric connection with skew torsion preserving `ω³` has torsion
//! `T = (1/6)(dω³, *ω³) ω³ - *dω³ + *(β ∧ ω³)`.
//!
//! 2-forms act on forms as derivations with `e_j ↦ Σ_k α(e_j, e_k) e_k`.

mod form;
mod identities;
mod structure;

pub use form::{act, G2Form, ThreeFormParts, CANONICAL};
pub use identities::{
    constant_identities, d_omega_decomposition, nearly_parallel_algebra, ricci_flat_conditions, NearlyParallelReport,
    RicciFlatConditions,
};
pub use structure::{G2Structure, TorsionClass};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum G2Error {
    #[error("expected dimension 7, got {0}")]
    WrongDimension(usize),
    #[error("expected a form of degree {expected}")]
    WrongDegree { expected: usize },
    #[error("not a G2 3-form in an orthonormal frame")]
    NotG2Form,
    #[error("no connection with skew torsion preserves the G2-structure: Λ²₁₄ component {obstruction}")]
    NoSkewConnection { obstruction: String },
    #[error("structure is not cocalibrated")]
    NotCocalibrated,
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Lie(#[from] liegeom::LieError),
}
