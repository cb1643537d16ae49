//! Geometry of a Lie group with a left-invariant metric, in an orthonormal
//! left-invariant coframe `e_1, ..., e_n` given by its structure equations
//! `de_k`. All tensors are invariant, so everything reduces to constant
//! tables.
//!
//! Conventions, fixed throughout:
//! - `c_ijk = g([e_i, e_j], e_k) = -de_k(e_i, e_j)`;
//! - connection coefficients `ω_ijk = g(∇_{e_i} e_j, e_k)`;
//! - `R(X,Y,Z,V) = g(∇_X ∇_Y Z - ∇_Y ∇_X Z - ∇_{[X,Y]} Z, V)`;
//! - `Ric(X,Y) = Σ_i R(e_i, X, Y, e_i)`, `Scal = Σ_ij R(e_i, e_j, e_j, e_i)`.
//!
//! Tensor tables from [`ratlin::Tensor`] are indexed from 0; form and frame
//! indices in the public API are 1-based.

mod connection;
mod model;
mod section2;
mod spinor;

pub use connection::{Connection, Curvature};
pub use model::LieModel;
pub use section2::{verify_section2, IdentityResidual};
pub use spinor::{parallel_spinors, verify_sl_formula, SlReport, SpinorConnection};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("structure equations must list {expected} differentials, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("de{index} is not a 2-form in dimension {dim}")]
    NotATwoForm { index: usize, dim: usize },
    #[error("Jacobi identity fails: d(de{index}) = {residual}")]
    Jacobi { index: usize, residual: String },
    #[error("torsion must be a 3-form in dimension {dim}")]
    BadTorsion { dim: usize },
    #[error(transparent)]
    Clifford(#[from] clifford::CliffordError),
}
