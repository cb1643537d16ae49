//! Almost contact metric and almost hermitian structures on Lie algebras
//! with an orthonormal frame.
//!
//! Conventions: endomorphisms act on columns, `F(X, Y) = g(X, φY)` and
//! `Ω(X, Y) = g(X, JY)`. The Nijenhuis tensor is
//! `N(X,Y) = [φX, φY] + φ²[X,Y] - φ[φX,Y] - φ[X,φY] + dη(X,Y) ξ`
//! (without the last term for `J`), lowered as `N(X,Y,Z) = g(N(X,Y), Z)`.

mod contact;
pub mod fixtures;
mod hermitian;
mod nearly_kaehler;
mod nijenhuis;
mod ricci;
pub mod tables;

pub use contact::{AlmostContact, ChainReport, ContactClass, SasakianRicci};
pub use hermitian::AlmostHermitian;
pub use nearly_kaehler::{nearly_kaehler_algebra, NearlyKaehlerReport};
pub use nijenhuis::NijTensor;
pub use ricci::{RicciForms, TraceKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AcsError {
    #[error("dimension {dim} is not {parity}")]
    WrongDimension { dim: usize, parity: &'static str },
    #[error("not an almost contact metric structure: {0}")]
    NotAlmostContact(String),
    #[error("not an almost hermitian structure: {0}")]
    NotAlmostHermitian(String),
    #[error("no connection with skew torsion: the Nijenhuis tensor is not totally skew (defect {defect})")]
    NijenhuisNotSkew { defect: String },
    #[error("no connection with skew torsion: ξ is not a Killing vector field (defect {defect})")]
    NotKilling { defect: String },
    #[error("no hermitian connection with skew torsion on an almost Kähler, non-Kähler structure (Nijenhuis defect {defect})")]
    AlmostKaehler { defect: String },
    #[error("structure is not Sasakian")]
    NotSasakian,
    #[error("invalid deformation: {0}")]
    BadDeformation(String),
    #[error(transparent)]
    Lie(#[from] liegeom::LieError),
}

impl AcsError {
    /// `true` for the errors stating that no connection with skew torsion
    /// preserves the structure.
    pub fn is_no_skew_connection(&self) -> bool {
        matches!(self, AcsError::NijenhuisNotSkew { .. } | AcsError::NotKilling { .. } | AcsError::AlmostKaehler { .. })
    }
}
