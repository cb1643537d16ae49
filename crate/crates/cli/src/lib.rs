//! Verification driver: a registry of Lie algebra models carrying G₂,
//! almost contact metric or almost hermitian structures, a JSON model file
//! format, exact check suites and machine-readable reports.

pub mod commands;
pub mod conventions;
pub mod modelfile;
pub mod registry;
pub mod report;
pub mod suites;

pub use registry::{Entry, Structure};
pub use report::{Basis, Check, Report, Status};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error("unknown suite `{0}`; expected one of: {list}", list = suites::SUITES.join(", "))]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(#[from] exalg::ParseError),
    #[error("invalid model file {path}: {message}")]
    ModelFile { path: String, message: String },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Lie(#[from] liegeom::LieError),
    #[error(transparent)]
    G2(#[from] g2kit::G2Error),
    #[error(transparent)]
    Acs(#[from] acskit::AcsError),
    #[error(transparent)]
    Clifford(#[from] clifford::CliffordError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Every error is a usage or input error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
