//! Exact exterior algebra over `R^n` (`n <= 8`) with an oriented orthonormal
//! coframe `e_1, ..., e_n`.

mod form;
mod parse;
mod sigma;

pub use form::{ascending, mask_indices, normalize, Form, Mask, MAX_DIM};
pub use parse::{parse_form, ParseError};
pub use sigma::{sigma_t, sigma_t_quadratic};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExalgError {
    #[error("frame dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("expected a form of degree {expected}")]
    WrongDegree { expected: usize },
}

/// The 1-based coframe index `e_i` as a coefficient vector.
pub fn basis_vector(dim: usize, i: usize) -> Vec<ratlin::Rational> {
    (1..=dim).map(|k| if k == i { ratlin::qi(1) } else { ratlin::qi(0) }).collect()
}
