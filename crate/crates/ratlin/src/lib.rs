//! Exact linear algebra over the rationals and the Gaussian rationals.
//!
//! Everything here is exact: there are no tolerances anywhere. Floating point
//! is used in exactly one place, [`roots::exact_roots`], to *propose* root
//! candidates which are then verified and deflated exactly.

pub mod matrix;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod tensor;

pub use matrix::Matrix;
pub use poly::Poly;
pub use roots::{exact_roots, RootReport};
pub use scalar::{fmt_gauss, fmt_rational, g, gq, parse_rational, q, qi, Field, Gauss, ParseRationalError, Rational};
pub use tensor::Tensor;

pub use num::{BigInt, One, Signed, Zero};
