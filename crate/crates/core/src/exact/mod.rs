//! Exact scalar and dense-matrix arithmetic over the Gaussian rationals ℚ(i).
//!
//! Everything here is exact: there is no floating-point path. Scalars are
//! canonical after every operation so equality is structural.

mod matrix;
mod scalar;
mod univariate;

pub use matrix::SquareMatrix;
pub use scalar::{format_rational, parse_rational, GaussianRational};
pub use univariate::UnivariatePolynomial;

pub(crate) use matrix::rank_of_rows;
