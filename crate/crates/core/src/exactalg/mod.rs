//! Exact scalar arithmetic: arbitrary-precision rationals, univariate
//! polynomials in `t` and reduced rational functions in `t`.

mod tpoly;
mod trat;

pub use tpoly::{interpolate, TPoly};
pub use trat::TRat;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("rational function is not a polynomial (denominator {0})")]
    NonPolynomial(String),
    #[error("interpolation needs {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("interpolation points have a repeated abscissa")]
    DuplicateAbscissa,
    #[error("interpolation data inconsistent with the degree bound at t = {0}")]
    InconsistentData(BigInt),
}
