//! Exact rational arithmetic on sparse multivariate Laurent polynomials.
//!
//! Every polynomial lives in a [`Ring`]: an ordered list of variable names,
//! each flagged as ordinary or Laurent. Terms are kept in graded
//! lexicographic order and printed highest first.

mod error;
mod matrix;
mod parse;
mod poly;
mod rational;
mod report;
mod ring;

pub use error::AlgebraError;
pub use matrix::{determinant_rr, Matrix};
pub use poly::{Mono, Poly};
pub use rational::{LinearForm, RestrictedRational};
pub use report::{all_passed, Check};
pub use ring::Ring;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact scalar type used throughout.
pub type Q = BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `n / d` as an exact rational.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}
