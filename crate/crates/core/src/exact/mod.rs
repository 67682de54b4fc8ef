//! Exact scalars, multivariate polynomials, rational functions and linear
//! algebra.

pub mod frac;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use frac::{over_common_denominator, RatFrac};
pub use matrix::{RatMatrix, RowReducer};
pub use poly::{compositions, monomial_sum, Monomial, MultiPoly};
pub use rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("arity mismatch: {left} vs {right}")]
pub struct ArityMismatch {
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FracError {
    #[error("division by zero")]
    DivisionByZero,
}
