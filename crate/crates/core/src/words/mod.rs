//! Words, noncommutative polynomials in x and y, free Lie algebra
//! structure, and derivations of the free algebra.

pub mod derivation;
pub mod lie;
pub mod ncpoly;
pub mod push;
pub mod word;

pub use derivation::{
    angle_bracket, apply_derivation, delta_2n, divergence, nu_twist, partner, partner_d, poisson_bracket,
    DerivationMode, DerivationPair,
};
pub use lie::{
    c_generator, c_monomial, dynkin, from_c_basis, is_lie_element, lie_bracket, lyndon_lie_basis,
    lyndon_lie_basis_bidegree, to_c_basis,
};
pub use ncpoly::{trace_project, Decomposition, NCPoly, TraceVector};
pub use push::{
    circ_constant_value_homogeneous, is_circ_constant_poly, is_circ_neutral_poly, is_push_constant, is_push_invariant,
    is_push_neutral, tail_form_circ_constant_value, CircMode,
};
pub use word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WordsError {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is not in the span of C-monomials")]
    NotInCSpan,
    #[error("no partner exists (input is not push-invariant)")]
    PartnerNotFound,
    #[error("operation requires an E-mode derivation")]
    WrongMode,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}
