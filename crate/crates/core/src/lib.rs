//! Exact mould calculus, free Lie algebra tools and linear solvers for the
//! Kashiwara-Vergne family of Lie algebras (krv, lkv, krv_ell) and the
//! elliptic double shuffle space ds_ell.

pub mod ari;
pub mod exact;
pub mod fixtures;
pub mod maps;
pub mod mould;
pub mod properties;
pub mod random;
pub mod spaces;
pub mod words;
