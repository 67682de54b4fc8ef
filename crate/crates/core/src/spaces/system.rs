//! Linear constraint systems over a finite parameter basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::matrix::canonical_span;
use crate::exact::{Monomial, MultiPoly, RatFrac, Rational, RowReducer};
use crate::words::{NCPoly, Word};

/// Row label: which identity, and which coefficient of it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Key {
    Word(u32, Word),
    Mono(u32, Monomial),
}

/// Columns are parameters; each column contributes its image under every
/// constraint as `(row key, coefficient)` pairs. Rows are the distinct keys.
#[derive(Debug)]
pub struct ConstraintSystem {
    columns: usize,
    rows: BTreeMap<Key, Vec<(usize, Rational)>>,
}

impl ConstraintSystem {
    pub fn new(columns: usize) -> Self {
        ConstraintSystem { columns, rows: BTreeMap::new() }
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn add(&mut self, col: usize, key: Key, c: Rational) {
        if !c.is_zero() {
            self.rows.entry(key).or_default().push((col, c));
        }
    }

    pub fn add_poly(&mut self, col: usize, tag: u32, p: &MultiPoly) {
        for (m, c) in p.terms() {
            self.add(col, Key::Mono(tag, m.clone()), c.clone());
        }
    }

    /// A polynomial-valued constraint; panics on a rational value (callers
    /// clear denominators first).
    pub fn add_frac(&mut self, col: usize, tag: u32, f: &RatFrac) {
        let p = f.as_poly().expect("constraint value must be polynomial");
        self.add_poly(col, tag, p);
    }

    pub fn add_words(&mut self, col: usize, tag: u32, f: &NCPoly) {
        for (w, c) in f.terms() {
            self.add(col, Key::Word(tag, *w), c.clone());
        }
    }

    /// Canonical basis of the solution space: reduced echelon form with
    /// pivots on the earliest parameters.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut red = RowReducer::new(self.columns);
        for entries in self.rows.values() {
            if red.is_full() {
                return Vec::new();
            }
            red.push_sparse(entries);
        }
        canonical_span(&red.nullspace(), self.columns)
    }
}

/// `Σ v_j · basis_j` for word-valued parameters.
pub fn combine_words(v: &[Rational], basis: &[NCPoly]) -> NCPoly {
    let mut out = NCPoly::zero();
    for (c, b) in v.iter().zip(basis) {
        if !c.is_zero() {
            out.add_scaled(b, c);
        }
    }
    out
}
