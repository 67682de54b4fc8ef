//! Moulds: depth-indexed families of rational functions.
//!
//! A mould `A` assigns to each depth `r` a rational function `A^r` in `r`
//! variables (`u₁…u_r` on the U side, `v₁…v_r` on the V side); the depth-0
//! value is a scalar. Values may be known only up to a truncation depth,
//! which binary operations propagate as a minimum.

pub mod json;
pub mod ma;
pub mod ops;
pub mod predicates;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::exact::{MultiPoly, RatFrac, Rational};

pub use json::{from_json, to_json, to_json_pretty};
pub use ma::{ma, ma_inverse, ma_neg, swap_ma_word_route};
pub use ops::{
    circ, dar, dar_inv, dar_inv_exact, delta_inv, delta_op, mantar, neg, pari, push, swap, teru, unary, UnaryOp,
};
pub use predicates::{
    circ_constant, circ_constant_strict, circ_neutral, circ_neutral_star, in_ari_delta, is_alternal,
    is_even_in_depth_one, is_push_invariant, is_senary, is_senary_untwisted, mantar_invariant, predicates,
    star_correction, PredicateReport, StarProperty, Verdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Alphabet {
    U,
    V,
}

impl Alphabet {
    pub fn flip(self) -> Alphabet {
        match self {
            Alphabet::U => Alphabet::V,
            Alphabet::V => Alphabet::U,
        }
    }

    pub fn prefix(self) -> &'static str {
        match self {
            Alphabet::U => "u",
            Alphabet::V => "v",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MouldError {
    #[error("alphabet mismatch: expected {expected:?}, found {found:?}")]
    AlphabetMismatch { expected: Alphabet, found: Alphabet },
    #[error("mould value in depth {depth} is not a polynomial")]
    NonPolynomialValue { depth: usize },
    #[error("depth-{depth} value is not divisible by the required factor")]
    NotDivisible { depth: usize },
    #[error("{0}")]
    Words(#[from] crate::words::WordsError),
    #[error("malformed mould: {0}")]
    Malformed(String),
}

#[derive(Clone)]
pub struct Mould {
    alphabet: Alphabet,
    /// Nonzero values only; the value in depth `r` has arity `r`.
    values: BTreeMap<usize, RatFrac>,
    /// Values are known for depths `≤ bound`; `None` means every depth not
    /// stored is exactly zero.
    bound: Option<usize>,
    weight: Option<usize>,
}

impl Mould {
    pub fn zero(alphabet: Alphabet) -> Self {
        Mould { alphabet, values: BTreeMap::new(), bound: None, weight: None }
    }

    pub fn from_values(alphabet: Alphabet, values: impl IntoIterator<Item = (usize, RatFrac)>) -> Self {
        let mut m = Mould::zero(alphabet);
        for (r, v) in values {
            m.set(r, v);
        }
        m
    }

    pub fn from_polys(alphabet: Alphabet, values: impl IntoIterator<Item = (usize, MultiPoly)>) -> Self {
        Mould::from_values(alphabet, values.into_iter().map(|(r, p)| (r, RatFrac::from_poly(p))))
    }

    /// The mould concentrated in depth `r` with the given value.
    pub fn concentrated(alphabet: Alphabet, r: usize, value: RatFrac) -> Self {
        Mould::from_values(alphabet, [(r, value)])
    }

    /// Constant-valued mould with the given per-depth scalars.
    pub fn constant(alphabet: Alphabet, scalars: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        Mould::from_values(alphabet, scalars.into_iter().map(|(r, c)| (r, RatFrac::scalar(r, c))))
    }

    /// The group unit: 1 in depth 0.
    pub fn unit(alphabet: Alphabet) -> Self {
        Mould::constant(alphabet, [(0, Rational::from_integer(1.into()))])
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn weight(&self) -> Option<usize> {
        self.weight
    }

    pub fn with_weight(mut self, n: Option<usize>) -> Self {
        self.weight = n;
        self
    }

    pub fn with_alphabet(mut self, a: Alphabet) -> Self {
        self.alphabet = a;
        self
    }

    /// Restrict knowledge to depths `≤ d` (keeps the smaller bound).
    pub fn truncate(mut self, d: usize) -> Self {
        let d = self.bound.map_or(d, |b| b.min(d));
        self.bound = Some(d);
        self.values.retain(|r, _| *r <= d);
        self
    }

    /// Declares the stored values complete (every other depth is zero).
    pub fn exact(mut self) -> Self {
        self.bound = None;
        self
    }

    pub fn set(&mut self, r: usize, v: RatFrac) {
        assert_eq!(v.arity(), r, "mould value arity must equal its depth");
        if let Some(b) = self.bound {
            assert!(r <= b, "depth {r} beyond truncation {b}");
        }
        if v.is_zero() {
            self.values.remove(&r);
        } else {
            self.values.insert(r, v);
        }
    }

    pub fn value(&self, r: usize) -> RatFrac {
        self.values.get(&r).cloned().unwrap_or_else(|| RatFrac::zero(r))
    }

    pub fn value_ref(&self, r: usize) -> Option<&RatFrac> {
        self.values.get(&r)
    }

    /// Depth-0 scalar.
    pub fn constant_term(&self) -> Rational {
        self.values.get(&0).and_then(|v| v.as_constant()).unwrap_or_else(Rational::zero)
    }

    /// Depths with nonzero values, ascending.
    pub fn depths(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.keys().copied()
    }

    pub fn values(&self) -> impl Iterator<Item = (usize, &RatFrac)> {
        self.values.iter().map(|(r, v)| (*r, v))
    }

    pub fn max_depth(&self) -> Option<usize> {
        self.values.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.values.values().all(|v| v.is_polynomial())
    }

    /// Largest depth that should be examined: the bound, or the deepest
    /// nonzero value of an exact mould.
    pub fn depth_limit(&self) -> usize {
        self.bound.unwrap_or_else(|| self.max_depth().unwrap_or(0))
    }

    pub fn check_alphabet(&self, expected: Alphabet) -> Result<(), MouldError> {
        if self.alphabet == expected {
            Ok(())
        } else {
            Err(MouldError::AlphabetMismatch { expected, found: self.alphabet })
        }
    }

    /// Apply `f` to every stored value (depth-wise), keeping alphabet and
    /// bound. `f` must send zero to zero.
    pub fn map_values(&self, f: impl Fn(usize, &RatFrac) -> RatFrac) -> Mould {
        let mut out =
            Mould { alphabet: self.alphabet, values: BTreeMap::new(), bound: self.bound, weight: self.weight };
        for (&r, v) in &self.values {
            out.set(r, f(r, v));
        }
        out
    }

    fn combined_bound(&self, other: &Mould) -> Option<usize> {
        match (self.bound, other.bound) {
            (None, b) | (b, None) => b,
            (Some(a), Some(b)) => Some(a.min(b)),
        }
    }

    /// An empty mould carrying the common alphabet and bound of two inputs.
    pub fn empty_like(&self, other: &Mould) -> Mould {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        Mould { alphabet: self.alphabet, values: BTreeMap::new(), bound: self.combined_bound(other), weight: None }
    }

    pub fn empty_with_bound(alphabet: Alphabet, bound: Option<usize>) -> Mould {
        Mould { alphabet, values: BTreeMap::new(), bound, weight: None }
    }

    /// Adds `v` to the depth-`r` value; silently ignored beyond the bound.
    pub fn accumulate(&mut self, r: usize, v: &RatFrac) {
        if self.bound.is_some_and(|b| r > b) || v.is_zero() {
            return;
        }
        let nv = match self.values.get(&r) {
            Some(old) => old + v,
            None => v.clone(),
        };
        self.set(r, nv);
    }

    pub fn add(&self, other: &Mould) -> Mould {
        let mut out = self.empty_like(other);
        for (&r, v) in self.values.iter().chain(other.values.iter()) {
            out.accumulate(r, v);
        }
        if self.weight == other.weight {
            out.weight = self.weight;
        }
        out
    }

    pub fn sub(&self, other: &Mould) -> Mould {
        self.add(&other.neg_values())
    }

    pub fn scale(&self, c: &Rational) -> Mould {
        if c.is_zero() {
            return Mould { values: BTreeMap::new(), ..self.clone() };
        }
        self.map_values(|_, v| v.scale(c))
    }

    /// `−A` (additive inverse; not the `neg` operator on variables).
    pub fn neg_values(&self) -> Mould {
        self.map_values(|_, v| v.neg())
    }

    /// Exact equality on all depths known to both moulds.
    pub fn mould_eq(&self, other: &Mould) -> bool {
        self.first_difference(other).is_none()
    }

    /// The smallest depth at which the two moulds differ, if any.
    pub fn first_difference(&self, other: &Mould) -> Option<usize> {
        if self.alphabet != other.alphabet {
            return Some(0);
        }
        let bound = self.combined_bound(other);
        let depths: std::collections::BTreeSet<usize> =
            self.values.keys().chain(other.values.keys()).copied().collect();
        depths.into_iter().filter(|r| bound.is_none_or(|b| *r <= b)).find(|&r| {
            match (self.values.get(&r), other.values.get(&r)) {
                (Some(a), Some(b)) => !a.frac_eq(b),
                _ => true,
            }
        })
    }

    /// The homogeneous-degree component of total weight `n` (depth-`r` value
    /// of degree `n − r`), for polynomial moulds.
    pub fn weight_part(&self, n: usize) -> Mould {
        let mut out = Mould { values: BTreeMap::new(), ..self.clone() };
        for (&r, v) in &self.values {
            if r > n {
                continue;
            }
            let p = v.as_poly().expect("weight_part needs polynomial values");
            if let Some(part) = p.homogeneous_parts().remove(&((n - r) as u32)) {
                out.set(r, RatFrac::from_poly(part));
            }
        }
        out.weight = Some(n);
        out
    }

    /// Total weights present in a polynomial mould.
    pub fn weights(&self) -> Vec<usize> {
        let mut ws = std::collections::BTreeSet::new();
        for (&r, v) in &self.values {
            if let Some(p) = v.as_poly() {
                for d in p.homogeneous_parts().keys() {
                    ws.insert(r + *d as usize);
                }
            }
        }
        ws.into_iter().collect()
    }

    /// Restriction to one depth.
    pub fn depth_part(&self, r: usize) -> Mould {
        let mut out = Mould { values: BTreeMap::new(), ..self.clone() };
        if let Some(v) = self.values.get(&r) {
            out.values.insert(r, v.clone());
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (r, v) in &self.values {
            s.push_str(&format!("[{r}] {}\n", v.fmt_with(self.alphabet.prefix())));
        }
        if s.is_empty() {
            s.push_str("0\n");
        }
        s
    }
}

impl PartialEq for Mould {
    fn eq(&self, other: &Self) -> bool {
        self.mould_eq(other)
    }
}

impl fmt::Debug for Mould {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mould({:?}, bound={:?}) {{ ", self.alphabet, self.bound)?;
        for (r, v) in &self.values {
            write!(f, "{r}: {}; ", v.fmt_with(self.alphabet.prefix()))?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Mould {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `x_a + … + x_{b−1}` (0-based, half-open).
pub(crate) fn partial_sum(arity: usize, range: std::ops::Range<usize>) -> MultiPoly {
    MultiPoly::var_sum(arity, range)
}
