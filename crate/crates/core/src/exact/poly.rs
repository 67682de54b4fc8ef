//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by monomials in graded lexicographic
//! order, so iteration (and therefore every printed form) is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::rational::{content, fmt_rational, Rational};
use super::ArityMismatch;

pub type Exps = SmallVec<[u16; 8]>;

/// A monomial `x1^e1 ... xr^er`. Ordered by total degree, then
/// lexicographically on the exponent vector (x1 > x2 > ...).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: Exps,
}

impl Monomial {
    pub fn new(exps: impl Into<Exps>) -> Self {
        let exps = exps.into();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { deg, exps }
    }

    pub fn one(arity: usize) -> Self {
        Monomial { deg: 0, exps: SmallVec::from_elem(0, arity) }
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut m = Monomial::one(arity);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { deg: self.deg + other.deg, exps }
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Monomial { deg: self.deg - other.deg, exps }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(arity), c);
        }
        p
    }

    pub fn one(arity: usize) -> Self {
        MultiPoly::constant(arity, Rational::one())
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        let mut p = MultiPoly::zero(arity);
        p.terms.insert(Monomial::var(arity, i), Rational::one());
        p
    }

    /// `Σ coeffs[i]·x_{i+1}` plus nothing else.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let arity = coeffs.len();
        let mut p = MultiPoly::zero(arity);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Monomial::var(arity, i), c.clone());
            }
        }
        p
    }

    /// Sum of the variables with 0-based indices in `range`.
    pub fn var_sum(arity: usize, range: std::ops::Range<usize>) -> Self {
        let mut p = MultiPoly::zero(arity);
        for i in range {
            p.terms.insert(Monomial::var(arity, i), Rational::one());
        }
        p
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero(arity);
        for (m, c) in terms {
            assert_eq!(m.arity(), arity, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.deg == 0)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.arity))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.deg).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.deg).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &MultiPoly) -> Result<(), ArityMismatch> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(ArityMismatch { left: self.arity, right: other.arity })
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, ArityMismatch> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, ArityMismatch> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, ArityMismatch> {
        self.check_arity(other)?;
        let mut out = MultiPoly::zero(self.arity);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn add_assign_ref(&mut self, other: &MultiPoly) {
        assert_eq!(self.arity, other.arity, "arity mismatch in add");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.arity);
        }
        MultiPoly { arity: self.arity, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.arity);
        }
        MultiPoly { arity: self.arity, terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.arity);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    /// Multivariate division by a single divisor: if `d | self` then the
    /// remainder's leading term is always divisible by `lt(d)`, so the first
    /// failure proves non-divisibility.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "exact division by the zero polynomial");
        assert_eq!(self.arity, d.arity, "arity mismatch in exact_div");
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        if d.terms.len() == 1 {
            let mut q = MultiPoly::zero(self.arity);
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                q.terms.insert(m.div(&dm), c / &dc);
            }
            return Some(q);
        }
        let mut rem = self.clone();
        let mut q = MultiPoly::zero(self.arity);
        while let Some((m, c)) = rem.leading() {
            if !dm.divides(m) {
                return None;
            }
            let qm = m.div(&dm);
            let qc = c / &dc;
            for (tm, tc) in &d.terms {
                rem.add_term(tm.mul(&qm), -(tc * &qc));
            }
            q.terms.insert(qm, qc);
        }
        Some(q)
    }

    /// Substitute `images[i]` (polynomials in `target_arity` variables) for
    /// `x_{i+1}` and expand.
    pub fn substitute(&self, images: &[MultiPoly], target_arity: usize) -> Result<MultiPoly, ArityMismatch> {
        if images.len() != self.arity {
            return Err(ArityMismatch { left: self.arity, right: images.len() });
        }
        if let Some(img) = images.iter().find(|p| p.arity != target_arity) {
            return Err(ArityMismatch { left: target_arity, right: img.arity });
        }
        // Monomial images (c·x_j or constants) only relabel exponents.
        let simple: Option<Vec<(Option<usize>, Rational)>> = images
            .iter()
            .map(|p| match p.terms.len() {
                0 => Some((None, Rational::zero())),
                1 => {
                    let (m, c) = p.terms.iter().next().unwrap();
                    match m.deg {
                        0 => Some((None, c.clone())),
                        1 => Some((m.exps.iter().position(|&e| e == 1), c.clone())),
                        _ => None,
                    }
                }
                _ => None,
            })
            .collect();
        if let Some(simple) = simple {
            let mut out = MultiPoly::zero(target_arity);
            for (m, c) in &self.terms {
                let mut coeff = c.clone();
                let mut exps: Exps = SmallVec::from_elem(0, target_arity);
                for (i, &e) in m.exps.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let (slot, k) = &simple[i];
                    if !k.is_one() {
                        coeff *= num_traits::pow(k.clone(), e as usize);
                    }
                    if let Some(j) = *slot {
                        exps[j] += e;
                    }
                }
                out.add_term(Monomial::new(exps), coeff);
            }
            return Ok(out);
        }
        let mut powers: Vec<Vec<MultiPoly>> =
            images.iter().map(|p| vec![MultiPoly::one(target_arity), p.clone()]).collect();
        let mut out = MultiPoly::zero(target_arity);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target_arity, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            out.add_assign_ref(&term);
        }
        Ok(out)
    }

    /// Relabel variables: `x_{i+1} ↦ x_{map[i]+1}` in a polynomial ring of
    /// `target_arity` variables. Several variables may map to the same target.
    pub fn remap(&self, target_arity: usize, map: &[usize]) -> MultiPoly {
        assert_eq!(map.len(), self.arity, "remap length mismatch");
        let mut out = MultiPoly::zero(target_arity);
        for (m, c) in &self.terms {
            let mut exps: Exps = SmallVec::from_elem(0, target_arity);
            for (i, &e) in m.exps.iter().enumerate() {
                exps[map[i]] += e;
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Integer-primitive normalization: `self = s·p` with `p` having coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn primitive(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut s = content(self.terms.values().cloned());
        if self.leading().unwrap().1.is_negative() {
            s = -s;
        }
        (s.clone(), self.scale(&s.recip()))
    }

    /// Degree-homogeneous components, ascending by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.deg).or_insert_with(|| MultiPoly::zero(self.arity)).terms.insert(m.clone(), c.clone());
        }
        out
    }

    /// Is this a polynomial of degree exactly one with no constant term?
    pub fn is_linear_form(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|m| m.deg == 1)
    }

    /// Text form with variables named `{prefix}1 .. {prefix}r`, terms in
    /// descending monomial order: `c * x1^2 x2 + ...`.
    pub fn fmt_with(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&fmt_rational(&a));
            if m.deg > 0 {
                s.push_str(" *");
                for (i, &e) in m.exps.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!(" {prefix}{}", i + 1)),
                        _ => s.push_str(&format!(" {prefix}{}^{e}", i + 1)),
                    }
                }
            }
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("x"))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                self.$f(rhs).expect("arity mismatch")
            }
        }
        impl std::ops::$tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs).expect("arity mismatch")
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Sum of all monomials of total degree `d` in `r` variables, each with
/// coefficient one.
pub fn monomial_sum(r: usize, d: u32) -> MultiPoly {
    let mut out = MultiPoly::zero(r);
    for exps in compositions(r, d) {
        out.terms.insert(Monomial::new(exps), Rational::one());
    }
    out
}

/// All exponent vectors of length `r` with entries summing to `d`.
pub fn compositions(r: usize, d: u32) -> Vec<Exps> {
    fn go(r: usize, d: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if cur.len() + 1 == r {
            cur.push(d as u16);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=d).rev() {
            cur.push(e as u16);
            go(r, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if d == 0 {
            out.push(Exps::new());
        }
        return out;
    }
    go(r, d, &mut Exps::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn u(r: usize, i: usize) -> MultiPoly {
        MultiPoly::var(r, i - 1)
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&u(1, 1) + &(-u(1, 1))).is_zero());
        let p = &(&u(2, 1) + &u(2, 2)) * &(&u(2, 1) - &u(2, 2));
        assert_eq!(p, &u(2, 1).pow(2) - &u(2, 2).pow(2));
        let q = (&u(2, 1).pow(2) * &u(2, 2)).scale(&rat(1, 3));
        assert_eq!(q.fmt_with("u"), "1/3 * u1^2 u2");
        assert!(u(1, 1).try_add(&u(2, 1)).is_err());
    }

    #[test]
    fn substitution_examples() {
        let img = -&(&u(2, 1) + &u(2, 2));
        assert_eq!(u(1, 1).substitute(std::slice::from_ref(&img), 2).unwrap(), img);
        let p = &u(2, 1) * &u(2, 2);
        assert_eq!(p.substitute(&[u(2, 2), u(2, 1)], 2).unwrap(), p);
        let sq = u(1, 1).pow(2).substitute(&[&u(2, 1) - &u(2, 2)], 2).unwrap();
        let expect = &(&u(2, 1).pow(2) - &(&u(2, 1) * &u(2, 2)).scale(&int(2))) + &u(2, 2).pow(2);
        assert_eq!(sq, expect);
    }

    #[test]
    fn division_examples() {
        let num = &(&u(2, 1).pow(2) * &u(2, 2)) + &(&u(2, 1) * &u(2, 2).pow(2));
        let den = &u(2, 1) * &u(2, 2);
        assert_eq!(num.exact_div(&den), Some(&u(2, 1) + &u(2, 2)));
        let sos = &u(2, 1).pow(2) + &u(2, 2).pow(2);
        assert_eq!(sos.exact_div(&(&u(2, 1) + &u(2, 2))), None);
        assert_eq!(MultiPoly::zero(1).exact_div(&u(1, 1)), Some(MultiPoly::zero(1)));
    }

    #[test]
    fn monomial_sum_examples() {
        assert_eq!(monomial_sum(2, 0), MultiPoly::one(2));
        assert_eq!(monomial_sum(2, 1), &u(2, 1) + &u(2, 2));
        let m = monomial_sum(3, 2);
        assert_eq!(m.len(), 6);
        let mut expect = MultiPoly::zero(3);
        for i in 1..=3 {
            for j in i..=3 {
                expect = &expect + &(&u(3, i) * &u(3, j));
            }
        }
        assert_eq!(m, expect);
    }

    #[test]
    fn primitive_normalizes_sign_and_content() {
        let p = (&u(2, 1) - &u(2, 2)).scale(&rat(-2, 3));
        let (s, q) = p.primitive();
        assert_eq!(s, rat(-2, 3));
        assert_eq!(q, &u(2, 1) - &u(2, 2));
    }
}
