//! Rational functions with factored denominators.
//!
//! Every denominator that occurs in mould calculus is a product of linear
//! forms (`u_i`, partial sums `u_i+…+u_j`, differences `v_i−v_j`, `v_i`), so a
//! denominator is stored as a list of primitive factors with multiplicities.
//! Common denominators are then plain exponent maxima, and normalization only
//! has to trial-divide the numerator by the factors already present.
//! Anything that is not a recognised linear form is kept as one opaque factor.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::MultiPoly;
use super::rational::Rational;
use super::FracError;

#[derive(Clone, Debug)]
pub struct RatFrac {
    num: MultiPoly,
    /// Primitive, non-constant factors with positive leading coefficient,
    /// sorted and distinct; exponents ≥ 1.
    den: Vec<(MultiPoly, u32)>,
}

impl RatFrac {
    pub fn zero(arity: usize) -> Self {
        RatFrac { num: MultiPoly::zero(arity), den: Vec::new() }
    }

    pub fn one(arity: usize) -> Self {
        RatFrac::from_poly(MultiPoly::one(arity))
    }

    pub fn scalar(arity: usize, c: Rational) -> Self {
        RatFrac::from_poly(MultiPoly::constant(arity, c))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFrac { num: p, den: Vec::new() }
    }

    /// `num / den`, factoring the denominator into structural linear forms
    /// where possible.
    pub fn new(num: MultiPoly, den: &MultiPoly) -> Result<Self, FracError> {
        if den.is_zero() {
            return Err(FracError::DivisionByZero);
        }
        assert_eq!(num.arity(), den.arity(), "arity mismatch in RatFrac::new");
        let (s, factors) = factor_structural(den);
        let mut f = RatFrac { num: num.scale(&s.recip()), den: factors };
        f.normalize();
        Ok(f)
    }

    /// Build from a numerator and explicit denominator factors (any
    /// non-constant polynomials; they are normalized here).
    pub fn with_factors(num: MultiPoly, factors: impl IntoIterator<Item = (MultiPoly, u32)>) -> Self {
        let mut f = RatFrac { num, den: Vec::new() };
        for (p, e) in factors {
            f = f.div_factor(&p, e);
        }
        f
    }

    pub fn arity(&self) -> usize {
        self.num.arity()
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(MultiPoly, u32)] {
        &self.den
    }

    /// The expanded denominator polynomial.
    pub fn den(&self) -> MultiPoly {
        let mut d = MultiPoly::one(self.arity());
        for (f, e) in &self.den {
            d = &d * &f.pow(*e);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// The value as a scalar, if it is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_empty() && self.num.is_constant() {
            Some(self.num.constant_term())
        } else {
            None
        }
    }

    /// Total degree (numerator minus denominator) for homogeneous values.
    pub fn degree(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        let d: i64 = self.den.iter().map(|(f, e)| f.degree().unwrap_or(0) as i64 * *e as i64).sum();
        Some(n - d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.num.is_homogeneous() && self.den.iter().all(|(f, _)| f.is_homogeneous())
    }

    /// Cancel denominator factors that divide the numerator.
    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.exact_div(f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
    }

    /// Divide by `p^e` for an arbitrary nonzero polynomial `p`.
    fn div_factor(mut self, p: &MultiPoly, e: u32) -> Self {
        assert!(!p.is_zero(), "division by zero polynomial");
        if e == 0 {
            return self;
        }
        let (s, factors) = factor_structural(p);
        self.num = self.num.scale(&num_traits::pow(s.recip(), e as usize));
        let mut extra: Vec<(MultiPoly, u32)> = factors.into_iter().map(|(f, k)| (f, k * e)).collect();
        extra.sort();
        self.den = merge_add(&self.den, &extra);
        self.normalize();
        self
    }

    /// Divide by a product of polynomials (each nonzero).
    pub fn div_polys(&self, ps: &[MultiPoly]) -> Self {
        let mut f = self.clone();
        for p in ps {
            f = f.div_factor(p, 1);
        }
        f
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        let mut f = RatFrac { num: &self.num * p, den: self.den.clone() };
        f.normalize();
        f
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RatFrac::zero(self.arity());
        }
        RatFrac { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn add(&self, other: &RatFrac) -> RatFrac {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &RatFrac) -> RatFrac {
        self.combine(other, true)
    }

    fn combine(&self, other: &RatFrac, negate: bool) -> RatFrac {
        assert_eq!(self.arity(), other.arity(), "arity mismatch in RatFrac add");
        let other_num = if negate { -&other.num } else { other.num.clone() };
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return RatFrac { num: other_num, den: other.den.clone() };
        }
        if self.den == other.den {
            let mut f = RatFrac { num: &self.num + &other_num, den: self.den.clone() };
            f.normalize();
            return f;
        }
        let l = merge_max(&self.den, &other.den);
        let a = &self.num * &cofactor(&l, &self.den, self.arity());
        let b = &other_num * &cofactor(&l, &other.den, self.arity());
        let mut f = RatFrac { num: &a + &b, den: l };
        f.normalize();
        f
    }

    pub fn mul(&self, other: &RatFrac) -> RatFrac {
        assert_eq!(self.arity(), other.arity(), "arity mismatch in RatFrac mul");
        if self.is_zero() || other.is_zero() {
            return RatFrac::zero(self.arity());
        }
        let mut f = RatFrac { num: &self.num * &other.num, den: merge_add(&self.den, &other.den) };
        f.normalize();
        f
    }

    pub fn inv(&self) -> Result<RatFrac, FracError> {
        if self.is_zero() {
            return Err(FracError::DivisionByZero);
        }
        let mut num = MultiPoly::one(self.arity());
        for (f, e) in &self.den {
            num = &num * &f.pow(*e);
        }
        Ok(RatFrac::from_poly(num).div_factor(&self.num, 1))
    }

    pub fn div(&self, other: &RatFrac) -> Result<RatFrac, FracError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Substitute polynomial images for the variables (see
    /// [`MultiPoly::substitute`]). Panics if a denominator factor vanishes
    /// identically under the substitution.
    pub fn substitute(&self, images: &[MultiPoly], target_arity: usize) -> RatFrac {
        let mut num = self.num.substitute(images, target_arity).expect("arity mismatch in substitution");
        let mut den: Vec<(MultiPoly, u32)> = Vec::new();
        for (f, e) in &self.den {
            let g = f.substitute(images, target_arity).expect("arity mismatch in substitution");
            assert!(!g.is_zero(), "denominator factor vanishes under substitution");
            let (s, factors) = factor_structural(&g);
            num = num.scale(&num_traits::pow(s.recip(), *e as usize));
            let mut extra: Vec<(MultiPoly, u32)> = factors.into_iter().map(|(f, k)| (f, k * e)).collect();
            extra.sort();
            den = merge_add(&den, &extra);
        }
        let mut out = RatFrac { num, den };
        out.normalize();
        out
    }

    /// Relabel variables (monomial substitution); no expansion needed.
    pub fn remap(&self, target_arity: usize, map: &[usize]) -> RatFrac {
        let mut num = self.num.remap(target_arity, map);
        let mut den: Vec<(MultiPoly, u32)> = Vec::new();
        for (f, e) in &self.den {
            let g = f.remap(target_arity, map);
            assert!(!g.is_zero(), "denominator factor vanishes under relabelling");
            let (s, g) = g.primitive();
            num = num.scale(&num_traits::pow(s.recip(), *e as usize));
            if g.is_constant() {
                continue;
            }
            den = merge_add(&den, &[(g, *e)]);
        }
        let mut out = RatFrac { num, den };
        let injective = {
            let mut seen = vec![false; target_arity];
            map.iter().all(|&j| !std::mem::replace(&mut seen[j], true))
        };
        if !injective {
            out.normalize();
        }
        out
    }

    /// Exact equality: `f.num·g.den = g.num·f.den`, computed after removing
    /// the common factors of the two denominators.
    pub fn frac_eq(&self, other: &RatFrac) -> bool {
        if self.arity() != other.arity() {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        let l = merge_max(&self.den, &other.den);
        let a = &self.num * &cofactor(&l, &self.den, self.arity());
        let b = &other.num * &cofactor(&l, &other.den, self.arity());
        a == b
    }

    /// Text form `(num) / (den)` (or just the numerator when polynomial).
    pub fn fmt_with(&self, prefix: &str) -> String {
        if self.den.is_empty() {
            self.num.fmt_with(prefix)
        } else {
            format!("({}) / ({})", self.num.fmt_with(prefix), self.den().fmt_with(prefix))
        }
    }
}

impl PartialEq for RatFrac {
    fn eq(&self, other: &Self) -> bool {
        self.frac_eq(other)
    }
}

impl fmt::Display for RatFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("x"))
    }
}

fn merge_with(a: &[(MultiPoly, u32)], b: &[(MultiPoly, u32)], op: impl Fn(u32, u32) -> u32) -> Vec<(MultiPoly, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j].clone());
            j += 1;
        } else {
            out.push((a[i].0.clone(), op(a[i].1, b[j].1)));
            i += 1;
            j += 1;
        }
    }
    out
}

/// Numerators of `fs` over their least common (structural) denominator,
/// together with that denominator. All inputs must share one arity.
pub fn over_common_denominator(fs: &[RatFrac], arity: usize) -> (Vec<MultiPoly>, MultiPoly) {
    let l = fs.iter().fold(Vec::new(), |acc, f| merge_max(&acc, &f.den));
    let nums = fs
        .iter()
        .map(|f| {
            assert_eq!(f.arity(), arity, "arity mismatch in common denominator");
            &f.num * &cofactor(&l, &f.den, arity)
        })
        .collect();
    (nums, cofactor(&l, &[], arity))
}

fn merge_max(a: &[(MultiPoly, u32)], b: &[(MultiPoly, u32)]) -> Vec<(MultiPoly, u32)> {
    merge_with(a, b, |x, y| x.max(y))
}

fn merge_add(a: &[(MultiPoly, u32)], b: &[(MultiPoly, u32)]) -> Vec<(MultiPoly, u32)> {
    merge_with(a, b, |x, y| x + y)
}

/// `l / d` for factor lists with `d ≤ l` exponent-wise, expanded.
fn cofactor(l: &[(MultiPoly, u32)], d: &[(MultiPoly, u32)], arity: usize) -> MultiPoly {
    let mut out = MultiPoly::one(arity);
    for (f, e) in l {
        let have = d.iter().find(|(g, _)| g == f).map(|(_, k)| *k).unwrap_or(0);
        if *e > have {
            out = &out * &f.pow(e - have);
        }
    }
    out
}

/// The structural linear forms in `r` variables: `x_i`, `x_i+…+x_j`, and
/// `x_i − x_j`, each primitive with positive leading coefficient.
pub fn structural_forms(r: usize) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    for i in 0..r {
        for j in i..r {
            out.push(MultiPoly::var_sum(r, i..j + 1));
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            out.push(&MultiPoly::var(r, i) - &MultiPoly::var(r, j));
        }
    }
    out
}

/// Split `p = s · Π f_k^{e_k}`: linear forms are recognised directly, other
/// polynomials are trial-divided by the structural forms and any remainder is
/// kept as a single opaque factor. Returned factors are sorted.
pub fn factor_structural(p: &MultiPoly) -> (Rational, Vec<(MultiPoly, u32)>) {
    let (s, mut q) = p.primitive();
    let mut factors: Vec<(MultiPoly, u32)> = Vec::new();
    if q.is_constant() {
        return (s, factors);
    }
    if q.degree() != Some(1) || !q.is_linear_form() {
        for f in structural_forms(q.arity()) {
            let mut e = 0;
            while let Some(next) = q.exact_div(&f) {
                q = next;
                e += 1;
            }
            if e > 0 {
                factors.push((f, e));
            }
            if q.is_constant() {
                break;
            }
        }
    }
    let mut s = s;
    if !q.is_constant() {
        let (t, q) = q.primitive();
        s *= t;
        factors.push((q, 1));
    } else {
        s *= q.constant_term();
    }
    factors.sort();
    let mut merged: Vec<(MultiPoly, u32)> = Vec::new();
    for (f, e) in factors {
        match merged.last_mut() {
            Some((g, k)) if *g == f => *k += e,
            _ => merged.push((f, e)),
        }
    }
    (s, merged)
}

impl std::ops::Add<&RatFrac> for &RatFrac {
    type Output = RatFrac;
    fn add(self, rhs: &RatFrac) -> RatFrac {
        RatFrac::add(self, rhs)
    }
}

impl std::ops::Sub<&RatFrac> for &RatFrac {
    type Output = RatFrac;
    fn sub(self, rhs: &RatFrac) -> RatFrac {
        RatFrac::sub(self, rhs)
    }
}

impl std::ops::Mul<&RatFrac> for &RatFrac {
    type Output = RatFrac;
    fn mul(self, rhs: &RatFrac) -> RatFrac {
        RatFrac::mul(self, rhs)
    }
}

impl std::ops::Neg for &RatFrac {
    type Output = RatFrac;
    fn neg(self) -> RatFrac {
        RatFrac::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(r: usize, i: usize) -> MultiPoly {
        MultiPoly::var(r, i - 1)
    }

    fn frac(n: MultiPoly, d: MultiPoly) -> RatFrac {
        RatFrac::new(n, &d).unwrap()
    }

    #[test]
    fn common_denominator() {
        let a = frac(MultiPoly::one(2), u(2, 1));
        let b = frac(MultiPoly::one(2), u(2, 2));
        let s = &a + &b;
        assert!(s.frac_eq(&frac(&u(2, 1) + &u(2, 2), &u(2, 1) * &u(2, 2))));
        assert_eq!(s.den(), &u(2, 1) * &u(2, 2));
    }

    #[test]
    fn inverse_pair_cancels() {
        let a = frac(u(2, 1), u(2, 2));
        let b = frac(u(2, 2), u(2, 1));
        let p = &a * &b;
        assert!(p.is_polynomial());
        assert_eq!(p.as_constant(), Some(Rational::one()));
    }

    #[test]
    fn difference_of_squares_normalizes() {
        let n = &u(2, 1).pow(2) - &u(2, 2).pow(2);
        let f = frac(n, &u(2, 1) - &u(2, 2));
        assert_eq!(f.as_poly(), Some(&(&u(2, 1) + &u(2, 2))));
        // Oracle: cross-multiplication against (u1+u2)/1.
        let g = RatFrac::from_poly(&u(2, 1) + &u(2, 2));
        assert_eq!(&f.num * &g.den(), &g.num * &f.den());
    }

    #[test]
    fn equality_examples() {
        assert!(frac(u(1, 1), u(1, 1).pow(2)).frac_eq(&frac(MultiPoly::one(1), u(1, 1))));
        let z1 = frac(MultiPoly::zero(2), u(2, 1));
        let z2 = frac(MultiPoly::zero(2), &u(2, 1) - &u(2, 2));
        assert!(z1.frac_eq(&z2));
        assert!(!frac(MultiPoly::one(2), u(2, 1)).frac_eq(&frac(MultiPoly::one(2), u(2, 2))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatFrac::new(MultiPoly::one(1), &MultiPoly::zero(1)).unwrap_err(), FracError::DivisionByZero);
        assert!(RatFrac::one(1).div(&RatFrac::zero(1)).is_err());
    }

    #[test]
    fn structural_factoring_of_expanded_denominators() {
        let d =
            &(&u(3, 1) * &(&u(3, 1) - &u(3, 2))) * &(&u(3, 2) + &u(3, 3)).scale(&Rational::from_integer((-4).into()));
        let (s, fs) = factor_structural(&d);
        assert_eq!(fs.len(), 3);
        let mut back = MultiPoly::constant(3, s);
        for (f, e) in &fs {
            back = &back * &f.pow(*e);
        }
        assert_eq!(back, d);
    }
}
