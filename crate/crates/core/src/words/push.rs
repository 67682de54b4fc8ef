//! Push-orbit predicates on polynomials.
//!
//! For a word `w` of depth `r`, `Push(w)` is the list `[w, push(w), …,
//! push^r(w)]` (with repetitions); push has order `r + 1` on such words.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::ncpoly::NCPoly;
use super::word::{Letter, Word};
use crate::exact::rational::Rational;

/// `Σ_{v ∈ Push(w)} (f | v)`.
pub fn push_class_sum(f: &NCPoly, w: Word) -> Rational {
    let mut s = Rational::zero();
    let mut v = w;
    for _ in 0..=w.depth() {
        s += f.coeff(v);
        v = v.push();
    }
    s
}

pub fn is_push_invariant(f: &NCPoly) -> bool {
    f.push() == *f
}

/// Orbit representatives (least element of each push orbit) of the words
/// of length `n` and depth `r`.
pub fn orbit_representatives(n: usize, r: usize) -> Vec<Word> {
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for w in Word::all_with_depth(n, r) {
        if seen.contains(&w) {
            continue;
        }
        let mut v = w;
        for _ in 0..=r {
            seen.insert(v);
            v = v.push();
        }
        reps.push(w);
    }
    reps
}

/// Common value of the push-class sums over all words of weight `n` and
/// depth `r`, if they all agree.
pub fn push_class_constant(f: &NCPoly, n: usize, r: usize) -> Option<Rational> {
    let mut value: Option<Rational> = None;
    for w in orbit_representatives(n, r) {
        let s = push_class_sum(f, w);
        match &value {
            None => value = Some(s),
            Some(v) if *v != s => return None,
            _ => {}
        }
    }
    value
}

/// Every depth-`r` part (r ≥ 1) has all push-class sums equal to zero.
pub fn is_push_neutral(f: &NCPoly) -> bool {
    f.terms().all(|(w, _)| w.depth() == 0 || push_class_sum(f, *w).is_zero())
}

/// Push-constant for the value `c`, for `f` homogeneous of weight `m > 1`:
/// no `y^m` term, and every word of depth `1..m` other than `y^m` has
/// push-class sum `c`. Scalar multiples of `x^m` are push-neutral.
pub fn is_push_constant(f: &NCPoly, c: &Rational) -> bool {
    match f.homogeneous_weight() {
        Some(m) => is_push_constant_of_weight(f, m, c),
        None => f.is_zero() && c.is_zero(),
    }
}

/// [`is_push_constant`] with the weight given explicitly (so that zero and
/// pure x-powers are handled uniformly).
pub fn is_push_constant_of_weight(f: &NCPoly, m: usize, c: &Rational) -> bool {
    if f.terms().any(|(w, _)| w.len() != m) || !f.coeff(Word::y_power(m)).is_zero() {
        return false;
    }
    (1..m).all(|r| orbit_representatives(m, r).into_iter().all(|w| push_class_sum(f, w) == *c))
}

/// The value `c` for which [`is_push_constant`] holds, if any. Pure x-powers
/// (and zero) report 0.
pub fn push_constant_value(f: &NCPoly) -> Option<Rational> {
    if f.is_zero() {
        return Some(Rational::zero());
    }
    let m = f.homogeneous_weight()?;
    if m <= 1 {
        return (f.depths() == [0]).then(Rational::zero);
    }
    let c = push_class_constant(f, m, 1)?;
    is_push_constant(f, &c).then_some(c)
}

/// Per-depth variant: the push-class sums are constant within each depth
/// present in `f`. Returns `(depth, value)` for every such depth ≥ 1.
pub fn push_constant_per_depth(f: &NCPoly) -> Option<Vec<(usize, Rational)>> {
    let m = f.homogeneous_weight()?;
    let mut out = Vec::new();
    for r in f.depths() {
        if r == 0 {
            continue;
        }
        out.push((r, push_class_constant(f, m, r)?));
    }
    Some(out)
}

/// Circ-neutral: for every depth-`r` part `b^r` with `r > 1`, `(b^r)^y` is
/// push-neutral.
pub fn is_circ_neutral_poly(b: &NCPoly) -> bool {
    b.depths().into_iter().filter(|&r| r > 1).all(|r| is_push_neutral(&b.depth_part(r).strip_first(Letter::Y)))
}

/// Strictness of the circ-constant test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircMode {
    /// `b = b₀ + (c/n)yⁿ` exactly.
    Strict,
    /// The `yⁿ` coefficient is unconstrained (the top-depth value of the
    /// corresponding mould is free).
    Star,
}

/// Circ-constant test for one homogeneous weight-`n` piece; returns
/// `c = (b | x^{n−1}y)` when it holds.
pub fn circ_constant_value_homogeneous(b: &NCPoly, mode: CircMode) -> Option<Rational> {
    if b.is_zero() {
        return Some(Rational::zero());
    }
    let n = b.homogeneous_weight()?;
    if n == 0 {
        return None;
    }
    let c = b.coeff(Word::x_power(n - 1).concat(Word::Y));
    let yn = Word::y_power(n);
    let top = b.coeff(yn);
    if mode == CircMode::Strict && top != &c / Rational::from_integer((n as i64).into()) {
        return None;
    }
    let mut b0 = b.clone();
    b0.add_term(yn, -top);
    let b0y = b0.strip_first(Letter::Y);
    is_push_constant_of_weight(&b0y, n - 1, &c).then_some(c)
}

/// Circ-constant: every homogeneous weight component is circ-constant.
pub fn is_circ_constant_poly(b: &NCPoly, mode: CircMode) -> bool {
    b.weights().into_iter().all(|n| circ_constant_value_homogeneous(&b.weight_part(n), mode).is_some())
}

/// Circ-constance for a polynomial written in tail form
/// `g = Σ k_a x^{a₁}y⋯x^{a_r}y` (every word ends in `y`): with
/// `c = (g | x^{n−1}y)`, the right strip `g_y` minus its `y^{n−1}` term is
/// push-constant for `c`, i.e. the cyclic sums of the `k_a` all equal `c`.
/// This is circ-constance of the V-mould `Σ k_a v₁^{a₁}⋯v_r^{a_r}`.
pub fn tail_form_circ_constant_value(g: &NCPoly, mode: CircMode) -> Option<Rational> {
    if g.is_zero() {
        return Some(Rational::zero());
    }
    let n = g.homogeneous_weight()?;
    if n == 0 || g.terms().any(|(w, _)| w.last() != Some(Letter::Y)) {
        return None;
    }
    let c = g.coeff(Word::x_power(n - 1).concat(Word::Y));
    let yn = Word::y_power(n);
    let top = g.coeff(yn);
    if mode == CircMode::Strict && top != &c / Rational::from_integer((n as i64).into()) {
        return None;
    }
    let mut g0 = g.clone();
    g0.add_term(yn, -top);
    is_push_constant_of_weight(&g0.strip_last(Letter::Y), n - 1, &c).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn p(s: &str) -> NCPoly {
        NCPoly::parse(s).unwrap()
    }

    #[test]
    fn push_examples() {
        assert_eq!(p("xxy").push(), p("yxx"));
        assert_eq!(p("xyx").push(), p("xyx"));
        assert!(is_push_invariant(&p("xxy - 2*xyx + yxx")));
        assert!(is_push_invariant(&p("xy + yx")));
        assert!(!is_push_invariant(&p("xyy - 2*yxy + yyx")));
    }

    #[test]
    fn depth_two_monomial_sum_is_push_constant_per_depth() {
        let b: NCPoly = NCPoly::from_terms(Word::all_with_depth(4, 2).map(|w| (w, int(1))));
        assert_eq!(push_constant_per_depth(&b), Some(vec![(2, int(3))]));
    }

    #[test]
    fn psi_depth_two_is_push_constant_per_depth() {
        let psi = p("2*xxyy - 11/2*xyxy + 9/2*xyyx - 1/2*yxxy + 2*yxyx - 1/2*yyxx");
        assert_eq!(push_constant_per_depth(&psi), Some(vec![(2, int(1))]));
        let full = p("xxxx - 2*xxxy + 11/2*xxyx - 9/2*xyxx + 3*yxxx \
                      + 2*xxyy - 11/2*xyxy + 9/2*xyyx - 1/2*yxxy + 2*yxyx - 1/2*yyxx \
                      - xyyy + 4*yxyy - 6*yyxy + 4*yyyx");
        assert_eq!(push_constant_value(&full), Some(int(1)));
        assert!(is_push_constant(&full, &int(1)));
        assert!(!is_push_constant(&full, &rat(1, 2)));
    }

    #[test]
    fn circ_examples() {
        assert!(is_circ_neutral_poly(&p("xxy - 2*xyx + yxx")));
        assert!(!is_circ_neutral_poly(&p("yy")));
        // A weight-5 Lie element whose y-ending projection is the tail-form
        // polynomial below.
        let psi = p("xxxxy - 4*xxxyx - 2*xxxyy + 6*xxyxx + 11/2*xxyxy + 1/2*xxyyx + 2*xxyyy - 4*xyxxx \
                     - 9/2*xyxxy - 2*xyxyx - 11/2*xyxyy + 1/2*xyyxx + 9/2*xyyxy - 3*xyyyx - xyyyy + yxxxx \
                     + 3*yxxxy - 9/2*yxxyx - 1/2*yxxyy + 11/2*yxyxx + 2*yxyxy + 9/2*yxyyx + 4*yxyyy - 2*yyxxx \
                     - 1/2*yyxxy - 11/2*yyxyx - 6*yyxyy + 2*yyyxx + 4*yyyxy - yyyyx");
        assert!(is_circ_constant_poly(&psi, CircMode::Star));
        assert!(!is_circ_constant_poly(&psi, CircMode::Strict));
        assert_eq!(circ_constant_value_homogeneous(&psi, CircMode::Star), Some(int(1)));
        let mut fixed = psi.clone();
        fixed.add_term(Word::y_power(5), rat(1, 5));
        assert!(is_circ_constant_poly(&fixed, CircMode::Strict));

        let tail = p("xxxxy - 2*xxxyy + 11/2*xxyxy - 9/2*xyxxy + 3*yxxxy + 2*xxyyy - 11/2*xyxyy \
                      + 9/2*xyyxy - 1/2*yxxyy + 2*yxyxy - 1/2*yyxxy - xyyyy + 4*yxyyy - 6*yyxyy + 4*yyyxy");
        assert_eq!(psi.strip_last(Letter::Y).mul(&NCPoly::y()), tail);
        assert_eq!(tail_form_circ_constant_value(&tail, CircMode::Star), Some(int(1)));
        assert_eq!(tail_form_circ_constant_value(&tail, CircMode::Strict), None);
        assert_eq!(tail_form_circ_constant_value(&psi, CircMode::Star), None);
    }
}
