//! Derivations of the free associative algebra given by generator images,
//! partners, and the brackets built from them.

use num_traits::{One, Zero};

use super::lie::{c_generator, is_lie_polynomial};
use super::ncpoly::{trace_project, NCPoly, TraceVector};
use super::word::{Letter, Word};
use super::WordsError;
use crate::exact::matrix::solve_linear;
use crate::exact::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivationMode {
    /// `D_{b,a}`: `x ↦ b`, `y ↦ a`, stored as `(first, second) = (b, a)`.
    D,
    /// `E_{a,b}`: `x ↦ [x,a]`, `y ↦ [y,b]`, stored as `(first, second) = (a, b)`.
    E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationPair {
    pub mode: DerivationMode,
    pub first: NCPoly,
    pub second: NCPoly,
}

impl DerivationPair {
    /// `D_{b,a}` (x ↦ b, y ↦ a).
    pub fn d(b: NCPoly, a: NCPoly) -> Self {
        DerivationPair { mode: DerivationMode::D, first: b, second: a }
    }

    /// `E_{a,b}` (x ↦ [x,a], y ↦ [y,b]).
    pub fn e(a: NCPoly, b: NCPoly) -> Self {
        DerivationPair { mode: DerivationMode::E, first: a, second: b }
    }

    /// Ihara derivation `d_b = E_{0,b}`.
    pub fn ihara(b: NCPoly) -> Self {
        DerivationPair::e(NCPoly::zero(), b)
    }

    /// Images of x and y.
    pub fn generator_images(&self) -> (NCPoly, NCPoly) {
        match self.mode {
            DerivationMode::D => (self.first.clone(), self.second.clone()),
            DerivationMode::E => (NCPoly::x().bracket(&self.first), NCPoly::y().bracket(&self.second)),
        }
    }

    /// Extends the generator images by the Leibniz rule.
    pub fn apply(&self, f: &NCPoly) -> NCPoly {
        let (dx, dy) = self.generator_images();
        apply_with_images(&dx, &dy, f)
    }
}

fn apply_with_images(dx: &NCPoly, dy: &NCPoly, f: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in f.terms() {
        for i in 0..w.len() {
            let img = if w.letter(i) == Letter::X { dx } else { dy };
            if img.is_zero() {
                continue;
            }
            let left = NCPoly::word(w.slice(0, i));
            let right = NCPoly::word(w.slice(i + 1, w.len()));
            out.add_scaled(&left.mul(img).mul(&right), c);
        }
    }
    out
}

pub fn apply_derivation(d: &DerivationPair, f: &NCPoly) -> NCPoly {
    d.apply(f)
}

/// The unique `a` with `[x,a] + [y,b] = 0` (so that `E_{a,b}` is special).
/// Solved per depth: a depth-`r` part of `b` forces a depth-`(r+1)` part of
/// `a` of the same weight. Only Lie polynomials have partners in this sense;
/// other inputs are rejected even when the linear system happens to be
/// solvable.
pub fn partner(b: &NCPoly) -> Result<NCPoly, WordsError> {
    if !is_lie_polynomial(b) {
        return Err(WordsError::PartnerNotFound);
    }
    let target = -&NCPoly::y().bracket(b);
    let mut a = NCPoly::zero();
    for n in b.weights() {
        let bn = b.weight_part(n);
        for r in bn.depths() {
            let g = target.weight_part(n + 1).depth_part(r + 1);
            if g.is_zero() {
                continue;
            }
            a = &a + &solve_left_x_bracket(&g, n, r + 1)?;
        }
    }
    Ok(a)
}

/// Partner normalized for `D_{b,a}`: `D_{b,a}([x,y]) = [b,y] + [x,a] = 0`,
/// i.e. the negative of [`partner`].
pub fn partner_d(b: &NCPoly) -> Result<NCPoly, WordsError> {
    Ok(-&partner(b)?)
}

/// Solves `[x, a] = g` for `a` of weight `n` and depth `r`.
fn solve_left_x_bracket(g: &NCPoly, n: usize, r: usize) -> Result<NCPoly, WordsError> {
    if r > n {
        return Err(WordsError::PartnerNotFound);
    }
    let unknowns: Vec<Word> = Word::all_with_depth(n, r).collect();
    let rows: Vec<Word> = Word::all_with_depth(n + 1, r).collect();
    let row_index = |w: Word| rows.binary_search(&w).expect("row word");
    let mut m = crate::exact::RatMatrix::zeros(rows.len(), unknowns.len());
    for (j, &u) in unknowns.iter().enumerate() {
        let i1 = row_index(Word::X.concat(u));
        m.set(i1, j, m.get(i1, j) + Rational::one());
        let i2 = row_index(u.concat(Word::X));
        m.set(i2, j, m.get(i2, j) - Rational::one());
    }
    let rhs: Vec<Rational> = rows.iter().map(|&w| g.coeff(w)).collect();
    let sol = solve_linear(&m, &rhs).ok_or(WordsError::PartnerNotFound)?;
    Ok(NCPoly::from_terms(unknowns.into_iter().zip(sol)))
}

/// `{b, b′} = [b, b′] + d_b(b′) − d_{b′}(b)`, `d_b: x ↦ 0, y ↦ [y, b]`.
pub fn poisson_bracket(b: &NCPoly, b2: &NCPoly) -> NCPoly {
    let mut out = b.bracket(b2);
    out = &out + &DerivationPair::ihara(b.clone()).apply(b2);
    &out - &DerivationPair::ihara(b2.clone()).apply(b)
}

/// `⟨b, b′⟩ = D_{b,a}(b′) − D_{b′,a′}(b)` with `D`-normalized partners
/// (`D_{b,a}` annihilates `[x,y]`), i.e. `[D_{b,a}, D_{b′,a′}](x)`.
pub fn angle_bracket(b: &NCPoly, b2: &NCPoly) -> Result<NCPoly, WordsError> {
    let a = partner_d(b)?;
    let a2 = partner_d(b2)?;
    let d1 = DerivationPair::d(b.clone(), a);
    let d2 = DerivationPair::d(b2.clone(), a2);
    Ok(&d1.apply(b2) - &d2.apply(b))
}

/// Commutator of two derivations evaluated on `f`.
pub fn commutator_apply(d1: &DerivationPair, d2: &DerivationPair, f: &NCPoly) -> NCPoly {
    &d1.apply(&d2.apply(f)) - &d2.apply(&d1.apply(f))
}

/// The automorphism `x ↦ −x−y, y ↦ y`.
pub fn nu_twist(f: &NCPoly) -> NCPoly {
    let z = -&(&NCPoly::x() + &NCPoly::y());
    f.substitute(&z, &NCPoly::y(), None)
}

/// `δ_{2n}`: the `D`-mode pair with `b = ad(x)^{2n}(y) = C_{2n+1}` and its
/// partner, which annihilates `[x,y]`.
pub fn delta_2n(n: usize) -> DerivationPair {
    let b = c_generator(2 * n + 1);
    let a = partner_d(&b).expect("C_{2n+1} is push-invariant");
    DerivationPair::d(b, a)
}

/// `div(E_{a,b}) = tr(a_x x + b_y y)`.
pub fn divergence(e: &DerivationPair) -> Result<TraceVector, WordsError> {
    if e.mode != DerivationMode::E {
        return Err(WordsError::WrongMode);
    }
    let ax = e.first.strip_last(Letter::X).mul(&NCPoly::x());
    let by = e.second.strip_last(Letter::Y).mul(&NCPoly::y());
    Ok(trace_project(&(&ax + &by)))
}

/// `tr((x+y)ⁿ − xⁿ − yⁿ)`.
pub fn trace_power_defect(n: usize) -> TraceVector {
    let s = &NCPoly::x() + &NCPoly::y();
    let mut f = s.pow(n);
    f.add_term(Word::x_power(n), -Rational::one());
    f.add_term(Word::y_power(n), -Rational::one());
    trace_project(&f)
}

/// Checks `div(E_{a,b}) = c·tr((x+y)ⁿ − xⁿ − yⁿ)` for homogeneous `b` of
/// weight `n`, returning `c` when it holds.
pub fn divergence_constant(e: &DerivationPair) -> Result<Option<Rational>, WordsError> {
    let div = divergence(e)?;
    let n = match e.second.homogeneous_weight() {
        Some(n) => n,
        None => return Ok(div.is_zero().then(Rational::zero)),
    };
    let reference = trace_power_defect(n);
    let probe = Word::x_power(n - 1).concat(Word::Y);
    let c = div.coeff(probe) / reference.coeff(probe);
    if (&div - &reference.scale(&c)).is_zero() {
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

/// Equivalent forms of speciality for homogeneous push-invariant Lie `b`.
pub fn right_y_equals_left_y(b: &NCPoly) -> bool {
    b.strip_last(Letter::Y) == b.strip_first(Letter::Y)
}
