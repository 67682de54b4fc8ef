//! Noncommutative polynomials in x and y with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::word::{Letter, Word};
use super::WordsError;
use crate::exact::rational::{fmt_rational, parse_rational, Rational};

/// Finitely supported rational combination of words. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
}

/// The five pieces of `f = c + f_x x + f_y y = c + x f^x + y f^y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub constant: Rational,
    /// `f_x`: words ending in x, that x removed.
    pub right_x: NCPoly,
    /// `f_y`: words ending in y, that y removed.
    pub right_y: NCPoly,
    /// `f^x`: words starting with x, that x removed.
    pub left_x: NCPoly,
    /// `f^y`: words starting with y, that y removed.
    pub left_y: NCPoly,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        NCPoly::monomial(Word::EMPTY, c)
    }

    pub fn word(w: Word) -> Self {
        NCPoly::monomial(w, Rational::one())
    }

    pub fn monomial(w: Word, c: Rational) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn x() -> Self {
        NCPoly::word(Word::X)
    }

    pub fn y() -> Self {
        NCPoly::word(Word::Y)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
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

    /// Terms in increasing word order (length, then lexicographic x < y).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: Word) -> Rational {
        self.terms.get(&w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(*w, d * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, d)| (*w, d * c)).collect() }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(*v), a * b);
            }
        }
        out
    }

    /// Product keeping only words of length ≤ `max_weight`.
    pub fn mul_truncated(&self, other: &NCPoly, max_weight: usize) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if u.len() + v.len() <= max_weight {
                    out.add_term(u.concat(*v), a * b);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> NCPoly {
        let mut out = NCPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `fg − gf`.
    pub fn bracket(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.mul(other);
        out.add_scaled(&other.mul(self), &-Rational::one());
        out
    }

    /// Distinct word lengths present, ascending.
    pub fn weights(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().map(|w| w.len()).collect();
        v.dedup();
        v
    }

    /// Distinct y-degrees present, ascending.
    pub fn depths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().map(|w| w.depth()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|w| w.len())
    }

    pub fn min_depth(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.depth()).min()
    }

    /// The common weight if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        match self.weights().as_slice() {
            [n] => Some(*n),
            _ => None,
        }
    }

    pub fn homogeneous_depth(&self) -> Option<usize> {
        match self.depths().as_slice() {
            [r] => Some(*r),
            _ => None,
        }
    }

    fn filter(&self, keep: impl Fn(Word) -> bool) -> NCPoly {
        NCPoly { terms: self.terms.iter().filter(|(w, _)| keep(**w)).map(|(w, c)| (*w, c.clone())).collect() }
    }

    pub fn weight_part(&self, n: usize) -> NCPoly {
        self.filter(|w| w.len() == n)
    }

    pub fn depth_part(&self, r: usize) -> NCPoly {
        self.filter(|w| w.depth() == r)
    }

    pub fn truncate(&self, max_weight: usize) -> NCPoly {
        self.filter(|w| w.len() <= max_weight)
    }

    pub fn map_words(&self, f: impl Fn(Word) -> Word) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(f(*w), c.clone());
        }
        out
    }

    /// Backwards writing: every word reversed.
    pub fn reverse(&self) -> NCPoly {
        self.map_words(Word::reverse)
    }

    /// The push operator applied word by word.
    pub fn push(&self) -> NCPoly {
        self.map_words(Word::push)
    }

    /// Words ending in `l`, with that letter removed.
    pub fn strip_last(&self, l: Letter) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            if w.last() == Some(l) {
                out.add_term(w.init(), c.clone());
            }
        }
        out
    }

    /// Words starting with `l`, with that letter removed.
    pub fn strip_first(&self, l: Letter) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            if w.first() == Some(l) {
                out.add_term(w.tail(), c.clone());
            }
        }
        out
    }

    pub fn decompose(&self) -> Decomposition {
        Decomposition {
            constant: self.coeff(Word::EMPTY),
            right_x: self.strip_last(Letter::X),
            right_y: self.strip_last(Letter::Y),
            left_x: self.strip_first(Letter::X),
            left_y: self.strip_first(Letter::Y),
        }
    }

    /// Algebra endomorphism `x ↦ fx, y ↦ fy`, expanded; words longer than
    /// `max_weight` (if given) are discarded along the way.
    pub fn substitute(&self, fx: &NCPoly, fy: &NCPoly, max_weight: Option<usize>) -> NCPoly {
        let cap = max_weight.unwrap_or(usize::MAX);
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut acc = NCPoly::one();
            for l in w.letters() {
                let img = if l == Letter::X { fx } else { fy };
                acc = acc.mul_truncated(img, cap);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Canonical text form, e.g. `1*xxy - 2*xyx + 1*yxx`; the empty word
    /// prints as `1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            s.push_str(&fmt_rational(&c.abs()));
            s.push('*');
            s.push_str(&w.to_string());
        }
        s
    }

    /// Parses the text form. Terms are `[coef*]word` or a bare coefficient,
    /// joined by `+`/`-`; whitespace is ignored. `1` as a word is the empty
    /// word.
    pub fn parse(text: &str) -> Result<NCPoly, WordsError> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let err = |offset: usize, msg: &str| WordsError::Parse { offset, message: msg.to_string() };
        let mut out = NCPoly::zero();
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(err(pos, "empty input"));
        }
        let mut first = true;
        while pos < bytes.len() {
            let mut sign = Rational::one();
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
                skip_ws(&mut pos);
            } else if !first {
                return Err(err(pos, "expected '+' or '-'"));
            }
            first = false;
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                pos += 1;
            }
            let coef_text = &text[start..pos];
            skip_ws(&mut pos);
            let has_star = pos < bytes.len() && bytes[pos] == b'*';
            let (coef, word) = if has_star {
                let c = parse_rational(coef_text).ok_or_else(|| err(start, "malformed coefficient"))?;
                pos += 1;
                skip_ws(&mut pos);
                let wstart = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                    pos += 1;
                }
                let wt = &text[wstart..pos];
                let w = parse_word_token(wt).map_err(|o| err(wstart + o, "invalid letter in word"))?;
                (c, w)
            } else if !coef_text.is_empty() {
                let c = parse_rational(coef_text).ok_or_else(|| err(start, "malformed coefficient"))?;
                if pos < bytes.len() && bytes[pos].is_ascii_alphabetic() {
                    return Err(err(pos, "expected '*' between coefficient and word"));
                }
                (c, Word::EMPTY)
            } else {
                let wstart = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                    pos += 1;
                }
                if wstart == pos {
                    return Err(err(wstart, "expected a term"));
                }
                let w = parse_word_token(&text[wstart..pos]).map_err(|o| err(wstart + o, "invalid letter in word"))?;
                (Rational::one(), w)
            };
            out.add_term(word, sign * coef);
            skip_ws(&mut pos);
        }
        Ok(out)
    }
}

/// `Err(offset)` of the first bad character.
fn parse_word_token(t: &str) -> Result<Word, usize> {
    if t == "1" {
        return Ok(Word::EMPTY);
    }
    if t.is_empty() {
        return Err(0);
    }
    if t.len() > 64 {
        return Err(64);
    }
    if let Some(i) = t.bytes().position(|b| b != b'x' && b != b'y') {
        return Err(i);
    }
    Ok(Word::parse(t).expect("validated word"))
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({})", self.to_text())
    }
}

impl std::ops::Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl std::ops::Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl std::ops::Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        NCPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Add for NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: NCPoly) -> NCPoly {
        &self + &rhs
    }
}

impl std::ops::Sub for NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: NCPoly) -> NCPoly {
        &self - &rhs
    }
}

/// Element of the trace space: coefficients on cyclic classes of words,
/// keyed by the least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TraceVector {
    terms: BTreeMap<Word, Rational>,
}

impl TraceVector {
    pub fn zero() -> Self {
        TraceVector::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: Word) -> Rational {
        self.terms.get(&w.canonical_rotation()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> TraceVector {
        let mut out = TraceVector::zero();
        for (w, d) in &self.terms {
            out.add(*w, d * c);
        }
        out
    }

    fn add(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.canonical_rotation()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w.canonical_rotation());
        }
    }
}

impl std::ops::Sub<&TraceVector> for &TraceVector {
    type Output = TraceVector;
    fn sub(self, rhs: &TraceVector) -> TraceVector {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add(*w, -c.clone());
        }
        out
    }
}

/// Projection to the trace space (words modulo cyclic rotation).
pub fn trace_project(f: &NCPoly) -> TraceVector {
    let mut out = TraceVector::zero();
    for (w, c) in f.terms() {
        out.add(*w, c.clone());
    }
    out
}
