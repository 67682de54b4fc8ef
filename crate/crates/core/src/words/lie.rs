//! Free Lie algebra on two generators: membership, Lyndon basis, and the
//! Lazard generators `C_i = ad(x)^{i−1}(y)`.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ncpoly::NCPoly;
use super::word::{Letter, Word};
use super::WordsError;
use crate::exact::rational::{binomial, Rational};

pub fn lie_bracket(f: &NCPoly, g: &NCPoly) -> NCPoly {
    f.bracket(g)
}

/// Left-normed bracketing of every word: `a₁⋯aₙ ↦ [⋯[[a₁,a₂],a₃]⋯,aₙ]`.
pub fn dynkin(f: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for n in f.weights() {
        let part = f.weight_part(n);
        out = &out + &dynkin_homogeneous(&part, n);
    }
    out
}

fn dynkin_homogeneous(f: &NCPoly, n: usize) -> NCPoly {
    match n {
        0 => NCPoly::zero(),
        1 => f.clone(),
        _ => {
            let dx = dynkin_homogeneous(&f.strip_last(Letter::X), n - 1);
            let dy = dynkin_homogeneous(&f.strip_last(Letter::Y), n - 1);
            &dx.bracket(&NCPoly::x()) + &dy.bracket(&NCPoly::y())
        }
    }
}

/// Dynkin–Specht–Wever: a homogeneous `f` of weight `n ≥ 1` is Lie iff its
/// left-normed bracketing equals `n·f`.
pub fn is_lie_element(f: &NCPoly) -> Result<bool, WordsError> {
    if f.is_zero() {
        return Ok(true);
    }
    let n = f.homogeneous_weight().ok_or(WordsError::NotHomogeneous)?;
    if n == 0 {
        return Err(WordsError::NotHomogeneous);
    }
    Ok(dynkin_homogeneous(f, n) == f.scale(&Rational::from_integer(BigInt::from(n))))
}

/// Per-weight Lie test for inhomogeneous input (constants are not Lie).
pub fn is_lie_polynomial(f: &NCPoly) -> bool {
    f.weights().into_iter().all(|n| n > 0 && is_lie_element(&f.weight_part(n)).unwrap_or(false))
}

/// Lyndon words of length `n` over x < y, in lexicographic order (Duval).
pub fn lyndon_words(n: usize) -> Vec<Word> {
    assert!((1..64).contains(&n));
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == n {
            out.push(Word::from_letters(
                &w.iter().map(|&b| if b == 0 { Letter::X } else { Letter::Y }).collect::<Vec<_>>(),
            ));
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&1) = w.last() {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(l) => *l += 1,
        }
    }
    out
}

/// Lyndon words of length `n` with exactly `r` y's.
pub fn lyndon_words_bidegree(n: usize, r: usize) -> Vec<Word> {
    lyndon_words(n).into_iter().filter(|w| w.depth() == r).collect()
}

/// Standard bracketing of a Lyndon word: `w = uv` with `v` the longest
/// proper Lyndon suffix, `P(w) = [P(u), P(v)]`.
pub fn standard_bracketing(w: Word) -> NCPoly {
    if w.len() == 1 {
        return NCPoly::word(w);
    }
    let split = (1..w.len()).find(|&i| is_lyndon(w.slice(i, w.len()))).expect("Lyndon word has a Lyndon suffix");
    standard_bracketing(w.slice(0, split)).bracket(&standard_bracketing(w.slice(split, w.len())))
}

pub fn is_lyndon(w: Word) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| w < w.rotate(k))
}

/// Basis of the weight-`n` part of the free Lie algebra (size = Witt number).
pub fn lyndon_lie_basis(n: usize) -> Vec<NCPoly> {
    lyndon_words(n).into_iter().map(standard_bracketing).collect()
}

/// Basis of the weight-`n`, depth-`r` part.
pub fn lyndon_lie_basis_bidegree(n: usize, r: usize) -> Vec<NCPoly> {
    lyndon_words_bidegree(n, r).into_iter().map(standard_bracketing).collect()
}

/// Witt's dimension formula `(1/n) Σ_{d|n} μ(d) 2^{n/d}`.
pub fn witt_dimension(n: usize) -> usize {
    fn mobius(mut d: usize) -> i64 {
        let mut m = 1;
        let mut p = 2;
        while p * p <= d {
            if d.is_multiple_of(p) {
                d /= p;
                if d.is_multiple_of(p) {
                    return 0;
                }
                m = -m;
            }
            p += 1;
        }
        if d > 1 {
            m = -m;
        }
        m
    }
    let s: i64 = (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| mobius(d) * (1i64 << (n / d))).sum();
    (s / n as i64) as usize
}

static C_CACHE: Mutex<Option<HashMap<usize, NCPoly>>> = Mutex::new(None);

/// `C_i = ad(x)^{i−1}(y) = Σ_k (−1)^k binom(i−1,k) x^{i−1−k} y x^k`.
pub fn c_generator(i: usize) -> NCPoly {
    assert!(i >= 1);
    let mut guard = C_CACHE.lock().unwrap();
    let cache = guard.get_or_insert_with(HashMap::new);
    cache
        .entry(i)
        .or_insert_with(|| {
            let mut out = NCPoly::zero();
            for k in 0..i {
                let mut c = Rational::from_integer(binomial((i - 1) as u64, k as u64));
                if k % 2 == 1 {
                    c = -c;
                }
                let w = Word::x_power(i - 1 - k).concat(Word::Y).concat(Word::x_power(k));
                out.add_term(w, c);
            }
            out
        })
        .clone()
}

/// `C_{a₁}⋯C_{a_r}`; the empty product is 1.
pub fn c_monomial(a: &[usize]) -> NCPoly {
    a.iter().fold(NCPoly::one(), |acc, &i| acc.mul(&c_generator(i)))
}

/// Expansion in C-monomials. Triangular: the lexicographically largest word
/// (x > y) of `C_{a₁}⋯C_{a_r}` is `x^{a₁−1}y⋯x^{a_r−1}y`.
pub fn to_c_basis(f: &NCPoly) -> Result<Vec<(Vec<usize>, Rational)>, WordsError> {
    let mut rem = f.clone();
    let mut out = Vec::new();
    // Word order is (length, bits); the first key of each length has the
    // fewest high y bits, i.e. is largest under x > y.
    loop {
        let Some((w, c)) = rem.terms().next().map(|(w, c)| (*w, c.clone())) else {
            break;
        };
        if !w.is_empty() && w.last() != Some(Letter::Y) {
            return Err(WordsError::NotInCSpan);
        }
        let a: Vec<usize> = w.x_blocks().iter().take(w.depth()).map(|&k| k + 1).collect();
        rem.add_scaled(&c_monomial(&a), &-c.clone());
        out.push((a, c));
    }
    out.sort();
    Ok(out)
}

pub fn from_c_basis(coeffs: &[(Vec<usize>, Rational)]) -> NCPoly {
    let mut out = NCPoly::zero();
    for (a, c) in coeffs {
        if !c.is_zero() {
            out.add_scaled(&c_monomial(a), c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn p(s: &str) -> NCPoly {
        NCPoly::parse(s).unwrap()
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(lie_bracket(&NCPoly::x(), &NCPoly::y()), p("xy - yx"));
        let xy = lie_bracket(&NCPoly::x(), &NCPoly::y());
        assert_eq!(lie_bracket(&NCPoly::x(), &xy), p("xxy - 2*xyx + yxx"));
        assert!(lie_bracket(&xy, &xy).is_zero());
    }

    #[test]
    fn lie_membership() {
        assert!(is_lie_element(&p("xy - yx")).unwrap());
        assert!(!is_lie_element(&p("xy")).unwrap());
        assert!(is_lie_element(&p("xxy - 2*xyx + yxx")).unwrap());
        assert!(is_lie_element(&p("x + y")).unwrap());
        assert!(is_lie_element(&p("xy + x")).is_err());
    }

    #[test]
    fn lyndon_counts_match_witt() {
        for n in 1..=10 {
            assert_eq!(lyndon_words(n).len(), witt_dimension(n), "n = {n}");
        }
        assert_eq!(lyndon_lie_basis(1), vec![NCPoly::x(), NCPoly::y()]);
        assert_eq!(lyndon_lie_basis(2), vec![p("xy - yx")]);
        assert_eq!(lyndon_lie_basis(3).len(), 2);
        for b in lyndon_lie_basis(6) {
            assert!(is_lie_element(&b).unwrap());
        }
    }

    #[test]
    fn c_basis_examples() {
        assert_eq!(from_c_basis(&[(vec![3], int(1))]), p("xxy - 2*xyx + yxx"));
        let f = p("xy - yx").bracket(&NCPoly::y());
        assert_eq!(to_c_basis(&f).unwrap(), vec![(vec![1, 2], int(-1)), (vec![2, 1], int(1))]);
        assert_eq!(to_c_basis(&p("xx")), Err(WordsError::NotInCSpan));
        assert_eq!(to_c_basis(&NCPoly::one()).unwrap(), vec![(vec![], int(1))]);
    }

    #[test]
    fn c_basis_round_trip_exhaustive_small() {
        for a in [vec![1], vec![2, 1], vec![1, 3, 2], vec![4, 1, 1, 2], vec![2, 2, 2]] {
            let f = c_monomial(&a);
            assert_eq!(to_c_basis(&f).unwrap(), vec![(a.clone(), int(1))]);
        }
    }
}
