//! The correspondence `ma` between the C-span of the free algebra and
//! polynomial U-moulds: `C_{a₁}⋯C_{a_r} ↦ u₁^{a₁−1}⋯u_r^{a_r−1}`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Alphabet, Mould, MouldError};
use crate::exact::{Monomial, MultiPoly, RatFrac, Rational};
use crate::words::{from_c_basis, to_c_basis, Letter, NCPoly, WordsError};

pub fn ma(f: &NCPoly) -> Result<Mould, MouldError> {
    let coeffs = to_c_basis(f)?;
    let mut by_depth: BTreeMap<usize, MultiPoly> = BTreeMap::new();
    for (a, c) in coeffs {
        let r = a.len();
        let exps: Vec<u16> = a.iter().map(|&k| (k - 1) as u16).collect();
        by_depth.entry(r).or_insert_with(|| MultiPoly::zero(r)).add_term(Monomial::new(exps), c);
    }
    let weight = f.homogeneous_weight();
    Ok(Mould::from_polys(Alphabet::U, by_depth).with_weight(weight))
}

pub fn ma_inverse(m: &Mould) -> Result<NCPoly, MouldError> {
    m.check_alphabet(Alphabet::U)?;
    let mut coeffs = Vec::new();
    for (r, v) in m.values() {
        let p = v.as_poly().ok_or(MouldError::NonPolynomialValue { depth: r })?;
        for (mono, c) in p.terms() {
            coeffs.push((mono.exps().iter().map(|&e| e as usize + 1).collect::<Vec<_>>(), c.clone()));
        }
    }
    Ok(from_c_basis(&coeffs))
}

/// `neg(ma(f))`, the signed mould form of `f`: for `f` of odd weight it
/// equals `−pari(ma(f))`, its swap is the sign-free word route, and it is the
/// form on which circ-constancy and the senary relation are tested.
pub fn ma_neg(f: &NCPoly) -> Result<Mould, MouldError> {
    Ok(super::ops::neg(&ma(f)?))
}

/// `swap(ma(f))` computed on words: with `f = xf^x + yf^y` and
/// `g = β(yf^y) = Σ k_a x^{a₁}y⋯x^{a_r}y`, the depth-`r` value is
/// `Σ (−1)^{a₁+⋯+a_r} k_a v₁^{a₁}⋯v_r^{a_r}`.
pub fn swap_ma_word_route(f: &NCPoly) -> Result<Mould, MouldError> {
    // Only C-span inputs have a mould.
    to_c_basis(f).map_err(MouldError::from)?;
    let g = NCPoly::y().mul(&f.strip_first(Letter::Y)).reverse();
    let mut by_depth: BTreeMap<usize, MultiPoly> = BTreeMap::new();
    for (w, k) in g.terms() {
        if w.last() != Some(Letter::Y) {
            return Err(WordsError::NotInCSpan.into());
        }
        let r = w.depth();
        let blocks = w.x_blocks();
        let exps: Vec<u16> = blocks[..r].iter().map(|&a| a as u16).collect();
        let total: usize = blocks[..r].iter().sum();
        let c = if total % 2 == 1 { -k.clone() } else { k.clone() };
        by_depth.entry(r).or_insert_with(|| MultiPoly::zero(r)).add_term(Monomial::new(exps), c);
    }
    let mut out = Mould::from_polys(Alphabet::V, by_depth).with_weight(f.homogeneous_weight());
    let c0 = f.coeff(crate::words::Word::EMPTY);
    if !c0.is_zero() {
        out.set(0, RatFrac::scalar(0, c0));
    }
    Ok(out)
}

/// Coefficient of `u^e` in the depth-`r` value (zero if absent or rational).
pub fn coefficient(m: &Mould, exps: &[u16]) -> Rational {
    m.value_ref(exps.len())
        .and_then(|v| v.as_poly())
        .map(|p| p.coeff(&Monomial::new(exps.to_vec())))
        .unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use crate::mould::swap;
    use crate::words::lie::{c_generator, lyndon_lie_basis};

    fn p(s: &str) -> NCPoly {
        NCPoly::parse(s).unwrap()
    }

    fn u(r: usize, i: usize) -> MultiPoly {
        MultiPoly::var(r, i - 1)
    }

    #[test]
    fn ma_examples() {
        let b3 = p("xxy - 2*xyx + yxx");
        assert_eq!(ma(&b3).unwrap(), Mould::from_polys(Alphabet::U, [(1, u(1, 1).pow(2))]));
        let f = p("xy - yx").bracket(&NCPoly::y());
        assert_eq!(ma(&f).unwrap(), Mould::from_polys(Alphabet::U, [(2, &u(2, 1) - &u(2, 2))]));
        assert_eq!(ma(&NCPoly::y()).unwrap(), Mould::constant(Alphabet::U, [(1, int(1))]));
        assert!(matches!(ma(&p("xx")), Err(MouldError::Words(WordsError::NotInCSpan))));
    }

    #[test]
    fn ma_inverse_examples() {
        let b3 = p("xxy - 2*xyx + yxx");
        assert_eq!(ma_inverse(&ma(&b3).unwrap()).unwrap(), b3);
        assert!(ma_inverse(&Mould::zero(Alphabet::U)).unwrap().is_zero());
    }

    #[test]
    fn word_route_matches_swap_on_small_inputs() {
        assert_eq!(swap_ma_word_route(&c_generator(2)).unwrap(), swap(&ma(&c_generator(2)).unwrap()));
        let f = p("xy - yx").bracket(&NCPoly::y());
        let v = |i: usize| MultiPoly::var(2, i - 1);
        let expect = Mould::from_polys(Alphabet::V, [(2, &v(2).scale(&int(2)) - &v(1))]);
        assert_eq!(swap_ma_word_route(&f).unwrap(), expect);
        for n in 2..=6 {
            for b in lyndon_lie_basis(n) {
                if to_c_basis(&b).is_err() {
                    continue;
                }
                assert_eq!(swap_ma_word_route(&b).unwrap(), swap(&ma(&b).unwrap()), "{}", b.to_text());
            }
        }
    }
}
