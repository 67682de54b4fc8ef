//! Worked examples at weights 3 and 5, shared by tests, the acceptance
//! harness and the CLI.

use crate::exact::rational::{int, rat};
use crate::exact::{Monomial, MultiPoly, Rational};
use crate::mould::{Alphabet, Mould};
use crate::words::NCPoly;

fn p(s: &str) -> NCPoly {
    NCPoly::parse(s).expect("fixture polynomial parses")
}

/// Polynomial in `arity` variables from `(coefficient, exponents)` pairs.
pub fn poly(arity: usize, terms: &[(Rational, &[u16])]) -> MultiPoly {
    MultiPoly::from_terms(arity, terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), c.clone())))
}

/// The weight-3 krv element `b3 = [x,[x,y]]`.
pub fn b3() -> NCPoly {
    p("xxy - 2*xyx + yxx")
}

/// Its partner: `[x,a3] + [y,b3] = 0`.
pub fn a3() -> NCPoly {
    p("xyy - 2*yxy + yyx")
}

/// Weight-5 depth-graded pair `(ā, b̄)` with `[x,ā] + [y,b̄] = 0`.
pub fn abar5() -> NCPoly {
    let (x, y) = (NCPoly::x(), NCPoly::y());
    let xy = x.bracket(&y);
    let t1 = x.bracket(&x.bracket(&xy.bracket(&y)));
    let t2 = x.bracket(&xy).bracket(&xy);
    &t1 - &t2.scale(&int(2))
}

pub fn bbar5() -> NCPoly {
    let (x, y) = (NCPoly::x(), NCPoly::y());
    x.bracket(&x.bracket(&x.bracket(&x.bracket(&y))))
}

/// Weight-5 push-constant polynomial (value 1), depth-2 part only.
pub fn psi5_depth_two() -> NCPoly {
    p("2*xxyy - 11/2*xyxy + 9/2*xyyx - 1/2*yxxy + 2*yxyx - 1/2*yyxx")
}

/// The full push-constant polynomial `ψ^y` (value 1) of weight 4.
pub fn psi5y() -> NCPoly {
    p("xxxx - 2*xxxy + 11/2*xxyx - 9/2*xyxx + 3*yxxx \
       + 2*xxyy - 11/2*xyxy + 9/2*xyyx - 1/2*yxxy + 2*yxyx - 1/2*yyxx \
       - xyyy + 4*yxyy - 6*yyxy + 4*yyyx")
}

/// A weight-5 Lie element, circ-constant with value 1, whose left strip is
/// [`psi5y`].
pub fn psi5() -> NCPoly {
    p("xxxxy - 4*xxxyx - 2*xxxyy + 6*xxyxx + 11/2*xxyxy + 1/2*xxyyx + 2*xxyyy - 4*xyxxx \
       - 9/2*xyxxy - 2*xyxyx - 11/2*xyxyy + 1/2*xyyxx + 9/2*xyyxy - 3*xyyyx - xyyyy + yxxxx \
       + 3*yxxxy - 9/2*yxxyx - 1/2*yxxyy + 11/2*yxyxx + 2*yxyxy + 9/2*yxyyx + 4*yxyyy - 2*yyxxx \
       - 1/2*yyxxy - 11/2*yyxyx - 6*yyxyy + 2*yyyxx + 4*yyyxy - yyyyx")
}

/// `ψ` in tail form: its projection onto words ending in `y`.
pub fn psi5_tail() -> NCPoly {
    p("xxxxy - 2*xxxyy + 11/2*xxyxy - 9/2*xyxxy + 3*yxxxy + 2*xxyyy - 11/2*xyxyy \
       + 9/2*xyyxy - 1/2*yxxyy + 2*yxyxy - 1/2*yyxxy - xyyyy + 4*yxyyy - 6*yyxyy + 4*yyyxy")
}

/// The four-depth V-mould of `ψ`, circ-constant with value 1 (top depth
/// left free).
pub fn bpsi() -> Mould {
    let q = rat;
    Mould::from_polys(
        Alphabet::V,
        [
            (1, poly(1, &[(int(1), &[4])])),
            (2, poly(2, &[(q(-2, 1), &[3, 0]), (q(11, 2), &[2, 1]), (q(-9, 2), &[1, 2]), (q(3, 1), &[0, 3])])),
            (
                3,
                poly(
                    3,
                    &[
                        (q(2, 1), &[2, 0, 0]),
                        (q(-11, 2), &[1, 1, 0]),
                        (q(-1, 2), &[0, 2, 0]),
                        (q(9, 2), &[1, 0, 1]),
                        (q(2, 1), &[0, 1, 1]),
                        (q(-1, 2), &[0, 0, 2]),
                    ],
                ),
            ),
            (
                4,
                poly(
                    4,
                    &[
                        (int(-1), &[1, 0, 0, 0]),
                        (int(4), &[0, 1, 0, 0]),
                        (int(-6), &[0, 0, 1, 0]),
                        (int(4), &[0, 0, 0, 1]),
                    ],
                ),
            ),
        ],
    )
}

/// Depth-3 U-mould of weight 7 lying in ds_ell: `Δ⁻¹(A3)` is alternal and its
/// swap becomes alternal after adding the constant `1/3` in depth 3.
pub fn a3_ell() -> Mould {
    let q = rat;
    let a = poly(
        3,
        &[
            (q(-1, 4), &[3, 1, 0]),
            (q(1, 4), &[3, 0, 1]),
            (q(-1, 4), &[2, 2, 0]),
            (q(1, 2), &[2, 0, 2]),
            (q(1, 4), &[1, 0, 3]),
            (q(-1, 4), &[0, 2, 2]),
            (q(-1, 4), &[0, 1, 3]),
            (q(-1, 12), &[2, 1, 1]),
            (q(1, 6), &[1, 2, 1]),
            (q(-1, 12), &[1, 1, 2]),
        ],
    );
    Mould::from_polys(Alphabet::U, [(3, a)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mould::{delta_inv, is_alternal, star_correction, swap, StarProperty};

    #[test]
    fn weight_five_pair_is_balanced() {
        let s = &NCPoly::x().bracket(&abar5()) + &NCPoly::y().bracket(&bbar5());
        assert!(s.is_zero());
    }

    #[test]
    fn a3_fixture_needs_one_third() {
        let b = delta_inv(&a3_ell());
        assert!(is_alternal(&b).holds);
        assert_eq!(star_correction(&swap(&b), StarProperty::Alternal), Some(vec![(3, rat(1, 3))]));
    }
}
