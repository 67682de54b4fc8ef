//! Binary mould operations: the product `mu`, the brackets `lu`, `ari`,
//! `ari_bar`, `Dari`, the derivations `amit`/`anit`/`arit` and their
//! V-alphabet counterparts, pre-Lie laws, truncated exponentials, the named
//! moulds of the `pal`/`pil` stack and the `ganit` automorphisms.
//!
//! Every operation is depth-graded: components of depth `p` and `q` land in
//! depth `p + q`. Results of series operations are exact in depths `≤ D`
//! and carry `D` as their truncation bound.

pub mod dari;
pub mod ganit;
pub mod identity;
pub mod named;
pub mod series;

use crate::exact::{MultiPoly, RatFrac};
use crate::mould::{Alphabet, Mould, MouldError};

pub use dari::{dari, dari_via_darit, darit};
pub use ganit::ganit_bar;
pub use identity::{fundamental_identity_check, fundamental_identity_direct, FundamentalReport};
pub use named::{infinitesimal_generator, named_mould, tnc_mould, NamedMould};
pub use series::{ad_exponential, exp_ari, exp_ari_bar, log_ari, log_ari_bar, Bracket};

/// Values of a depth-`q` mould placed on variables `offset..offset+q` of `r`.
fn place(v: &RatFrac, r: usize, offset: usize) -> RatFrac {
    let map: Vec<usize> = (offset..offset + v.arity()).collect();
    v.remap(r, &map)
}

fn same_alphabet(a: &Mould, b: &Mould) -> Result<(), MouldError> {
    b.check_alphabet(a.alphabet())
}

fn out_for(a: &Mould, b: &Mould) -> Mould {
    let mut out = a.empty_like(b);
    if let (Some(p), Some(q)) = (a.weight(), b.weight()) {
        out = out.with_weight(Some(p + q));
    }
    out
}

fn beyond(out: &Mould, r: usize) -> bool {
    out.bound().is_some_and(|b| r > b)
}

/// `mu(A,B)(w) = Σ_{w=ab} A(a)B(b)` (either alphabet).
pub fn mu(a: &Mould, b: &Mould) -> Result<Mould, MouldError> {
    same_alphabet(a, b)?;
    let mut out = out_for(a, b);
    for (p, x) in a.values() {
        for (q, y) in b.values() {
            let r = p + q;
            if beyond(&out, r) {
                continue;
            }
            out.accumulate(r, &place(x, r, 0).mul(&place(y, r, p)));
        }
    }
    Ok(out)
}

pub fn lu(a: &Mould, b: &Mould) -> Result<Mould, MouldError> {
    Ok(mu(a, b)?.sub(&mu(b, a)?))
}

/// Which of the four flexion derivations to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Flexion {
    Amit,
    Anit,
    AmitBar,
    AnitBar,
}

impl Flexion {
    fn alphabet(self) -> Alphabet {
        match self {
            Flexion::Amit | Flexion::Anit => Alphabet::U,
            Flexion::AmitBar | Flexion::AnitBar => Alphabet::V,
        }
    }
}

/// Sum over `w = a b c` with `b` of length `q ≥ 1` and `a c` of length `p`,
/// `c ≠ ∅` for the `amit` family and `a ≠ ∅` for the `anit` family.
fn flexion(kind: Flexion, b: &Mould, a: &Mould) -> Result<Mould, MouldError> {
    a.check_alphabet(kind.alphabet())?;
    b.check_alphabet(kind.alphabet())?;
    let mut out = out_for(a, b);
    for (p, x) in a.values() {
        if p == 0 {
            continue;
        }
        for (q, y) in b.values() {
            if q == 0 || beyond(&out, p + q) {
                continue;
            }
            let r = p + q;
            let starts: Vec<usize> = match kind {
                Flexion::Amit | Flexion::AmitBar => (0..p).collect(),
                Flexion::Anit | Flexion::AnitBar => (1..=p).collect(),
            };
            for i in starts {
                // `a` occupies variables 0..i, `b` occupies i..i+q, `c` the rest.
                let term = match kind {
                    Flexion::Amit => {
                        let images: Vec<MultiPoly> = (0..p)
                            .map(|k| match k.cmp(&i) {
                                std::cmp::Ordering::Less => MultiPoly::var(r, k),
                                std::cmp::Ordering::Equal => MultiPoly::var_sum(r, i..i + q + 1),
                                std::cmp::Ordering::Greater => MultiPoly::var(r, k + q),
                            })
                            .collect();
                        x.substitute(&images, r).mul(&place(y, r, i))
                    }
                    Flexion::Anit => {
                        let images: Vec<MultiPoly> = (0..p)
                            .map(|k| {
                                if k + 1 < i {
                                    MultiPoly::var(r, k)
                                } else if k + 1 == i {
                                    MultiPoly::var_sum(r, k..i + q)
                                } else {
                                    MultiPoly::var(r, k + q)
                                }
                            })
                            .collect();
                        x.substitute(&images, r).mul(&place(y, r, i))
                    }
                    Flexion::AmitBar | Flexion::AnitBar => {
                        let map: Vec<usize> = (0..p).map(|k| if k < i { k } else { k + q }).collect();
                        let anchor = if kind == Flexion::AmitBar { i + q } else { i - 1 };
                        let images: Vec<MultiPoly> =
                            (0..q).map(|j| &MultiPoly::var(r, i + j) - &MultiPoly::var(r, anchor)).collect();
                        x.remap(r, &map).mul(&y.substitute(&images, r))
                    }
                };
                out.accumulate(r, &term);
            }
        }
    }
    Ok(out)
}

/// `amit(B)·A`: `Σ_{w=abc, c≠∅} A(a, ⌈c) B(b)`, where the first variable of
/// `c` absorbs the sum of the variables of `b`.
pub fn amit(b: &Mould, a: &Mould) -> Result<Mould, MouldError> {
    flexion(Flexion::Amit, b, a)
}

/// `anit(B)·A`: `Σ_{w=abc, a≠∅} A(a⌉, c) B(b)`, where the last variable of
/// `a` absorbs the sum of the variables of `b`.
pub fn anit(b: &Mould, a: &Mould) -> Result<Mould, MouldError> {
    flexion(Flexion::Anit, b, a)
}

pub fn arit(b: &Mould, a: &Mould) -> Result<Mould, MouldError> {
    Ok(amit(b, a)?.sub(&anit(b, a)?))
}

/// `amit_bar(B)·A`: `Σ_{w=abc, c≠∅} A(a, c) B(b⌋)`, with `b⌋` the variables
/// of `b` minus the first variable of `c`.
pub fn amit_bar(b: &Mould, a: &Mould) -> Result<Mould, MouldError> {
    flexion(Flexion::AmitBar, b, a)
}

/// `anit_bar(B)·A`: `Σ_{w=abc, a≠∅} A(a, c) B(⌊b)`, with `⌊b` the variables
/// of `b` minus the last variable of `a`.
pub fn anit_bar(b: &Mould, a: &Mould) -> Result<Mould, MouldError> {
    flexion(Flexion::AnitBar, b, a)
}

pub fn arit_bar(b: &Mould, a: &Mould) -> Result<Mould, MouldError> {
    Ok(amit_bar(b, a)?.sub(&anit_bar(b, a)?))
}

/// `ari(A,B) = arit(B)·A − arit(A)·B + lu(A,B)`.
pub fn ari(a: &Mould, b: &Mould) -> Result<Mould, MouldError> {
    Ok(arit(b, a)?.sub(&arit(a, b)?).add(&lu(a, b)?))
}

pub fn ari_bar(a: &Mould, b: &Mould) -> Result<Mould, MouldError> {
    Ok(arit_bar(b, a)?.sub(&arit_bar(a, b)?).add(&lu(a, b)?))
}

/// `preari(A,B) = arit(B)·A + mu(A,B)`.
pub fn preari(a: &Mould, b: &Mould) -> Result<Mould, MouldError> {
    Ok(arit(b, a)?.add(&mu(a, b)?))
}

pub fn preari_bar(a: &Mould, b: &Mould) -> Result<Mould, MouldError> {
    Ok(arit_bar(b, a)?.add(&mu(a, b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use crate::mould::ma;
    use crate::words::{c_generator, poisson_bracket, DerivationPair, NCPoly};

    fn p(s: &str) -> NCPoly {
        NCPoly::parse(s).unwrap()
    }

    #[test]
    fn mu_and_lu_follow_the_free_algebra() {
        let c1 = ma(&c_generator(1)).unwrap();
        let m = mu(&c1, &c1).unwrap();
        assert_eq!(m, Mould::constant(Alphabet::U, [(2, int(1))]));
        let (c2, c1w) = (c_generator(2), c_generator(1));
        assert_eq!(lu(&ma(&c2).unwrap(), &c1).unwrap(), ma(&c2.bracket(&c1w)).unwrap());
        assert!(lu(&c1, &c1).unwrap().is_zero());
        assert!(mu(&c1, &Mould::zero(Alphabet::V)).is_err());
    }

    #[test]
    fn arit_is_minus_the_ihara_derivation() {
        let b3 = p("xxy - 2*xyx + yxx");
        let lhs = arit(&ma(&b3).unwrap(), &ma(&NCPoly::y()).unwrap()).unwrap();
        let rhs = ma(&-&DerivationPair::ihara(b3.clone()).apply(&NCPoly::y())).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn anit_in_depth_two() {
        // Only (a, b, c) = ((u1), (u2), ∅): A(u1 + u2)·B(u2).
        let c1 = ma(&c_generator(1)).unwrap();
        assert_eq!(anit(&c1, &c1).unwrap(), Mould::constant(Alphabet::U, [(2, int(1))]));
        let u = |i: usize| MultiPoly::var(1, i);
        let a = Mould::from_polys(Alphabet::U, [(1, u(0))]);
        let v2 = |i: usize| MultiPoly::var(2, i);
        assert_eq!(anit(&c1, &a).unwrap(), Mould::from_polys(Alphabet::U, [(2, &v2(0) + &v2(1))]));
        assert_eq!(amit(&c1, &a).unwrap(), Mould::from_polys(Alphabet::U, [(2, &v2(0) + &v2(1))]));
    }

    #[test]
    fn ari_is_the_poisson_bracket() {
        let b3 = p("xxy - 2*xyx + yxx");
        let c5 = c_generator(5);
        let lhs = ari(&ma(&b3).unwrap(), &ma(&c5).unwrap()).unwrap();
        assert_eq!(lhs, ma(&poisson_bracket(&b3, &c5)).unwrap());
        let m = ma(&b3).unwrap();
        assert!(ari(&m, &m).unwrap().is_zero());
    }

    #[test]
    fn preari_antisymmetrizes_to_ari() {
        let a = ma(&p("xxy - 2*xyx + yxx")).unwrap();
        let b = ma(&c_generator(2)).unwrap();
        let lhs = preari(&a, &b).unwrap().sub(&preari(&b, &a).unwrap());
        assert_eq!(lhs, ari(&a, &b).unwrap());
        assert!(preari(&Mould::zero(Alphabet::U), &b).unwrap().is_zero());
    }
}
