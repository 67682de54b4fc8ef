//! Depth-truncated exponentials and logarithms for the pre-Lie laws
//! `preari`/`preari_bar`, and the adjoint exponential `exp(ad(L))`.

use num_traits::Zero;

use super::{ari, ari_bar, preari, preari_bar};
use crate::exact::rational::{factorial, Rational};
use crate::mould::{Alphabet, Mould, MouldError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracket {
    Ari,
    AriBar,
}

impl Bracket {
    pub fn apply(self, a: &Mould, b: &Mould) -> Result<Mould, MouldError> {
        match self {
            Bracket::Ari => ari(a, b),
            Bracket::AriBar => ari_bar(a, b),
        }
    }

    fn pre(self, a: &Mould, b: &Mould) -> Result<Mould, MouldError> {
        match self {
            Bracket::Ari => preari(a, b),
            Bracket::AriBar => preari_bar(a, b),
        }
    }

    fn alphabet(self) -> Alphabet {
        match self {
            Bracket::Ari => Alphabet::U,
            Bracket::AriBar => Alphabet::V,
        }
    }
}

fn inv_factorial(k: usize) -> Rational {
    Rational::from_integer(factorial(k as u32)).recip()
}

fn require_no_constant(a: &Mould) -> Result<(), MouldError> {
    if a.constant_term().is_zero() {
        Ok(())
    } else {
        Err(MouldError::Malformed("expected a mould with zero constant term".into()))
    }
}

/// `1 + Σ_{k≥1} B_k/k!` with `B₁ = A`, `B_{k+1} = pre(B_k, A)`, exact in
/// depths `≤ d`.
fn exp_pre(bracket: Bracket, a: &Mould, d: usize) -> Result<Mould, MouldError> {
    a.check_alphabet(bracket.alphabet())?;
    require_no_constant(a)?;
    let a = a.clone().truncate(d);
    let mut out = Mould::unit(bracket.alphabet()).truncate(d);
    let mut term = a.clone();
    let mut k = 1;
    while !term.is_zero() {
        out = out.add(&term.scale(&inv_factorial(k)));
        term = bracket.pre(&term, &a)?;
        k += 1;
    }
    Ok(out)
}

/// Inverse of [`exp_pre`], solved depth by depth: the depth-`r` part of
/// `exp(A)` is `A_r` plus terms built from lower depths of `A`.
fn log_pre(bracket: Bracket, g: &Mould, d: usize) -> Result<Mould, MouldError> {
    g.check_alphabet(bracket.alphabet())?;
    if g.constant_term() != Rational::from_integer(1.into()) {
        return Err(MouldError::Malformed("expected a mould with constant term 1".into()));
    }
    let mut a = Mould::empty_with_bound(bracket.alphabet(), Some(d));
    for r in 1..=d {
        let e = exp_pre(bracket, &a, r)?;
        let v = g.value(r).sub(&e.value(r));
        a.set(r, v);
    }
    Ok(a)
}

pub fn exp_ari(a: &Mould, d: usize) -> Result<Mould, MouldError> {
    exp_pre(Bracket::Ari, a, d)
}

pub fn log_ari(g: &Mould, d: usize) -> Result<Mould, MouldError> {
    log_pre(Bracket::Ari, g, d)
}

pub fn exp_ari_bar(a: &Mould, d: usize) -> Result<Mould, MouldError> {
    exp_pre(Bracket::AriBar, a, d)
}

pub fn log_ari_bar(g: &Mould, d: usize) -> Result<Mould, MouldError> {
    log_pre(Bracket::AriBar, g, d)
}

/// `exp(ad(L))·M = Σ_{k≥0} (1/k!) ad(L)^k·M` to depth `d`, with
/// `ad(L)·X = bracket(L, X)`.
pub fn ad_exponential(bracket: Bracket, l: &Mould, m: &Mould, d: usize) -> Result<Mould, MouldError> {
    require_no_constant(l)?;
    require_no_constant(m)?;
    let l = l.clone().truncate(d);
    let mut term = m.clone().truncate(d);
    let mut out = term.clone();
    let mut k = 1;
    loop {
        term = bracket.apply(&l, &term)?;
        if term.is_zero() {
            break;
        }
        out = out.add(&term.scale(&inv_factorial(k)));
        k += 1;
    }
    Ok(out)
}
