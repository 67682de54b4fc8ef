//! Defining predicate suites, evaluated directly on candidate elements and
//! independently of the solvers that produce them.

use std::fmt;

use serde::Serialize;

use crate::exact::rational::{fmt_rational, Rational};
use crate::mould::{
    circ_neutral, circ_neutral_star, delta_inv, is_alternal, is_even_in_depth_one, is_push_invariant, star_correction,
    swap, Alphabet, Mould, MouldError, StarProperty, Verdict,
};
use crate::words::{self, is_lie_element, Letter, NCPoly, Word};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Membership {
    pub checks: Vec<Check>,
}

impl Membership {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.holds)
    }

    fn push(&mut self, name: &'static str, verdict: Verdict) {
        self.checks.push(Check { name, verdict });
    }

    fn push_result(&mut self, name: &'static str, v: Result<Verdict, MouldError>) {
        self.push(name, v.unwrap_or_else(|e| Verdict::fail(e.to_string())));
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{}: {}", c.name, c.verdict)?;
        }
        Ok(())
    }
}

fn lie_check(b: &NCPoly) -> Verdict {
    match is_lie_element(b) {
        Ok(true) => Verdict::pass(),
        Ok(false) => Verdict::fail("not a Lie element"),
        Err(e) => Verdict::fail(e.to_string()),
    }
}

/// `b` is Lie, push-invariant, and circ-neutral in every depth `> 1`.
pub fn lkv_member(b: &NCPoly) -> Membership {
    let mut m = Membership::default();
    m.push("lie", lie_check(b));
    m.push("push_invariant", Verdict::from_bool(words::is_push_invariant(b), || "push(b) ≠ b".into()));
    m.push(
        "circ_neutral",
        Verdict::from_bool(words::is_circ_neutral_poly(b), || "some (b^r)^y is not push-neutral".into()),
    );
    m
}

/// Mould form of the lkv conditions: alternal, push-invariant, circ-neutral
/// swap.
pub fn lkv_mould_member(p: &Mould) -> Membership {
    let mut m = Membership::default();
    m.push("alternal", is_alternal(p));
    m.push_result("push_invariant", is_push_invariant(p));
    m.push_result("swap_circ_neutral", circ_neutral(&swap(p)));
    m
}

/// Alternal with alternal swap, even in depth 1.
pub fn ls_member(p: &Mould) -> Membership {
    let mut m = Membership::default();
    m.push("alternal", is_alternal(p));
    m.push("swap_alternal", is_alternal(&swap(p)));
    m.push("even_in_depth_one", is_even_in_depth_one(p));
    m
}

/// Value `c` with `b^y − b^x` push-constant for `c = (b | x^{n−1}y)`.
pub fn vkrv_constant(b: &NCPoly) -> Option<Rational> {
    let n = b.homogeneous_weight()?;
    let c = b.coeff(Word::x_power(n - 1).concat(Word::Y));
    let g = &b.strip_first(Letter::Y) - &b.strip_first(Letter::X);
    words::push::is_push_constant_of_weight(&g, n - 1, &c).then_some(c)
}

pub fn vkrv_member(b: &NCPoly) -> Membership {
    let mut m = Membership::default();
    m.push("lie", lie_check(b));
    m.push("push_invariant", Verdict::from_bool(words::is_push_invariant(b), || "push(b) ≠ b".into()));
    m.push(
        "push_constant",
        Verdict::from_bool(vkrv_constant(b).is_some(), || "b^y − b^x is not push-constant for (b | x^{n−1}y)".into()),
    );
    m
}

fn require_u(p: &Mould) -> Result<(), MouldError> {
    p.check_alphabet(Alphabet::U)?;
    if p.value_ref(0).is_some() {
        return Err(MouldError::Malformed("expected zero constant term".into()));
    }
    Ok(())
}

/// Conditions on a U-mould `P` (a `Δ`-image): `Δ⁻¹P` is alternal and
/// push-invariant, and `swap(Δ⁻¹P)` is circ-neutral up to constants.
pub fn krv_ell_member(p: &Mould) -> Membership {
    let mut m = Membership::default();
    if let Err(e) = require_u(p) {
        m.push("input", Verdict::fail(e.to_string()));
        return m;
    }
    let b = delta_inv(p);
    m.push("alternal", is_alternal(&b));
    m.push_result("push_invariant", is_push_invariant(&b));
    m.push_result("swap_circ_neutral_star", circ_neutral_star(&swap(&b)));
    m
}

/// Conditions on a U-mould `P`: `Δ⁻¹P` is alternal, `swap(Δ⁻¹P)` is alternal
/// up to constants, and `P` is even in depth 1.
pub fn ds_ell_member(p: &Mould) -> Membership {
    let mut m = Membership::default();
    if let Err(e) = require_u(p) {
        m.push("input", Verdict::fail(e.to_string()));
        return m;
    }
    let b = delta_inv(p);
    m.push("alternal", is_alternal(&b));
    m.push("swap_alternal_star", swap_alternal_star(&b));
    m.push("even_in_depth_one", is_even_in_depth_one(p));
    m
}

/// `swap(M)` is alternal after adding a constant-valued mould; the witness
/// names the constants when some are needed.
pub fn swap_alternal_star(b: &Mould) -> Verdict {
    match star_correction(&swap(b), StarProperty::Alternal) {
        None => Verdict::fail("no constant-valued correction makes the swap alternal"),
        Some(ks) if ks.is_empty() => Verdict::pass(),
        Some(ks) => {
            let shown: Vec<String> = ks.iter().map(|(r, k)| format!("depth {r}: {}", fmt_rational(k))).collect();
            Verdict { holds: true, witness: Some(format!("after adding {}", shown.join(", "))) }
        }
    }
}
