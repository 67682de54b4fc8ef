//! Structural maps between the spaces: the embedding `lkv → krv_ell`, the
//! map `Ξ = Ad_ari(invpal)∘pari`, the section `V_krv → krv_ell` and the
//! square relating ds_ell and krv_ell.
//!
//! Every map re-verifies the hypotheses of its input; a failing gate is an
//! error (for the plain maps) or a recorded rejection (for the reports).

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::ari::identity::ad_invpal;
use crate::ari::{fundamental_identity_check, FundamentalReport};
use crate::exact::rational::int;
use crate::mould::{
    circ_constant, circ_neutral_star, delta_op, in_ari_delta, is_alternal, is_push_invariant, is_senary, ma, ma_neg,
    pari, swap, Mould, MouldError, Verdict,
};
use crate::spaces::{
    ds_ell_member, krv_ell_member, lkv_member, solve, swap_alternal_star, vkrv_member, Check, Membership, Space,
};
use crate::words::{
    is_circ_constant_poly, is_lie_element, nu_twist, partner, CircMode, DerivationPair, Letter, NCPoly, Word,
    WordsError,
};

/// Default truncation depth for the adjoint series.
pub const DEFAULT_DEPTH: usize = 4;

#[derive(Debug, Error)]
pub enum MapError {
    #[error("{stage}: input rejected\n{report}")]
    Gate { stage: &'static str, report: Membership },
    #[error(transparent)]
    Mould(#[from] MouldError),
    #[error(transparent)]
    Words(#[from] WordsError),
}

fn gate(stage: &'static str, report: Membership) -> Result<Membership, MapError> {
    if report.holds() {
        Ok(report)
    } else {
        Err(MapError::Gate { stage, report })
    }
}

fn verdict(v: Result<Verdict, MouldError>) -> Verdict {
    v.unwrap_or_else(|e| Verdict::fail(e.to_string()))
}

/// A named intermediate value of a pipeline.
#[derive(Clone, Debug, Serialize)]
pub struct Stage {
    pub name: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub words: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mould: Option<Mould>,
}

impl Stage {
    fn mould(name: &'static str, m: &Mould) -> Self {
        Stage { name, words: None, mould: Some(m.clone()) }
    }

    fn words(name: &'static str, f: &NCPoly) -> Self {
        Stage { name, words: Some(f.to_text()), mould: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub input: String,
    pub depth: usize,
    pub stages: Vec<Stage>,
    /// Input hypotheses, checked before anything else runs.
    pub gate: Membership,
    /// Properties of the outputs, each decided on the recorded stages.
    pub checks: Membership,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejected: Option<String>,
}

impl PipelineReport {
    fn new(input: String, depth: usize) -> Self {
        PipelineReport {
            input,
            depth,
            stages: Vec::new(),
            gate: Membership::default(),
            checks: Membership::default(),
            rejected: None,
        }
    }

    fn reject(mut self, stage: &str) -> Self {
        self.rejected = Some(format!("{stage}: gate failed"));
        self
    }

    pub fn holds(&self) -> bool {
        self.rejected.is_none() && self.gate.holds() && self.checks.holds()
    }

    pub fn stage(&self, name: &str) -> Option<&Stage> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn output(&self) -> Option<&Mould> {
        self.stages.last().and_then(|s| s.mould.as_ref())
    }
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input: {} (depth {})", self.input, self.depth)?;
        for c in &self.gate.checks {
            writeln!(f, "  gate {}: {}", c.name, c.verdict)?;
        }
        if let Some(r) = &self.rejected {
            return writeln!(f, "  rejected: {r}");
        }
        for c in &self.checks.checks {
            writeln!(f, "  {}: {}", c.name, c.verdict)?;
        }
        writeln!(f, "  result: {}", if self.holds() { "OK" } else { "FAILED" })
    }
}

// ---------------------------------------------------------------------------
// lkv → krv_ell

#[derive(Clone, Debug, Serialize)]
pub struct LkvImage {
    /// `[x, b(x,[x,y])]`.
    #[serde(serialize_with = "words_text")]
    pub word: NCPoly,
    /// `u₁⋯u_r(u₁+⋯+u_r)·ma(b)`.
    pub mould: Mould,
    /// `ma(word) = mould`.
    pub routes_agree: bool,
    pub krv_ell: Membership,
}

impl LkvImage {
    pub fn holds(&self) -> bool {
        self.routes_agree && self.krv_ell.holds()
    }
}

fn words_text<S: serde::Serializer>(f: &NCPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&f.to_text())
}

/// Word route of the embedding: `b ↦ [x, b(x,[x,y])]`.
pub fn lkv_word_route(b: &NCPoly) -> NCPoly {
    let x = NCPoly::x();
    x.bracket(&b.substitute(&x, &x.bracket(&NCPoly::y()), None))
}

pub fn lkv_to_krv_ell(b: &NCPoly) -> Result<LkvImage, MapError> {
    gate("lkv", lkv_member(b))?;
    let word = lkv_word_route(b);
    let mould = delta_op(&ma(b)?);
    let routes_agree = ma(&word)?.mould_eq(&mould);
    let krv_ell = krv_ell_member(&mould);
    Ok(LkvImage { word, mould, routes_agree, krv_ell })
}

// ---------------------------------------------------------------------------
// Ξ = Ad_ari(invpal)∘pari

/// Hypotheses of `Ξ`: alternal, senary, and circ-constant swap (top depth
/// free).
pub fn xi_gate(b: &Mould) -> Membership {
    let mut m = Membership::default();
    m.checks.push(Check { name: "alternal", verdict: is_alternal(b) });
    m.checks.push(Check { name: "senary", verdict: verdict(is_senary(b)) });
    let cc = circ_constant(&swap(b), b.weights().first().copied()).map(|(v, _)| v);
    m.checks.push(Check { name: "swap_circ_constant", verdict: verdict(cc) });
    m
}

fn xi_unchecked(b: &Mould, d: usize) -> Result<Mould, MouldError> {
    ad_invpal(&pari(b).truncate(d), d)
}

/// `Ad_ari(invpal)·pari(B)` to depth `d`.
pub fn xi(b: &Mould, d: usize) -> Result<Mould, MapError> {
    if b.is_zero() {
        return Ok(Mould::zero(b.alphabet()).truncate(d));
    }
    gate("xi", xi_gate(b))?;
    Ok(xi_unchecked(b, d)?)
}

/// The four properties of a `Ξ` image: push-invariant, alternal, swap
/// circ-neutral up to constants, and in `ARI^Δ`.
pub fn xi_image_checks(a: &Mould) -> Membership {
    let mut m = Membership::default();
    m.checks.push(Check { name: "push_invariant", verdict: verdict(is_push_invariant(a)) });
    m.checks.push(Check { name: "alternal", verdict: is_alternal(a) });
    m.checks.push(Check { name: "swap_circ_neutral_star", verdict: verdict(circ_neutral_star(&swap(a))) });
    m.checks.push(Check { name: "ari_delta", verdict: verdict(in_ari_delta(a)) });
    m
}

fn identity_check(r: Result<FundamentalReport, MouldError>) -> Verdict {
    match r {
        Ok(r) if r.holds && r.hypothesis => Verdict::pass(),
        Ok(r) if !r.hypothesis => Verdict::fail("Ad_ari(invpal)·N is not push-invariant"),
        Ok(r) => Verdict::fail(format!("routes differ in depth {}", r.first_difference.unwrap_or(0))),
        Err(e) => Verdict::fail(e.to_string()),
    }
}

/// Runs `Ξ` on `B` and records the image properties together with the
/// fundamental identity for `N = pari(B)`.
pub fn verify_xi_image(b: &Mould, d: usize) -> PipelineReport {
    let mut rep = PipelineReport::new(b.to_text(), d);
    rep.stages.push(Stage::mould("B", b));
    rep.gate = xi_gate(b);
    if !rep.gate.holds() {
        return rep.reject("xi");
    }
    xi_stages(&mut rep, b, d);
    rep
}

fn xi_stages(rep: &mut PipelineReport, b: &Mould, d: usize) {
    let n = pari(b).truncate(d);
    rep.stages.push(Stage::mould("pari", &n));
    match ad_invpal(&n, d) {
        Ok(a) => {
            rep.checks.checks.extend(xi_image_checks(&a).checks);
            rep.stages.push(Stage::mould("xi", &a));
        }
        Err(e) => rep.checks.checks.push(Check { name: "xi", verdict: Verdict::fail(e.to_string()) }),
    }
    let fund = fundamental_identity_check(&n, d);
    if let Ok(r) = &fund {
        rep.stages.push(Stage::mould("fundamental_lhs", &r.lhs));
    }
    rep.checks.checks.push(Check { name: "fundamental_identity", verdict: identity_check(fund) });
}

// ---------------------------------------------------------------------------
// W_krv

fn lie_homogeneous(b: &NCPoly) -> Result<usize, Verdict> {
    let n = b.homogeneous_weight().ok_or_else(|| Verdict::fail("not homogeneous"))?;
    if n < 3 {
        return Err(Verdict::fail(format!("weight {n} < 3")));
    }
    match is_lie_element(b) {
        Ok(true) => Ok(n),
        Ok(false) => Err(Verdict::fail("not a Lie element")),
        Err(e) => Err(Verdict::fail(e.to_string())),
    }
}

/// `β(b_y − b_x) = (−1)^{n−1}(b_y − b_x)` with right strips and `β` the
/// word reversal.
pub fn is_anti_palindromic(b: &NCPoly, n: usize) -> bool {
    let g = &b.strip_last(Letter::Y) - &b.strip_last(Letter::X);
    let sign = if n % 2 == 1 { int(1) } else { int(-1) };
    g.reverse() == g.scale(&sign)
}

/// `b + (c/n)yⁿ` is circ-constant with `c = (b | x^{n−1}y)`.
pub fn is_circ_constant_completed(b: &NCPoly, n: usize) -> bool {
    let c = b.coeff(Word::x_power(n - 1).concat(Word::Y));
    let mut f = b.clone();
    f.add_term(Word::y_power(n), c / int(n as i64));
    is_circ_constant_poly(&f, CircMode::Strict)
}

/// The two word conditions of `W_krv` and their mould forms on
/// `ma_neg(b)`: senary, and circ-constant swap. The four verdicts are
/// independent computations and should agree.
pub fn w_krv_gate(b: &NCPoly) -> Membership {
    let mut m = Membership::default();
    let n = match lie_homogeneous(b) {
        Ok(n) => n,
        Err(v) => {
            m.checks.push(Check { name: "input", verdict: v });
            return m;
        }
    };
    m.checks.push(Check {
        name: "word_anti_palindromic",
        verdict: Verdict::from_bool(is_anti_palindromic(b, n), || "β(b_y − b_x) ≠ ±(b_y − b_x)".into()),
    });
    m.checks.push(Check {
        name: "word_circ_constant",
        verdict: Verdict::from_bool(is_circ_constant_completed(b, n), || "b + (c/n)yⁿ is not circ-constant".into()),
    });
    match ma_neg(b) {
        Ok(bm) => {
            m.checks.push(Check { name: "mould_senary", verdict: verdict(is_senary(&bm)) });
            let cc = circ_constant(&swap(&bm), Some(n)).map(|(v, _)| v);
            m.checks.push(Check { name: "mould_swap_circ_constant", verdict: verdict(cc) });
        }
        Err(e) => m.checks.push(Check { name: "mould", verdict: Verdict::fail(e.to_string()) }),
    }
    m
}

/// Whether the verdicts of [`w_krv_gate`] all coincide.
pub fn w_krv_verdicts_agree(m: &Membership) -> bool {
    m.checks.windows(2).all(|w| w[0].verdict.holds == w[1].verdict.holds)
}

// ---------------------------------------------------------------------------
// The section V_krv → krv_ell

/// `b ↦ Δ(Ξ(ma_neg(ν(b))))` with every intermediate stage gated and
/// recorded.
pub fn krv_section(b: &NCPoly, d: usize) -> PipelineReport {
    let mut rep = PipelineReport::new(b.to_text(), d);
    rep.stages.push(Stage::words("b", b));
    rep.gate = vkrv_member(b);
    if !rep.gate.holds() {
        return rep.reject("vkrv");
    }
    let w = nu_twist(b);
    rep.stages.push(Stage::words("nu", &w));
    let wg = w_krv_gate(&w);
    rep.gate.checks.extend(wg.checks.into_iter().map(|c| Check { name: c.name, verdict: c.verdict }));
    if !rep.gate.holds() {
        return rep.reject("w_krv");
    }
    let bm = match ma_neg(&w) {
        Ok(m) => m,
        Err(e) => {
            rep.gate.checks.push(Check { name: "ma", verdict: Verdict::fail(e.to_string()) });
            return rep.reject("ma");
        }
    };
    rep.stages.push(Stage::mould("B", &bm));
    let xg = xi_gate(&bm);
    rep.gate.checks.extend(xg.checks);
    if !rep.gate.holds() {
        return rep.reject("xi");
    }
    xi_stages(&mut rep, &bm, d);
    if let Some(a) = rep.stage("xi").and_then(|s| s.mould.clone()) {
        let p = delta_op(&a);
        rep.checks.checks.extend(krv_ell_member(&p).checks.into_iter().map(|c| Check {
            name: match c.name {
                "alternal" => "krv_ell_alternal",
                "push_invariant" => "krv_ell_push_invariant",
                "swap_circ_neutral_star" => "krv_ell_swap_circ_neutral_star",
                other => other,
            },
            verdict: c.verdict,
        }));
        rep.stages.push(Stage::mould("delta", &p));
    }
    rep
}

/// The section's value, or the failing report.
pub fn section(b: &NCPoly, d: usize) -> Result<Mould, Box<PipelineReport>> {
    let rep = krv_section(b, d);
    match (rep.holds(), rep.output()) {
        (true, Some(m)) => Ok(m.clone()),
        _ => Err(Box::new(rep)),
    }
}

/// The section on an inhomogeneous input, applied weight by weight.
pub fn section_graded(b: &NCPoly, d: usize) -> Result<Mould, Box<PipelineReport>> {
    let mut out = Mould::zero(crate::mould::Alphabet::U).truncate(d);
    for n in b.weights() {
        out = out.add(&section(&b.weight_part(n), d)?);
    }
    Ok(out)
}

/// Bracket of `V_krv`: `{b,b′} = [b,b′] + E_{a,b}(b′) − E_{a′,b′}(b)` with
/// `a`, `a′` the partners.
pub fn vkrv_bracket(b: &NCPoly, b2: &NCPoly) -> Result<NCPoly, WordsError> {
    let e1 = DerivationPair::e(partner(b)?, b.clone());
    let e2 = DerivationPair::e(partner(b2)?, b2.clone());
    Ok(&(&b.bracket(b2) + &e1.apply(b2)) - &e2.apply(b))
}

// ---------------------------------------------------------------------------
// The square ds_ell ⊂ krv_ell

#[derive(Clone, Debug, Serialize)]
pub struct SquareReport {
    pub n: usize,
    pub depth: usize,
    /// Per depth `r`: ds_ell basis elements checked against krv_ell.
    pub inclusion: Vec<(usize, usize, Membership)>,
    /// Per `V_krv` basis element: the left column (`al*al` and both
    /// elliptic suites on the image) and `pari∘pari = id`.
    pub column: Vec<Membership>,
}

impl SquareReport {
    pub fn holds(&self) -> bool {
        self.inclusion.iter().all(|(_, _, m)| m.holds()) && self.column.iter().all(Membership::holds)
    }

    pub fn is_vacuous(&self) -> bool {
        self.inclusion.is_empty() && self.column.is_empty()
    }
}

impl fmt::Display for SquareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "weight {} (depth {})", self.n, self.depth)?;
        for (r, i, m) in &self.inclusion {
            writeln!(f, "  ds_ell({}, {r}) #{i} in krv_ell: {}", self.n, m.holds())?;
        }
        for (i, m) in self.column.iter().enumerate() {
            writeln!(f, "  V_krv #{i}:")?;
            for c in &m.checks {
                writeln!(f, "    {}: {}", c.name, c.verdict)?;
            }
        }
        writeln!(f, "  result: {}", if self.holds() { "OK" } else { "FAILED" })
    }
}

/// Left column for an element `B` of the mould form of `W_krv`:
/// `Ξ(B) = Ad_ari(invpal)·pari(B)` is alternal with alternal swap up to
/// constants, and `Δ(Ξ(B))` passes both elliptic suites.
pub fn square_column(b: &Mould, d: usize) -> Result<Membership, MapError> {
    let a = xi(b, d)?;
    let mut m = Membership::default();
    m.checks.push(Check { name: "alternal", verdict: is_alternal(&a) });
    m.checks.push(Check { name: "swap_alternal_star", verdict: swap_alternal_star(&a) });
    let p = delta_op(&a);
    m.checks.push(Check {
        name: "ds_ell",
        verdict: Verdict::from_bool(ds_ell_member(&p).holds(), || ds_ell_member(&p).to_string()),
    });
    m.checks.push(Check {
        name: "krv_ell",
        verdict: Verdict::from_bool(krv_ell_member(&p).holds(), || krv_ell_member(&p).to_string()),
    });
    m.checks.push(Check {
        name: "pari_involution",
        verdict: Verdict::from_bool(pari(&pari(b)).mould_eq(b), || "pari(pari(B)) ≠ B".into()),
    });
    Ok(m)
}

/// Instances of the square at weight `n`: every ds_ell basis element of
/// depth `r ≤ rmax` lies in krv_ell, and the `Ξ` images of `ν(V_krv)` satisfy
/// the left column.
pub fn square_check(n: usize, rmax: usize, d: usize) -> Result<SquareReport, MapError> {
    let mut inclusion = Vec::new();
    for r in 1..=rmax.min(n) {
        if !Space::DsEll.accepts(n, r) {
            continue;
        }
        let basis = solve(Space::DsEll, n, r).map_err(|e| MouldError::Malformed(e.to_string()))?;
        for (i, p) in basis.moulds.iter().enumerate() {
            inclusion.push((r, i, krv_ell_member(p)));
        }
    }
    let mut column = Vec::new();
    if Space::Vkrv.accepts(n, 1) {
        let basis = solve(Space::Vkrv, n, 1).map_err(|e| MouldError::Malformed(e.to_string()))?;
        for b in &basis.words {
            column.push(square_column(&ma_neg(&nu_twist(b))?, d)?);
        }
    }
    Ok(SquareReport { n, depth: d, inclusion, column })
}

/// Checks an explicit U-mould against both elliptic suites.
pub fn both_elliptic_suites(p: &Mould) -> (Membership, Membership) {
    (ds_ell_member(p), krv_ell_member(p))
}
