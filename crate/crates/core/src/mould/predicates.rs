//! Defining predicates of mould spaces. Every check is an exact identity of
//! rational functions; failures come with a witness naming the first
//! identity that does not hold.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::ops::{circ_sum, delta_factors, mantar, pari, push, teru};
use super::{Alphabet, Mould, MouldError};
use crate::exact::{monomial_sum, RatFrac, RatMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Verdict { holds: false, witness: Some(witness.into()) }
    }

    pub fn from_bool(b: bool, witness: impl FnOnce() -> String) -> Self {
        if b {
            Verdict::pass()
        } else {
            Verdict::fail(witness())
        }
    }

    /// The first failure among `depths`, or a pass.
    fn first_failure(depths: impl IntoIterator<Item = usize>, check: impl Fn(usize) -> Option<String>) -> Self {
        for r in depths {
            if let Some(w) = check(r) {
                return Verdict::fail(w);
            }
        }
        Verdict::pass()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}", self.holds),
            Some(w) => write!(f, "{} ({w})", self.holds),
        }
    }
}

fn depth_range(m: &Mould, from: usize) -> std::ops::RangeInclusive<usize> {
    from..=m.depth_limit()
}

/// All shuffles of `0..i` with `i..r`, as variable-index sequences.
pub fn shuffles(i: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(a: &[usize], b: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if a.is_empty() && b.is_empty() {
            out.push(cur.clone());
            return;
        }
        if let Some((&h, t)) = a.split_first() {
            cur.push(h);
            go(t, b, cur, out);
            cur.pop();
        }
        if let Some((&h, t)) = b.split_first() {
            cur.push(h);
            go(a, t, cur, out);
            cur.pop();
        }
    }
    let a: Vec<usize> = (0..i).collect();
    let b: Vec<usize> = (i..r).collect();
    let mut out = Vec::new();
    go(&a, &b, &mut Vec::new(), &mut out);
    out
}

/// `Σ_{w ∈ Sh((1..i)(i+1..r))} A^r(w)`.
pub fn shuffle_sum(v: &RatFrac, i: usize) -> RatFrac {
    let r = v.arity();
    let mut s = RatFrac::zero(r);
    for w in shuffles(i, r) {
        // A evaluated at (u_{w₁}, …, u_{w_r}): argument slot j receives u_{w_j}.
        s = &s + &v.remap(r, &w);
    }
    s
}

/// Alternality: every shuffle sum vanishes in each depth `r ≥ 2`.
pub fn is_alternal(m: &Mould) -> Verdict {
    Verdict::first_failure(m.depths().filter(|&r| r >= 2), |r| {
        let v = m.value(r);
        (1..=r / 2)
            .find(|&i| !shuffle_sum(&v, i).is_zero())
            .map(|i| format!("depth {r}: shuffle sum with i = {i} is nonzero"))
    })
}

pub fn is_push_invariant(m: &Mould) -> Result<Verdict, MouldError> {
    let p = push(m)?;
    Ok(Verdict::first_failure(depth_range(m, 1), |r| {
        (!p.value(r).frac_eq(&m.value(r))).then(|| format!("depth {r}: push(B) ≠ B"))
    }))
}

pub fn mantar_invariant(m: &Mould) -> Verdict {
    let t = mantar(m);
    Verdict::first_failure(depth_range(m, 1), |r| {
        (!t.value(r).frac_eq(&m.value(r))).then(|| format!("depth {r}: mantar(B) ≠ B"))
    })
}

/// Depth-1 value is an even function.
pub fn is_even_in_depth_one(m: &Mould) -> Verdict {
    let v = m.value(1);
    let neg = super::ops::neg(&Mould::concentrated(m.alphabet(), 1, v.clone()));
    Verdict::from_bool(neg.value(1).frac_eq(&v), || "depth 1: B(−u₁) ≠ B(u₁)".into())
}

/// Circ-neutral: `Σ_{i<r} circ^i(B) = 0` for every depth `r > 1`.
pub fn circ_neutral(m: &Mould) -> Result<Verdict, MouldError> {
    m.check_alphabet(Alphabet::V)?;
    Ok(Verdict::first_failure(m.depths().filter(|&r| r > 1), |r| {
        (!circ_sum(r, &m.value(r)).is_zero()).then(|| format!("depth {r}: circ sum is nonzero"))
    }))
}

/// Circ-neutral after adding some constant-valued mould: every circ sum in
/// depth `r > 1` is a constant.
pub fn circ_neutral_star(m: &Mould) -> Result<Verdict, MouldError> {
    m.check_alphabet(Alphabet::V)?;
    Ok(Verdict::first_failure(m.depths().filter(|&r| r > 1), |r| {
        circ_sum(r, &m.value(r)).as_constant().is_none().then(|| format!("depth {r}: circ sum is not a constant"))
    }))
}

/// Weight of a homogeneous polynomial mould read off its depth-1 value
/// `c·v₁^{n−1}`, or the stored weight.
fn infer_weight(m: &Mould) -> Option<usize> {
    if let Some(n) = m.weight() {
        return Some(n);
    }
    let p = m.value_ref(1)?.as_poly()?;
    p.is_homogeneous().then(|| p.degree().map(|d| d as usize + 1)).flatten()
}

fn circ_constant_impl(m: &Mould, weight: Option<usize>, star: bool) -> Result<(Verdict, Option<Rational>), MouldError> {
    m.check_alphabet(Alphabet::V)?;
    if m.is_zero() {
        return Ok((Verdict::pass(), Some(Rational::zero())));
    }
    let Some(n) = weight.or_else(|| infer_weight(m)) else {
        // No depth-1 value: c = 0, so circ-constance is circ-neutrality.
        let v = if star { circ_neutral_star(m)? } else { circ_neutral(m)? };
        return Ok((v.clone(), v.holds.then(Rational::zero)));
    };
    let c = match m.value_ref(1) {
        None => Rational::zero(),
        Some(v) => match v.as_poly() {
            Some(p) if p.len() == 1 && p.degree() == Some((n - 1) as u32) => p.terms().next().unwrap().1.clone(),
            _ => return Ok((Verdict::fail(format!("depth 1: value is not c·v₁^{}", n - 1)), None)),
        },
    };
    let top = m.depth_limit().max(n);
    let verdict = Verdict::first_failure(2..=top, |r| {
        if star && r == n {
            return None;
        }
        let s = circ_sum(r, &m.value(r));
        let expect =
            if r <= n { RatFrac::from_poly(monomial_sum(r, (n - r) as u32).scale(&c)) } else { RatFrac::zero(r) };
        (!s.frac_eq(&expect))
            .then(|| format!("depth {r}: circ sum ≠ c·(all monomials of degree {})", n.saturating_sub(r)))
    });
    let c = verdict.holds.then_some(c);
    Ok((verdict, c))
}

/// Circ-constant for a homogeneous polynomial V-mould of weight `n`:
/// `B(v₁) = c·v₁^{n−1}` and every circ sum in depth `1 < r < n` is `c` times
/// the sum of all monomials of degree `n − r`. The depth-`n` value is a
/// constant that is left free (the constant-valued corrections of the
/// starred spaces live there); see [`circ_constant_strict`]. Returns `c`.
/// A weight can be supplied for moulds whose depth-1 value vanishes.
pub fn circ_constant(m: &Mould, weight: Option<usize>) -> Result<(Verdict, Option<Rational>), MouldError> {
    circ_constant_impl(m, weight, true)
}

/// As [`circ_constant`], also requiring the depth-`n` circ sum to be `c`
/// (i.e. `B^n = c/n`).
pub fn circ_constant_strict(m: &Mould, weight: Option<usize>) -> Result<(Verdict, Option<Rational>), MouldError> {
    circ_constant_impl(m, weight, false)
}

/// Membership of `ARI^Δ`: `u₁⋯u_r(u₁+⋯+u_r)·A^r` is a polynomial.
pub fn in_ari_delta(m: &Mould) -> Result<Verdict, MouldError> {
    m.check_alphabet(Alphabet::U)?;
    Ok(Verdict::first_failure(m.depths().filter(|&r| r >= 1), |r| {
        let v = m.value(r);
        let mut p = crate::exact::MultiPoly::one(r);
        for f in delta_factors(r) {
            p = &p * &f;
        }
        (!v.mul_poly(&p).is_polynomial()).then(|| format!("depth {r}: Δ·A is not polynomial"))
    }))
}

/// Senary relation `teru(pari B) = push(mantar(teru(pari B)))`.
pub fn is_senary(m: &Mould) -> Result<Verdict, MouldError> {
    m.check_alphabet(Alphabet::U)?;
    teru_relation(&pari(m), "teru∘pari(B) ≠ push∘mantar∘teru∘pari(B)")
}

/// The untwisted form `teru(M) = push(mantar(teru(M)))`, satisfied by
/// `Ad_ari(pal)·M` for push-invariant `M`.
pub fn is_senary_untwisted(m: &Mould) -> Result<Verdict, MouldError> {
    m.check_alphabet(Alphabet::U)?;
    teru_relation(m, "teru(M) ≠ push∘mantar∘teru(M)")
}

fn teru_relation(m: &Mould, what: &str) -> Result<Verdict, MouldError> {
    let t = teru(m)?;
    let rhs = push(&mantar(&t))?;
    let top = match t.bound() {
        Some(b) => b,
        None => t.max_depth().unwrap_or(0),
    };
    Ok(Verdict::first_failure(1..=top, |r| (!t.value(r).frac_eq(&rhs.value(r))).then(|| format!("depth {r}: {what}"))))
}

#[derive(Clone, Debug, Serialize)]
pub struct PredicateReport {
    pub alphabet: Alphabet,
    pub alternal: Verdict,
    pub mantar_invariant: Verdict,
    #[serde(serialize_with = "ser_result")]
    pub push_invariant: Result<Verdict, MouldError>,
    #[serde(serialize_with = "ser_result")]
    pub senary: Result<Verdict, MouldError>,
    #[serde(serialize_with = "ser_result")]
    pub in_ari_delta: Result<Verdict, MouldError>,
    #[serde(serialize_with = "ser_result")]
    pub circ_neutral: Result<Verdict, MouldError>,
    #[serde(serialize_with = "ser_result")]
    pub circ_neutral_star: Result<Verdict, MouldError>,
    #[serde(serialize_with = "ser_result")]
    pub circ_constant: Result<Verdict, MouldError>,
    #[serde(serialize_with = "ser_result")]
    pub circ_constant_strict: Result<Verdict, MouldError>,
    /// The constant `c` when circ-constance holds.
    #[serde(serialize_with = "ser_opt_rational")]
    pub circ_constant_value: Option<Rational>,
}

fn ser_result<S: serde::Serializer>(v: &Result<Verdict, MouldError>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Ok(v) => v.serialize(s),
        Err(e) => s.serialize_str(&format!("n/a: {e}")),
    }
}

fn ser_opt_rational<S: serde::Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(q) => s.serialize_str(&crate::exact::rational::fmt_rational(q)),
        None => s.serialize_none(),
    }
}

/// Runs every predicate that applies to the mould's alphabet; the others
/// record an alphabet-mismatch error.
pub fn predicates(m: &Mould) -> PredicateReport {
    let cc = circ_constant(m, None);
    let (circ_constant, circ_constant_value) = match cc {
        Ok((v, c)) => (Ok(v), c),
        Err(e) => (Err(e), None),
    };
    PredicateReport {
        alphabet: m.alphabet(),
        alternal: is_alternal(m),
        mantar_invariant: mantar_invariant(m),
        push_invariant: is_push_invariant(m),
        senary: is_senary(m),
        in_ari_delta: in_ari_delta(m),
        circ_neutral: circ_neutral(m),
        circ_neutral_star: circ_neutral_star(m),
        circ_constant,
        circ_constant_strict: circ_constant_strict(m, None).map(|(v, _)| v),
        circ_constant_value,
    }
}

impl fmt::Display for PredicateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn line(f: &mut fmt::Formatter<'_>, name: &str, v: &Result<Verdict, MouldError>) -> fmt::Result {
            match v {
                Ok(v) => writeln!(f, "{name}: {v}"),
                Err(e) => writeln!(f, "{name}: n/a ({e})"),
            }
        }
        writeln!(f, "alternal: {}", self.alternal)?;
        writeln!(f, "mantar_invariant: {}", self.mantar_invariant)?;
        line(f, "push_invariant", &self.push_invariant)?;
        line(f, "senary", &self.senary)?;
        line(f, "in_ari_delta", &self.in_ari_delta)?;
        line(f, "circ_neutral", &self.circ_neutral)?;
        line(f, "circ_neutral_star", &self.circ_neutral_star)?;
        line(f, "circ_constant", &self.circ_constant)?;
        line(f, "circ_constant_strict", &self.circ_constant_strict)?;
        if let Some(c) = &self.circ_constant_value {
            writeln!(f, "circ_constant_value: {}", crate::exact::rational::fmt_rational(c))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarProperty {
    CircNeutral,
    Alternal,
}

/// Per-depth constants `K_r` such that `M + K` has the property, or `None`
/// if no constant-valued mould works. Depth 0 and 1 never need (or admit) a
/// correction for these properties.
pub fn star_correction(m: &Mould, property: StarProperty) -> Option<Vec<(usize, Rational)>> {
    let mut out = Vec::new();
    for r in m.depths().filter(|&r| r >= 2) {
        let v = m.value(r);
        // Each condition is linear: S(v) + k·S(1) = 0 with S the condition's
        // sum, so every condition has to agree on one k.
        let conditions: Vec<(RatFrac, Rational)> = match property {
            StarProperty::CircNeutral => vec![(circ_sum(r, &v), Rational::from_integer((r as i64).into()))],
            StarProperty::Alternal => (1..=r / 2)
                .map(|i| {
                    let count = crate::exact::rational::binomial(r as u64, i as u64);
                    (shuffle_sum(&v, i), Rational::from_integer(count))
                })
                .collect(),
        };
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (s, weight) in conditions {
            let s = s.as_constant()?;
            rows.push(vec![weight]);
            rhs.push(-s);
        }
        let k = crate::exact::matrix::solve_linear(&RatMatrix::from_rows(rows, 1), &rhs)?;
        if !k[0].is_zero() {
            out.push((r, k[0].clone()));
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use crate::exact::MultiPoly;
    use crate::mould::{delta_inv, ma, ma_neg, swap};
    use crate::words::NCPoly;

    fn u(r: usize, i: usize) -> MultiPoly {
        MultiPoly::var(r, i - 1)
    }

    fn p(s: &str) -> NCPoly {
        NCPoly::parse(s).unwrap()
    }

    #[test]
    fn alternality_examples() {
        let b3 = p("xxy - 2*xyx + yxx");
        assert!(is_alternal(&ma(&b3).unwrap()).holds);
        let f = p("xy - yx").bracket(&NCPoly::y());
        assert!(is_alternal(&ma(&f).unwrap()).holds);
        let bad = Mould::from_polys(Alphabet::U, [(2, u(2, 1))]);
        let v = is_alternal(&bad);
        assert!(!v.holds);
        assert!(v.witness.unwrap().contains("depth 2"));
        assert_eq!(shuffles(2, 4).len(), 6);
    }

    #[test]
    fn push_and_mantar_on_b3() {
        let m = ma(&p("xxy - 2*xyx + yxx")).unwrap();
        assert!(is_push_invariant(&m).unwrap().holds);
        assert!(mantar_invariant(&m).holds);
        assert!(is_push_invariant(&swap(&m)).is_err());
    }

    #[test]
    fn senary_holds_on_the_signed_mould_form() {
        let b = crate::words::nu_twist(&p("xxy - 2*xyx + yxx"));
        assert!(is_senary(&ma_neg(&b).unwrap()).unwrap().holds);
        assert!(!is_senary(&ma(&b).unwrap()).unwrap().holds);
        assert!(is_senary_untwisted(&ma(&b).unwrap()).unwrap().holds);
    }

    #[test]
    fn bpsi_is_circ_constant() {
        let v = |r: usize, i: usize| MultiPoly::var(r, i - 1);
        let q = |n, d| rat(n, d);
        let b2 = MultiPoly::from_terms(
            2,
            [
                (v(2, 1).pow(3), q(-2, 1)),
                (&v(2, 1).pow(2) * &v(2, 2), q(11, 2)),
                (&v(2, 1) * &v(2, 2).pow(2), q(-9, 2)),
                (v(2, 2).pow(3), q(3, 1)),
            ]
            .into_iter()
            .flat_map(|(m, c)| m.scale(&c).terms().map(|(a, b)| (a.clone(), b.clone())).collect::<Vec<_>>()),
        );
        let b3 = {
            let t = [
                (&v(3, 1) * &v(3, 1), q(2, 1)),
                (&v(3, 1) * &v(3, 2), q(-11, 2)),
                (&v(3, 2) * &v(3, 2), q(-1, 2)),
                (&v(3, 1) * &v(3, 3), q(9, 2)),
                (&v(3, 2) * &v(3, 3), q(2, 1)),
                (&v(3, 3) * &v(3, 3), q(-1, 2)),
            ];
            t.iter().fold(MultiPoly::zero(3), |acc, (m, c)| &acc + &m.scale(c))
        };
        let b4 = &(&(&v(4, 2).scale(&int(4)) - &v(4, 1)) - &v(4, 3).scale(&int(6))) + &v(4, 4).scale(&int(4));
        let bpsi = Mould::from_polys(Alphabet::V, [(1, v(1, 1).pow(4)), (2, b2), (3, b3), (4, b4)]);
        let (verdict, c) = circ_constant(&bpsi, None).unwrap();
        assert!(verdict.holds, "{verdict}");
        assert_eq!(c, Some(int(1)));
        // The displayed mould has no depth-5 value, so only the version with
        // a free top depth holds.
        assert!(!circ_constant_strict(&bpsi, None).unwrap().0.holds);
        let mut fixed = bpsi.clone();
        fixed.set(5, RatFrac::scalar(5, rat(1, 5)));
        assert!(circ_constant_strict(&fixed, None).unwrap().0.holds);
    }

    #[test]
    fn delta_inverse_lands_in_ari_delta() {
        let m = delta_inv(&ma(&p("xxy - 2*xyx + yxx")).unwrap());
        assert!(in_ari_delta(&m).unwrap().holds);
        let not = Mould::from_values(Alphabet::U, [(1, RatFrac::new(MultiPoly::one(1), &u(1, 1).pow(3)).unwrap())]);
        assert!(!in_ari_delta(&not).unwrap().holds);
    }

    #[test]
    fn star_correction_examples() {
        let m = Mould::from_polys(Alphabet::V, [(2, &u(2, 1) - &u(2, 2))]);
        assert_eq!(star_correction(&m, StarProperty::CircNeutral), Some(vec![]));
        let m = Mould::from_polys(Alphabet::V, [(2, u(2, 1))]);
        assert_eq!(star_correction(&m, StarProperty::CircNeutral), None);
        let m = Mould::constant(Alphabet::V, [(3, int(1))]);
        assert_eq!(star_correction(&m, StarProperty::CircNeutral), Some(vec![(3, int(-1))]));
    }
}
