//! Named moulds: `pic`, `poc`, `lopil`, `pil`, `pal`, `lopal`, the
//! logarithm of `invpal`, and the circ-constant moulds `T^n_c`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use super::series::{exp_ari_bar, log_ari};
use crate::exact::rational::{factorial, Rational};
use crate::exact::{monomial_sum, MultiPoly, RatFrac};
use crate::mould::{swap, Alphabet, Mould, MouldError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedMould {
    Pic,
    Poc,
    Lopil,
    Pil,
    Pal,
    Lopal,
    InvpalLog,
}

impl NamedMould {
    pub const ALL: [NamedMould; 7] = [
        NamedMould::Pic,
        NamedMould::Poc,
        NamedMould::Lopil,
        NamedMould::Pil,
        NamedMould::Pal,
        NamedMould::Lopal,
        NamedMould::InvpalLog,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedMould::Pic => "pic",
            NamedMould::Poc => "poc",
            NamedMould::Lopil => "lopil",
            NamedMould::Pil => "pil",
            NamedMould::Pal => "pal",
            NamedMould::Lopal => "lopal",
            NamedMould::InvpalLog => "invpal_log",
        }
    }

    pub fn from_name(s: &str) -> Option<NamedMould> {
        NamedMould::ALL.into_iter().find(|m| m.name() == s)
    }
}

/// Power series in one variable, coefficient `k` of `x^k`.
type Series = Vec<Rational>;

fn derivative(f: &Series) -> Series {
    f.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer((k as i64).into())).collect()
}

fn mul_trunc(a: &Series, b: &Series, len: usize) -> Series {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate() {
            if i + j < len {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `exp(g·d/dx)·x` modulo `x^len`.
fn flow(g: &Series, len: usize) -> Series {
    let mut term: Series = vec![Rational::zero(); len];
    term[1] = Rational::one();
    let mut out = term.clone();
    for k in 1..len {
        let mut next = mul_trunc(g, &derivative(&term), len);
        if next.iter().all(Zero::is_zero) {
            break;
        }
        let s = Rational::from_integer(k.into()).recip();
        next.iter_mut().for_each(|c| *c *= &s);
        for (o, t) in out.iter_mut().zip(&next) {
            *o += t;
        }
        term = next;
    }
    out
}

fn one_minus_exp_neg(len: usize) -> Series {
    (0..len)
        .map(|k| {
            if k == 0 {
                Rational::zero()
            } else {
                let s = if k % 2 == 1 { Rational::one() } else { -Rational::one() };
                s / Rational::from_integer(factorial(k as u32))
            }
        })
        .collect()
}

/// Coefficients `c₁,…,c_rmax` of the generator `f_*(x) = Σ c_r x^{r+1}` with
/// `exp(f_*·d/dx)·x = 1 − e^{−x}`, solved order by order: the coefficient of
/// `x^{r+1}` in the flow is `c_r` plus terms in `c₁,…,c_{r−1}`.
pub fn infinitesimal_generator(rmax: usize) -> Vec<Rational> {
    let len = rmax + 2;
    let target = one_minus_exp_neg(len);
    let mut g: Series = vec![Rational::zero(); len];
    for r in 1..=rmax {
        let current = flow(&g, len);
        g[r + 1] = &target[r + 1] - &current[r + 1];
    }
    g[2..].to_vec()
}

/// Re-substitutes the generator: `exp(f_*·d/dx)·x ≡ 1 − e^{−x}` modulo
/// `x^{rmax+2}`.
pub fn generator_flow_check(rmax: usize) -> bool {
    let len = rmax + 2;
    let mut g: Series = vec![Rational::zero(); 2];
    g.extend(infinitesimal_generator(rmax));
    flow(&g, len) == one_minus_exp_neg(len)
}

fn v(r: usize, i: usize) -> MultiPoly {
    MultiPoly::var(r, i)
}

/// `v₁(v₁−v₂)⋯(v_{r−1}−v_r)`.
fn chain_factors(r: usize) -> Vec<MultiPoly> {
    (0..r).map(|i| if i == 0 { v(r, 0) } else { &v(r, i - 1) - &v(r, i) }).collect()
}

fn pic(d: usize) -> Mould {
    let mut m = Mould::unit(Alphabet::V).truncate(d);
    for r in 1..=d {
        let f: Vec<MultiPoly> = (0..r).map(|i| v(r, i)).collect();
        m.set(r, RatFrac::one(r).div_polys(&f));
    }
    m
}

/// `1` in depth 0 and `−1/(v₁(v₁−v₂)⋯(v_{r−1}−v_r))` in depth `r ≥ 1`; with
/// this sign `ganit_bar(poc)` is the inverse of `ganit_bar(pic)`.
fn poc(d: usize) -> Mould {
    let mut m = Mould::unit(Alphabet::V).truncate(d);
    for r in 1..=d {
        m.set(r, RatFrac::scalar(r, -Rational::one()).div_polys(&chain_factors(r)));
    }
    m
}

fn lopil(d: usize) -> Mould {
    let c = infinitesimal_generator(d);
    let mut m = Mould::empty_with_bound(Alphabet::V, Some(d));
    for r in 1..=d {
        let mut f = chain_factors(r);
        f.push(v(r, r - 1));
        let num = MultiPoly::var_sum(r, 0..r).scale(&c[r - 1]);
        m.set(r, RatFrac::from_poly(num).div_polys(&f));
    }
    m
}

fn compute(name: NamedMould, d: usize) -> Result<Mould, MouldError> {
    Ok(match name {
        NamedMould::Pic => pic(d),
        NamedMould::Poc => poc(d),
        NamedMould::Lopil => lopil(d),
        NamedMould::Pil => exp_ari_bar(&named_mould(NamedMould::Lopil, d)?, d)?,
        NamedMould::Pal => swap(&named_mould(NamedMould::Pil, d)?),
        NamedMould::Lopal => log_ari(&named_mould(NamedMould::Pal, d)?, d)?,
        NamedMould::InvpalLog => named_mould(NamedMould::Lopal, d)?.neg_values(),
    })
}

type Cache = Mutex<HashMap<(NamedMould, usize), Mould>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The named mould exact to depth `d` (memoized per `(name, d)`).
pub fn named_mould(name: NamedMould, d: usize) -> Result<Mould, MouldError> {
    assert!(d >= 1, "truncation depth must be at least 1");
    if let Some(m) = cache().lock().expect("named mould cache poisoned").get(&(name, d)) {
        return Ok(m.clone());
    }
    // Computed outside the lock: the constructors recurse into the cache.
    let m = compute(name, d)?;
    cache().lock().expect("named mould cache poisoned").insert((name, d), m.clone());
    Ok(m)
}

/// `T^n_c`: the V-mould with depth-`r` value `(c/r)·Σ` (all monomials of
/// degree `n − r`), `1 ≤ r ≤ n`.
pub fn tnc_mould(n: usize, c: &Rational) -> Mould {
    assert!(n > 1, "T^n_c needs n > 1");
    let mut m = Mould::zero(Alphabet::V).with_weight(Some(n));
    for r in 1..=n {
        let s = c / Rational::from_integer(r.into());
        m.set(r, RatFrac::from_poly(monomial_sum(r, (n - r) as u32).scale(&s)));
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn generator_coefficients() {
        let c = infinitesimal_generator(5);
        assert_eq!(c, vec![rat(-1, 2), rat(-1, 12), rat(-1, 48), rat(-1, 180), rat(-11, 8640)]);
        assert!(generator_flow_check(8));
    }

    #[test]
    fn pic_poc_lopil_values() {
        let pc = named_mould(NamedMould::Poc, 3).unwrap();
        let f = RatFrac::new(MultiPoly::constant(2, int(-1)), &(&v(2, 0) * &(&v(2, 0) - &v(2, 1)))).unwrap();
        assert!(pc.value(2).frac_eq(&f));
        let pi = named_mould(NamedMould::Pic, 3).unwrap();
        let g = RatFrac::new(MultiPoly::one(3), &(&(&v(3, 0) * &v(3, 1)) * &v(3, 2))).unwrap();
        assert!(pi.value(3).frac_eq(&g));
        let lo = named_mould(NamedMould::Lopil, 2).unwrap();
        let h = RatFrac::new(MultiPoly::constant(1, rat(-1, 2)), &v(1, 0)).unwrap();
        assert!(lo.value(1).frac_eq(&h));
        assert_eq!(pc.constant_term(), int(1));
    }

    #[test]
    fn tnc_values() {
        let t = tnc_mould(3, &int(1));
        assert_eq!(t.value(3).as_constant(), Some(rat(1, 3)));
        assert!(t.value(1).frac_eq(&RatFrac::from_poly(v(1, 0).pow(2))));
    }
}
