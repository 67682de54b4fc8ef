//! Named, seeded identity checks on random inputs. Each check draws its
//! inputs from a [`Sampler`] seeded with the given seed and reports the first
//! failing depth, if any.

use std::fmt;

use serde::Serialize;

use crate::ari::{ari, ari_bar, dari, dari_via_darit, ganit_bar, lu, named_mould, NamedMould};
use crate::mould::{circ_neutral, is_alternal, ma, mantar, neg, push, swap, Alphabet, Mould, MouldError};
use crate::random::Sampler;
use crate::spaces::push_invariant_lie_basis;
use crate::words::{angle_bracket, poisson_bracket};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    SwapInvolution,
    PushOrder,
    NegPush,
    GanitInverse,
    AriAlternal,
    AriBarCircNeutral,
    AriConstant,
    LuBracket,
    AriPoisson,
    DariAngle,
    DariRoutes,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::SwapInvolution,
        Property::PushOrder,
        Property::NegPush,
        Property::GanitInverse,
        Property::AriAlternal,
        Property::AriBarCircNeutral,
        Property::AriConstant,
        Property::LuBracket,
        Property::AriPoisson,
        Property::DariAngle,
        Property::DariRoutes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::SwapInvolution => "swap_involution",
            Property::PushOrder => "push_order",
            Property::NegPush => "neg_push",
            Property::GanitInverse => "ganit_inverse",
            Property::AriAlternal => "ari_alternal",
            Property::AriBarCircNeutral => "ari_bar_circ_neutral",
            Property::AriConstant => "ari_constant",
            Property::LuBracket => "lu_bracket",
            Property::AriPoisson => "ari_poisson",
            Property::DariAngle => "dari_angle",
            Property::DariRoutes => "dari_routes",
        }
    }

    pub fn from_name(s: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.name() == s)
    }

    pub fn description(self) -> &'static str {
        match self {
            Property::SwapInvolution => "swap∘swap = id",
            Property::PushOrder => "push^{r+1} = id in depth r",
            Property::NegPush => "neg∘push = mantar∘swap∘mantar∘swap",
            Property::GanitInverse => "ganit_bar(pic)∘ganit_bar(poc) = id to depth 4",
            Property::AriAlternal => "ari of alternal moulds is alternal",
            Property::AriBarCircNeutral => "ari_bar of circ-neutral moulds is circ-neutral",
            Property::AriConstant => "ari(constant, M) = 0",
            Property::LuBracket => "lu(ma f, ma g) = ma[f, g]",
            Property::AriPoisson => "ari(ma f, ma g) = ma{f, g}",
            Property::DariAngle => "Dari(ma f, ma g) = ma⟨g, f⟩ on push-invariant f, g",
            Property::DariRoutes => "Δ∘ari∘(Δ⁻¹, Δ⁻¹) = Darit(A)·B − Darit(B)·A",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyOutcome {
    pub property: Property,
    pub seed: u64,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

fn compare(a: &Mould, b: &Mould) -> Option<String> {
    a.first_difference(b).map(|r| format!("sides differ in depth {r}"))
}

fn flag(ok: bool, what: &str) -> Option<String> {
    (!ok).then(|| what.to_string())
}

fn run(p: Property, s: &mut Sampler) -> Result<Option<String>, MouldError> {
    Ok(match p {
        Property::SwapInvolution => {
            let a = if s.weight(0, 1) == 0 { Alphabet::U } else { Alphabet::V };
            let m = s.rational_mould(a, 5, 3);
            compare(&swap(&swap(&m)), &m)
        }
        Property::PushOrder => {
            let m = s.rational_mould(Alphabet::U, 5, 3);
            let mut out = None;
            for r in 1..=5 {
                let mut q = m.depth_part(r);
                for _ in 0..=r {
                    q = push(&q)?;
                }
                out = out.or_else(|| compare(&q, &m.depth_part(r)));
            }
            out
        }
        Property::NegPush => {
            let m = s.rational_mould(Alphabet::U, 5, 3);
            compare(&neg(&push(&m)?), &mantar(&swap(&mantar(&swap(&m)))))
        }
        Property::GanitInverse => {
            let t = s.mould(Alphabet::V, 4, 3);
            let pic = named_mould(NamedMould::Pic, 4)?;
            let poc = named_mould(NamedMould::Poc, 4)?;
            compare(&ganit_bar(&pic, &ganit_bar(&poc, &t)?)?, &t)
        }
        Property::AriAlternal => {
            let (n, m) = (s.weight(2, 5), s.weight(2, 5));
            let (a, b) = (ma(&s.lie(n))?, ma(&s.lie(m))?);
            flag(is_alternal(&a).holds && is_alternal(&ari(&a, &b)?).holds, "bracket is not alternal")
        }
        Property::AriBarCircNeutral => {
            let (a, b) = (s.circ_neutral(4, 3), s.circ_neutral(3, 3));
            flag(circ_neutral(&ari_bar(&a, &b)?)?.holds, "bracket is not circ-neutral")
        }
        Property::AriConstant => {
            let c = s.constant_mould(Alphabet::U, 4);
            let m = s.rational_mould(Alphabet::U, 3, 2);
            flag(ari(&c, &m)?.is_zero(), "ari(constant, M) ≠ 0")
        }
        Property::LuBracket => {
            let (f, g) = lie_pair(s);
            compare(&lu(&ma(&f)?, &ma(&g)?)?, &ma(&f.bracket(&g))?)
        }
        Property::AriPoisson => {
            let (f, g) = lie_pair(s);
            compare(&ari(&ma(&f)?, &ma(&g)?)?, &ma(&poisson_bracket(&f, &g))?)
        }
        Property::DariAngle | Property::DariRoutes => {
            let (n, m) = ([3, 5, 6][s.weight(0, 2)], [3, 5, 6][s.weight(0, 2)]);
            let f = s.combination(&push_invariant_lie_basis(n));
            let g = s.combination(&push_invariant_lie_basis(m));
            let (mf, mg) = (ma(&f)?, ma(&g)?);
            let d = dari(&mf, &mg)?;
            if p == Property::DariRoutes {
                compare(&d, &dari_via_darit(&mf, &mg)?)
            } else {
                compare(&d, &ma(&angle_bracket(&g, &f)?)?)
            }
        }
    })
}

/// Two random Lie elements of weights `2..=6`.
fn lie_pair(s: &mut Sampler) -> (crate::words::NCPoly, crate::words::NCPoly) {
    let (n, m) = (s.weight(2, 6), s.weight(2, 6));
    (s.lie(n), s.lie(m))
}

pub fn check_property(p: Property, seed: u64) -> PropertyOutcome {
    let mut s = Sampler::new(seed ^ (p as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let (holds, witness) = match run(p, &mut s) {
        Ok(None) => (true, None),
        Ok(Some(w)) => (false, Some(w)),
        Err(e) => (false, Some(e.to_string())),
    };
    PropertyOutcome { property: p, seed, holds, witness }
}

/// Runs `p` on seeds `first..first + count`, stopping at the first failure.
pub fn check_property_seeds(p: Property, first: u64, count: u64) -> Result<u64, PropertyOutcome> {
    for seed in first..first + count {
        let o = check_property(p, seed);
        if !o.holds {
            return Err(o);
        }
    }
    Ok(count)
}
