//! The fundamental identity relating the adjoint actions of `pal` and `pil`:
//!
//! `swap·Ad_ari(pal)·M = ganit_bar(pic)·Ad_ari_bar(pil)·swap(M)` for
//! push-invariant `M`, and its rearranged form
//! `Ad_ari_bar(invpil)·ganit_bar(poc)·swap(N) = swap·Ad_ari(invpal)·N`
//! whenever `Ad_ari(invpal)·N` is push-invariant.

use serde::Serialize;

use super::ganit::ganit_bar;
use super::named::{named_mould, NamedMould};
use super::series::{ad_exponential, Bracket};
use crate::mould::{is_push_invariant, swap, Alphabet, Mould, MouldError};

#[derive(Clone, Debug, Serialize)]
pub struct FundamentalReport {
    pub holds: bool,
    /// First depth where the two sides differ.
    pub first_difference: Option<usize>,
    /// Whether the push-invariance hypothesis held for the relevant mould.
    pub hypothesis: bool,
    #[serde(skip)]
    pub lhs: Mould,
    #[serde(skip)]
    pub rhs: Mould,
}

/// `Ad_ari(invpal)·N = exp(ad_ari(−lopal))·N` to depth `d`.
pub fn ad_invpal(n: &Mould, d: usize) -> Result<Mould, MouldError> {
    ad_exponential(Bracket::Ari, &named_mould(NamedMould::InvpalLog, d)?, n, d)
}

/// `Ad_ari(pal)·M = exp(ad_ari(lopal))·M`.
pub fn ad_pal(m: &Mould, d: usize) -> Result<Mould, MouldError> {
    ad_exponential(Bracket::Ari, &named_mould(NamedMould::Lopal, d)?, m, d)
}

/// `Ad_ari_bar(pil)·M = exp(ad_ari_bar(lopil))·M`.
pub fn ad_pil(m: &Mould, d: usize) -> Result<Mould, MouldError> {
    ad_exponential(Bracket::AriBar, &named_mould(NamedMould::Lopil, d)?, m, d)
}

/// `Ad_ari_bar(invpil)·M = exp(ad_ari_bar(−lopil))·M`.
pub fn ad_invpil(m: &Mould, d: usize) -> Result<Mould, MouldError> {
    ad_exponential(Bracket::AriBar, &named_mould(NamedMould::Lopil, d)?.neg_values(), m, d)
}

fn report(lhs: Mould, rhs: Mould, hypothesis: bool) -> FundamentalReport {
    let first_difference = lhs.first_difference(&rhs);
    FundamentalReport { holds: first_difference.is_none(), first_difference, hypothesis, lhs, rhs }
}

/// Rearranged form for a U-mould `N`: both sides to depth `d`. The report
/// also records whether `Ad_ari(invpal)·N` is push-invariant.
pub fn fundamental_identity_check(n: &Mould, d: usize) -> Result<FundamentalReport, MouldError> {
    n.check_alphabet(Alphabet::U)?;
    let n = n.clone().truncate(d);
    let m = ad_invpal(&n, d)?;
    let rhs = swap(&m);
    let lhs = ad_invpil(&ganit_bar(&named_mould(NamedMould::Poc, d)?, &swap(&n))?, d)?;
    Ok(report(lhs, rhs, is_push_invariant(&m)?.holds))
}

/// Direct form for a push-invariant U-mould `M`.
pub fn fundamental_identity_direct(m: &Mould, d: usize) -> Result<FundamentalReport, MouldError> {
    m.check_alphabet(Alphabet::U)?;
    let m = m.clone().truncate(d);
    let lhs = swap(&ad_pal(&m, d)?);
    let rhs = ganit_bar(&named_mould(NamedMould::Pic, d)?, &ad_pil(&swap(&m), d)?)?;
    Ok(report(lhs, rhs, is_push_invariant(&m)?.holds))
}
