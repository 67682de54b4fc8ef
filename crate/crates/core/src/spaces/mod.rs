//! Exact bases and dimensions of the bigraded spaces `lkv`, `ls`, `V_krv`,
//! `gr krv`, `krv_ell` and `ds_ell`.
//!
//! Word-level spaces are parameterized by the Lyndon Lie basis, mould-level
//! spaces by the monomials of one depth. Each defining condition becomes a
//! family of linear rows; bases are the reduced echelon form of the kernel.

pub mod membership;
pub mod system;
mod table;

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::exact::rational::binomial;
use crate::exact::{compositions, over_common_denominator, Monomial, MultiPoly, RatFrac, Rational};
use crate::mould::ops::circ_sum;
use crate::mould::predicates::shuffle_sum;
use crate::mould::{delta_inv, ma, ma_inverse, neg, push, swap, Alphabet, Mould};
use crate::words::push::{orbit_representatives, push_class_sum};
use crate::words::{lyndon_lie_basis, lyndon_lie_basis_bidegree, Letter, NCPoly, Word};

pub use membership::{
    ds_ell_member, krv_ell_member, lkv_member, lkv_mould_member, ls_member, swap_alternal_star, vkrv_constant,
    vkrv_member, Check, Membership,
};
pub use system::{ConstraintSystem, Key};
pub use table::{dimension_table, Cell, DimensionTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    Lkv,
    Ls,
    Vkrv,
    GrKrv,
    KrvEll,
    DsEll,
}

impl Space {
    pub const ALL: [Space; 6] = [Space::Lkv, Space::Ls, Space::Vkrv, Space::GrKrv, Space::KrvEll, Space::DsEll];

    pub fn name(self) -> &'static str {
        match self {
            Space::Lkv => "lkv",
            Space::Ls => "ls",
            Space::Vkrv => "vkrv",
            Space::GrKrv => "gr_krv",
            Space::KrvEll => "krv_ell",
            Space::DsEll => "ds_ell",
        }
    }

    pub fn from_name(s: &str) -> Option<Space> {
        Space::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Whether cells are indexed by depth (`V_krv` is only filtered).
    pub fn is_bigraded(self) -> bool {
        self != Space::Vkrv
    }

    /// Whether `(n, r)` is inside the solver's domain.
    pub fn accepts(self, n: usize, r: usize) -> bool {
        match self {
            Space::Lkv | Space::Ls => n >= 3 && r >= 1 && r < n,
            Space::Vkrv => n >= 3,
            Space::GrKrv => n >= 3 && r >= 1 && r < n,
            Space::KrvEll | Space::DsEll => n >= 1 && r >= 1 && r <= n,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("{space} is not defined at weight {n}, depth {r}")]
    OutOfRange { space: Space, n: usize, r: usize },
}

/// Basis of one weight (and depth) piece. Word-level spaces fill `words`
/// and record the moulds `ma(b)`; mould-level spaces fill `moulds` and
/// record the Lie elements `ma⁻¹(P)`. For `gr krv` the words are the
/// depth-`r` leading parts.
#[derive(Clone, Debug)]
pub struct BigradedBasis {
    pub space: Space,
    pub n: usize,
    pub r: Option<usize>,
    pub words: Vec<NCPoly>,
    pub moulds: Vec<Mould>,
}

impl BigradedBasis {
    pub fn dim(&self) -> usize {
        self.words.len().max(self.moulds.len())
    }
}

fn check(space: Space, n: usize, r: usize) -> Result<(), SpaceError> {
    if space.accepts(n, r) {
        Ok(())
    } else {
        Err(SpaceError::OutOfRange { space, n, r })
    }
}

pub fn solve(space: Space, n: usize, r: usize) -> Result<BigradedBasis, SpaceError> {
    match space {
        Space::Lkv => solve_lkv(n, r),
        Space::Ls => solve_ls(n, r),
        Space::Vkrv => solve_vkrv(n),
        Space::GrKrv => solve_gr_krv(n, r),
        Space::KrvEll => solve_krv_ell(n, r),
        Space::DsEll => solve_ds_ell(n, r),
    }
}

fn word_basis(space: Space, n: usize, r: Option<usize>, params: &[NCPoly], sys: &ConstraintSystem) -> BigradedBasis {
    let words: Vec<NCPoly> = sys.kernel().iter().map(|v| system::combine_words(v, params)).collect();
    let moulds = words.iter().map(|b| ma(b).expect("Lie elements of positive depth lie in the C-span")).collect();
    BigradedBasis { space, n, r, words, moulds }
}

/// Rows expressing `push(b) = b`.
fn push_rows(sys: &mut ConstraintSystem, col: usize, b: &NCPoly, tag: u32) {
    sys.add_words(col, tag, &(&b.push() - b));
}

/// Lie elements of weight `n`, depth `r` that are push-invariant and (for
/// `r > 1`) circ-neutral: `(b)^y` has vanishing push-class sums.
pub fn solve_lkv(n: usize, r: usize) -> Result<BigradedBasis, SpaceError> {
    check(Space::Lkv, n, r)?;
    let params = lyndon_lie_basis_bidegree(n, r);
    let mut sys = ConstraintSystem::new(params.len());
    let reps = if r > 1 { orbit_representatives(n - 1, r - 1) } else { Vec::new() };
    for (j, b) in params.iter().enumerate() {
        push_rows(&mut sys, j, b, 0);
        let by = b.strip_first(Letter::Y);
        for &w in &reps {
            sys.add(j, Key::Word(1, w), push_class_sum(&by, w));
        }
    }
    Ok(word_basis(Space::Lkv, n, Some(r), &params, &sys))
}

/// Elements of `V_krv` of weight `n`: push-invariant Lie elements with
/// `b^y − b^x` push-constant for the value `(b | x^{n−1}y)`. All depths are
/// solved together.
pub fn solve_vkrv(n: usize) -> Result<BigradedBasis, SpaceError> {
    check(Space::Vkrv, n, 0)?;
    let params = lyndon_lie_basis(n);
    let m = n - 1;
    let reps: Vec<Word> = (1..m).flat_map(|r| orbit_representatives(m, r)).collect();
    let corner = Word::x_power(n - 1).concat(Word::Y);
    let mut sys = ConstraintSystem::new(params.len());
    for (j, b) in params.iter().enumerate() {
        push_rows(&mut sys, j, b, 0);
        let g = &b.strip_first(Letter::Y) - &b.strip_first(Letter::X);
        let c = b.coeff(corner);
        for &w in &reps {
            sys.add(j, Key::Word(1, w), push_class_sum(&g, w) - &c);
        }
        sys.add(j, Key::Word(2, Word::y_power(m)), g.coeff(Word::y_power(m)));
    }
    Ok(word_basis(Space::Vkrv, n, None, &params, &sys))
}

/// Push-invariant Lie elements of weight `n ≥ 2` (the partner-admitting
/// elements; domain of the `⟨,⟩` bracket).
pub fn push_invariant_lie_basis(n: usize) -> Vec<NCPoly> {
    let params = lyndon_lie_basis(n);
    let mut sys = ConstraintSystem::new(params.len());
    for (j, b) in params.iter().enumerate() {
        push_rows(&mut sys, j, b, 0);
    }
    sys.kernel().iter().map(|v| system::combine_words(v, &params)).collect()
}

/// Depth-`r` graded piece of the depth filtration on `V_krv` of weight `n`:
/// the leading parts of the elements whose parts of depth `< r` vanish.
pub fn solve_gr_krv(n: usize, r: usize) -> Result<BigradedBasis, SpaceError> {
    check(Space::GrKrv, n, r)?;
    let v = solve_vkrv(n)?;
    // F_r: combinations of the V_krv basis with no part of depth < r.
    let mut sys = ConstraintSystem::new(v.words.len());
    for (j, b) in v.words.iter().enumerate() {
        for (w, c) in b.terms().filter(|(w, _)| w.depth() < r) {
            sys.add(j, Key::Word(0, *w), c.clone());
        }
    }
    let leading: Vec<NCPoly> = sys.kernel().iter().map(|c| system::combine_words(c, &v.words).depth_part(r)).collect();
    // The leading-part map has kernel F_{r+1}; keep a basis of its image.
    let words = span_basis(&leading);
    let moulds = words.iter().map(|b| ma(b).expect("Lie elements of positive depth lie in the C-span")).collect();
    Ok(BigradedBasis { space: Space::GrKrv, n, r: Some(r), words, moulds })
}

/// Canonical basis of the span of some polynomials.
fn span_basis(fs: &[NCPoly]) -> Vec<NCPoly> {
    let mut words: Vec<Word> = fs.iter().flat_map(|f| f.terms().map(|(w, _)| *w)).collect();
    words.sort();
    words.dedup();
    let rows: Vec<Vec<Rational>> = fs.iter().map(|f| words.iter().map(|w| f.coeff(*w)).collect()).collect();
    crate::exact::matrix::canonical_span(&rows, words.len())
        .into_iter()
        .map(|row| NCPoly::from_terms(words.iter().copied().zip(row).filter(|(_, c)| !c.is_zero())))
        .collect()
}

/// The monomials of degree `d` in `r` variables, as depth-`r` U-moulds.
fn monomial_moulds(r: usize, d: usize) -> Vec<Mould> {
    compositions(r, d as u32)
        .into_iter()
        .map(|e| {
            let p = MultiPoly::from_terms(r, [(Monomial::new(e), Rational::from_integer(1.into()))]);
            Mould::concentrated(Alphabet::U, r, RatFrac::from_poly(p))
        })
        .collect()
}

fn alternal_rows(sys: &mut ConstraintSystem, col: usize, v: &RatFrac, tag: u32) {
    let r = v.arity();
    for i in 1..=r / 2 {
        sys.add_frac(col, tag + i as u32, &shuffle_sum(v, i));
    }
}

fn even_rows(sys: &mut ConstraintSystem, col: usize, p: &Mould, tag: u32) {
    sys.add_frac(col, tag, &neg(p).value(1).sub(&p.value(1)));
}

/// Rows for "`f_j` combine to a constant": the `f_j` are put over one
/// denominator `L`, and the extra column `k` contributes `weight·L`.
fn up_to_constant_rows(sys: &mut ConstraintSystem, fs: &[RatFrac], r: usize, k: usize, weight: &Rational, tag: u32) {
    let (nums, l) = over_common_denominator(fs, r);
    for (j, p) in nums.iter().enumerate() {
        sys.add_poly(j, tag, p);
    }
    sys.add_poly(k, tag, &l.scale(weight));
}

fn mould_basis(space: Space, n: usize, r: usize, params: &[Mould], kernel: &[Vec<Rational>]) -> BigradedBasis {
    let moulds: Vec<Mould> = kernel
        .iter()
        .map(|v| {
            let mut m = Mould::zero(Alphabet::U).with_weight(Some(n));
            for (c, p) in v.iter().zip(params).filter(|(c, _)| !c.is_zero()) {
                m = m.add(&p.scale(c));
            }
            m.with_weight(Some(n))
        })
        .collect();
    let words = moulds.iter().map(|m| ma_inverse(m).expect("polynomial moulds have a word form")).collect();
    BigradedBasis { space, n, r: Some(r), words, moulds }
}

/// Polynomial moulds of degree `n − r` in depth `r`: alternal with alternal
/// swap, even in depth 1.
pub fn solve_ls(n: usize, r: usize) -> Result<BigradedBasis, SpaceError> {
    check(Space::Ls, n, r)?;
    let params = monomial_moulds(r, n - r);
    let mut sys = ConstraintSystem::new(params.len());
    for (j, p) in params.iter().enumerate() {
        alternal_rows(&mut sys, j, &p.value(r), 0);
        alternal_rows(&mut sys, j, &swap(p).value(r), 100);
        if r == 1 {
            even_rows(&mut sys, j, p, 200);
        }
    }
    Ok(mould_basis(Space::Ls, n, r, &params, &sys.kernel()))
}

/// Polynomial moulds `P` of degree `n − r` in depth `r` such that `Δ⁻¹P` is
/// alternal and push-invariant and `swap(Δ⁻¹P)` is circ-neutral up to a
/// constant. Alternality and push-invariance are imposed on `P` itself: the
/// factor `u₁⋯u_r(u₁+⋯+u_r)` is symmetric and push-invariant.
pub fn solve_krv_ell(n: usize, r: usize) -> Result<BigradedBasis, SpaceError> {
    check(Space::KrvEll, n, r)?;
    let params = monomial_moulds(r, n - r);
    let k = params.len();
    let mut sys = ConstraintSystem::new(k + 1);
    let mut circ = Vec::new();
    for (j, p) in params.iter().enumerate() {
        alternal_rows(&mut sys, j, &p.value(r), 0);
        let pushed = push(p).expect("U-mould");
        sys.add_frac(j, 100, &pushed.value(r).sub(&p.value(r)));
        if r > 1 {
            circ.push(circ_sum(r, &swap(&delta_inv(p)).value(r)));
        }
    }
    if r > 1 {
        up_to_constant_rows(&mut sys, &circ, r, k, &Rational::from_integer((r as i64).into()), 200);
    }
    Ok(mould_basis(Space::KrvEll, n, r, &params, &without_constant(&sys, k)))
}

/// Polynomial moulds `P` of degree `n − r` in depth `r` with `Δ⁻¹P`
/// alternal, `swap(Δ⁻¹P)` alternal up to a constant, and `P` even in depth 1.
pub fn solve_ds_ell(n: usize, r: usize) -> Result<BigradedBasis, SpaceError> {
    check(Space::DsEll, n, r)?;
    let params = monomial_moulds(r, n - r);
    let k = params.len();
    let mut sys = ConstraintSystem::new(k + 1);
    let swapped: Vec<RatFrac> = params.iter().map(|p| swap(&delta_inv(p)).value(r)).collect();
    for (j, p) in params.iter().enumerate() {
        alternal_rows(&mut sys, j, &p.value(r), 0);
        if r == 1 {
            even_rows(&mut sys, j, p, 100);
        }
    }
    for i in 1..=r / 2 {
        let sums: Vec<RatFrac> = swapped.iter().map(|v| shuffle_sum(v, i)).collect();
        let count = Rational::from_integer(binomial(r as u64, i as u64));
        up_to_constant_rows(&mut sys, &sums, r, k, &count, 200 + i as u32);
    }
    Ok(mould_basis(Space::DsEll, n, r, &params, &without_constant(&sys, k)))
}

/// Kernel of a system whose last column is an auxiliary constant, projected
/// onto the parameter columns. The constant is determined by the
/// parameters, so the projection is injective.
fn without_constant(sys: &ConstraintSystem, k: usize) -> Vec<Vec<Rational>> {
    let projected: Vec<Vec<Rational>> = sys.kernel().into_iter().map(|v| v[..k].to_vec()).collect();
    crate::exact::matrix::canonical_span(&projected, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn dims(space: Space, n: usize, r: usize) -> usize {
        solve(space, n, r).unwrap().dim()
    }

    #[test]
    fn lkv_small_cells() {
        let b = solve_lkv(3, 1).unwrap();
        assert_eq!(b.dim(), 1);
        let b3 = NCPoly::parse("xxy - 2*xyx + yxx").unwrap();
        assert_eq!(b.words[0].scale(&(int(1) / b.words[0].coeff(Word::parse("xxy").unwrap()))), b3);
        assert_eq!(dims(Space::Lkv, 4, 1), 0);
        assert_eq!(dims(Space::Lkv, 5, 2), 0);
        assert!(solve_lkv(3, 3).is_err());
    }

    #[test]
    fn ls_small_cells() {
        assert_eq!(dims(Space::Ls, 3, 1), 1);
        assert_eq!(dims(Space::Ls, 6, 1), 0);
        for (n, r) in [(5, 1), (6, 2), (7, 1), (8, 2)] {
            assert_eq!(dims(Space::Ls, n, r), dims(Space::Lkv, n, r), "({n}, {r})");
        }
    }

    #[test]
    fn vkrv_and_gr_krv() {
        assert_eq!(solve_vkrv(3).unwrap().dim(), 1);
        assert_eq!(solve_vkrv(4).unwrap().dim(), 0);
        assert!(solve_vkrv(5).unwrap().dim() >= 1);
        assert_eq!(dims(Space::GrKrv, 3, 1), 1);
        let g = solve_gr_krv(5, 1).unwrap();
        assert_eq!(g.dim(), 1);
        let bbar = NCPoly::parse("xxxxy - 4*xxxyx + 6*xxyxx - 4*xyxxx + yxxxx").unwrap();
        let lead = &g.words[0];
        assert_eq!(lead.scale(&(int(1) / lead.coeff(Word::parse("xxxxy").unwrap()))), bbar);
    }

    #[test]
    fn krv_ell_and_ds_ell_small_cells() {
        let k = solve_krv_ell(5, 1).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.moulds[0].value(1).as_poly().unwrap().degree(), Some(4));
        assert_eq!(dims(Space::DsEll, 4, 1), 0);
        assert_eq!(dims(Space::DsEll, 5, 1), 1);
        for r in 1..=3 {
            for n in r..=7 {
                for p in solve_krv_ell(n, r).unwrap().moulds {
                    assert!(krv_ell_member(&p).holds(), "krv_ell ({n}, {r})");
                }
                for p in solve_ds_ell(n, r).unwrap().moulds {
                    assert!(ds_ell_member(&p).holds(), "ds_ell ({n}, {r})");
                }
            }
        }
    }
}
