//! The explicit chunk-sum form of `ganit_bar(Q)` on V-moulds:
//!
//! `(ganit_bar(Q)·T)(v) = Σ Q(⌊b₁)⋯Q(⌊b_s) T(a₁⋯a_s)` over decompositions
//! `v = a₁b₁⋯a_sb_s` with every chunk nonempty except possibly `b_s`, where
//! `⌊b` subtracts from each variable of `b` the variable just before `b`.

use std::ops::Range;

use crate::exact::{MultiPoly, RatFrac};
use crate::mould::{Alphabet, Mould, MouldError};

/// One decomposition: the `a`-chunks and `b`-chunks as position ranges.
#[derive(Clone, Debug, Default)]
struct Chunks {
    a: Vec<Range<usize>>,
    b: Vec<Range<usize>>,
}

fn decompositions(r: usize) -> Vec<Chunks> {
    fn go(pos: usize, r: usize, cur: &mut Chunks, out: &mut Vec<Chunks>) {
        for a_end in pos + 1..=r {
            cur.a.push(pos..a_end);
            if a_end == r {
                out.push(cur.clone());
            }
            for b_end in a_end + 1..=r {
                cur.b.push(a_end..b_end);
                if b_end == r {
                    out.push(cur.clone());
                } else {
                    go(b_end, r, cur, out);
                }
                cur.b.pop();
            }
            cur.a.pop();
        }
    }
    let mut out = Vec::new();
    if r > 0 {
        go(0, r, &mut Chunks::default(), &mut out);
    }
    out
}

pub fn ganit_bar(q: &Mould, t: &Mould) -> Result<Mould, MouldError> {
    q.check_alphabet(Alphabet::V)?;
    t.check_alphabet(Alphabet::V)?;
    let mut out = q.empty_like(t).with_weight(t.weight());
    if let Some(c) = t.value_ref(0) {
        out.set(0, c.clone());
    }
    let limit = out.bound().unwrap_or_else(|| {
        // Exact inputs: Q contributes arbitrarily long b-chunks only if it
        // has values there, so the result stops at max(T) + max(Q).
        t.max_depth().unwrap_or(0) + q.max_depth().unwrap_or(0)
    });
    for r in 1..=limit {
        let mut acc = RatFrac::zero(r);
        for d in decompositions(r) {
            let len_a: usize = d.a.iter().map(|x| x.len()).sum();
            let Some(tv) = t.value_ref(len_a) else { continue };
            let mut term = {
                let map: Vec<usize> = d.a.iter().flat_map(|x| x.clone()).collect();
                tv.remap(r, &map)
            };
            for b in &d.b {
                let Some(qv) = q.value_ref(b.len()) else {
                    term = RatFrac::zero(r);
                    break;
                };
                let anchor = MultiPoly::var(r, b.start - 1);
                let images: Vec<MultiPoly> = b.clone().map(|k| &MultiPoly::var(r, k) - &anchor).collect();
                term = term.mul(&qv.substitute(&images, r));
            }
            acc = acc.add(&term);
        }
        out.set(r, acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    #[test]
    fn decomposition_counts() {
        assert_eq!(decompositions(1).len(), 1);
        assert_eq!(decompositions(2).len(), 2);
        assert_eq!(decompositions(3).len(), 4);
    }

    #[test]
    fn depth_two_formula() {
        let v = |r: usize, i: usize| MultiPoly::var(r, i);
        let q = Mould::from_polys(Alphabet::V, [(1, v(1, 0).pow(2))]);
        let t = Mould::from_polys(Alphabet::V, [(1, v(1, 0)), (2, v(2, 1))]);
        let g = ganit_bar(&q, &t).unwrap();
        let expect = &v(2, 1) + &(&(&v(2, 1) - &v(2, 0)).pow(2) * &v(2, 0));
        assert!(g.value(2).frac_eq(&RatFrac::from_poly(expect)));
        assert!(ganit_bar(&q, &Mould::zero(Alphabet::V)).unwrap().is_zero());
        let c = Mould::constant(Alphabet::V, [(1, int(1))]);
        assert!(ganit_bar(&c, &Mould::zero(Alphabet::U)).is_err());
    }
}
