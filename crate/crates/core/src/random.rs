//! Seeded random inputs for property checks: small rational coefficients,
//! polynomial and rational moulds, Lie elements and elements of the
//! structured subspaces.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::frac::structural_forms;
use crate::exact::rational::rat;
use crate::exact::{Monomial, MultiPoly, RatFrac, Rational};
use crate::mould::ops::circ_sum;
use crate::mould::{Alphabet, Mould};
use crate::words::{lyndon_lie_basis, NCPoly};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Nonzero `p/q` with `|p| ≤ 4`, `1 ≤ q ≤ 3`.
    pub fn rational(&mut self) -> Rational {
        let mut p = 0;
        while p == 0 {
            p = self.rng.gen_range(-4..=4);
        }
        rat(p, self.rng.gen_range(1..=3))
    }

    /// At most `terms` random monomials of total degree `≤ max_degree`.
    pub fn poly(&mut self, arity: usize, max_degree: u16, terms: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(arity);
        for _ in 0..terms {
            let mut exps = vec![0u16; arity];
            let d = self.rng.gen_range(0..=max_degree);
            for _ in 0..d {
                if arity > 0 {
                    exps[self.rng.gen_range(0..arity)] += 1;
                }
            }
            p.add_term(Monomial::new(exps), self.rational());
        }
        p
    }

    /// Polynomial-valued mould with values in depths `1..=max_depth`.
    pub fn mould(&mut self, alphabet: Alphabet, max_depth: usize, max_degree: u16) -> Mould {
        let values: Vec<(usize, MultiPoly)> = (1..=max_depth).map(|r| (r, self.poly(r, max_degree, 3))).collect();
        Mould::from_polys(alphabet, values)
    }

    /// Like [`Sampler::mould`], with each value divided by up to two
    /// structural linear forms.
    pub fn rational_mould(&mut self, alphabet: Alphabet, max_depth: usize, max_degree: u16) -> Mould {
        let mut m = Mould::zero(alphabet);
        for r in 1..=max_depth {
            let forms = structural_forms(r);
            let k = self.rng.gen_range(0..=2);
            let dens: Vec<(MultiPoly, u32)> = forms.choose_multiple(&mut self.rng, k).map(|f| (f.clone(), 1)).collect();
            m.set(r, RatFrac::with_factors(self.poly(r, max_degree, 3), dens));
        }
        m
    }

    /// Constant-valued mould in depths `1..=max_depth`.
    pub fn constant_mould(&mut self, alphabet: Alphabet, max_depth: usize) -> Mould {
        let scalars: Vec<(usize, Rational)> = (1..=max_depth).map(|r| (r, self.rational())).collect();
        Mould::constant(alphabet, scalars)
    }

    /// Circ-neutral V-mould: each value of depth `r > 1` is projected onto
    /// the kernel of the circ sum.
    pub fn circ_neutral(&mut self, max_depth: usize, max_degree: u16) -> Mould {
        let m = self.mould(Alphabet::V, max_depth, max_degree);
        m.map_values(|r, v| if r > 1 { v.sub(&circ_sum(r, v).scale(&rat(1, r as i64))) } else { v.clone() })
    }

    /// Random rational combination of a nonempty subset of `basis`.
    pub fn combination(&mut self, basis: &[NCPoly]) -> NCPoly {
        let mut out = NCPoly::zero();
        if basis.is_empty() {
            return out;
        }
        while out.is_zero() {
            for b in basis {
                if self.rng.gen_bool(0.6) {
                    out.add_scaled(b, &self.rational());
                }
            }
        }
        out
    }

    /// Random homogeneous Lie element of weight `n ≥ 2`.
    pub fn lie(&mut self, n: usize) -> NCPoly {
        self.combination(&lyndon_lie_basis(n))
    }

    /// Random weight in `lo..=hi`.
    pub fn weight(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }
}
