//! Unary mould operators. All act depth by depth.

use super::{partial_sum, Alphabet, Mould, MouldError};
use crate::exact::{MultiPoly, RatFrac};

fn var(r: usize, i: usize) -> MultiPoly {
    MultiPoly::var(r, i)
}

/// `u₁⋯u_r`.
pub(crate) fn var_product(r: usize) -> MultiPoly {
    (0..r).fold(MultiPoly::one(r), |acc, i| &acc * &var(r, i))
}

/// Factors of `u₁⋯u_r(u₁+⋯+u_r)`.
pub(crate) fn delta_factors(r: usize) -> Vec<MultiPoly> {
    let mut fs: Vec<MultiPoly> = (0..r).map(|i| var(r, i)).collect();
    fs.push(partial_sum(r, 0..r));
    fs
}

/// `swap`: U → V is `B(v_r, v_{r−1}−v_r, …, v₁−v₂)`, V → U is
/// `C(u₁+⋯+u_r, u₁+⋯+u_{r−1}, …, u₁)`.
pub fn swap(m: &Mould) -> Mould {
    let target = m.alphabet().flip();
    let out = m.map_values(|r, v| {
        if r == 0 {
            return v.clone();
        }
        let images: Vec<MultiPoly> = match m.alphabet() {
            Alphabet::U => {
                (0..r).map(|i| if i == 0 { var(r, r - 1) } else { &var(r, r - 1 - i) - &var(r, r - i) }).collect()
            }
            Alphabet::V => (0..r).map(|i| partial_sum(r, 0..r - i)).collect(),
        };
        v.substitute(&images, r)
    });
    out.with_alphabet(target)
}

/// `(push B)(u₁,…,u_r) = B(u₀, u₁, …, u_{r−1})` with `u₀ = −u₁−⋯−u_r`. In
/// depth 1 this is `B(−u₁)`.
pub fn push(m: &Mould) -> Result<Mould, MouldError> {
    m.check_alphabet(Alphabet::U)?;
    Ok(m.map_values(|r, v| {
        if r == 0 {
            return v.clone();
        }
        let images: Vec<MultiPoly> =
            (0..r).map(|i| if i == 0 { -partial_sum(r, 0..r) } else { var(r, i - 1) }).collect();
        v.substitute(&images, r)
    }))
}

/// `A(−u₁,…,−u_r)`.
pub fn neg(m: &Mould) -> Mould {
    m.map_values(|r, v| {
        if r == 0 {
            return v.clone();
        }
        let images: Vec<MultiPoly> = (0..r).map(|i| -var(r, i)).collect();
        v.substitute(&images, r)
    })
}

/// `(−1)^{r−1} A(u_r,…,u₁)`.
pub fn mantar(m: &Mould) -> Mould {
    m.map_values(|r, v| {
        if r == 0 {
            return v.neg();
        }
        let map: Vec<usize> = (0..r).map(|i| r - 1 - i).collect();
        let w = v.remap(r, &map);
        if r % 2 == 0 {
            w.neg()
        } else {
            w
        }
    })
}

/// `(−1)^r A`.
pub fn pari(m: &Mould) -> Mould {
    m.map_values(|r, v| if r % 2 == 1 { v.neg() } else { v.clone() })
}

/// Multiplication by `u₁⋯u_r`.
pub fn dar(m: &Mould) -> Mould {
    m.map_values(|r, v| v.mul_poly(&var_product(r)))
}

/// Division by `u₁⋯u_r`, as rational functions.
pub fn dar_inv(m: &Mould) -> Mould {
    m.map_values(|r, v| v.div_polys(&(0..r).map(|i| var(r, i)).collect::<Vec<_>>()))
}

/// Division by `u₁⋯u_r` that must stay polynomial.
pub fn dar_inv_exact(m: &Mould) -> Result<Mould, MouldError> {
    let out = dar_inv(m);
    for (r, v) in out.values() {
        if !v.is_polynomial() && m.value(r).is_polynomial() {
            return Err(MouldError::NotDivisible { depth: r });
        }
    }
    Ok(out)
}

/// `circ(B)(v₁,…,v_r) = B(v₂,…,v_r,v₁)`.
pub fn circ(m: &Mould) -> Result<Mould, MouldError> {
    m.check_alphabet(Alphabet::V)?;
    Ok(circ_unchecked(m))
}

pub(crate) fn circ_unchecked(m: &Mould) -> Mould {
    m.map_values(|r, v| circ_value(r, v, 1))
}

/// `circ^k` applied to one depth-`r` value.
pub(crate) fn circ_value(r: usize, v: &RatFrac, k: usize) -> RatFrac {
    if r <= 1 || k.is_multiple_of(r) {
        return v.clone();
    }
    // B(v_{1+k}, …): variable j is sent to v_{(j+k) mod r}.
    let map: Vec<usize> = (0..r).map(|j| (j + k) % r).collect();
    v.remap(r, &map)
}

/// `teru(B)`: equal to `B` in depths 0 and 1, and in depth `r ≥ 2`
/// `B(u₁,…,u_r) + (1/u_r)(B(u₁,…,u_{r−2},u_{r−1}+u_r) − B(u₁,…,u_{r−1}))`.
/// Exact moulds get one extra depth (the correction term of the top depth).
pub fn teru(m: &Mould) -> Result<Mould, MouldError> {
    m.check_alphabet(Alphabet::U)?;
    let top = match m.bound() {
        Some(b) => b,
        None => m.max_depth().map_or(0, |d| d + 1),
    };
    let mut out = Mould::empty_with_bound(Alphabet::U, m.bound()).with_weight(m.weight());
    for r in 0..=top {
        let b = m.value(r);
        if r <= 1 {
            out.accumulate(r, &b);
            continue;
        }
        let prev = m.value(r - 1);
        if prev.is_zero() {
            out.accumulate(r, &b);
            continue;
        }
        let plain: Vec<MultiPoly> = (0..r - 1).map(|i| var(r, i)).collect();
        let mut merged = plain.clone();
        merged[r - 2] = partial_sum(r, r - 2..r);
        let diff = &prev.substitute(&merged, r) - &prev.substitute(&plain, r);
        out.accumulate(r, &(&b + &diff.div_polys(&[var(r, r - 1)])));
    }
    Ok(out)
}

/// Multiplication of the depth-`r` value by `u₁⋯u_r(u₁+⋯+u_r)`.
pub fn delta_op(m: &Mould) -> Mould {
    m.map_values(|r, v| {
        let mut p = MultiPoly::one(r);
        for f in delta_factors(r) {
            p = &p * &f;
        }
        v.mul_poly(&p)
    })
}

/// Division by `u₁⋯u_r(u₁+⋯+u_r)`; the depth-0 value must be zero.
pub fn delta_inv(m: &Mould) -> Mould {
    assert!(m.value_ref(0).is_none(), "delta_inv of a mould with nonzero constant term");
    m.map_values(|r, v| v.div_polys(&delta_factors(r)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Neg,
    Mantar,
    Pari,
    Dar,
    DarInv,
    Circ,
    Push,
    Swap,
    Teru,
    Delta,
    DeltaInv,
}

impl UnaryOp {
    pub const ALL: [UnaryOp; 11] = [
        UnaryOp::Neg,
        UnaryOp::Mantar,
        UnaryOp::Pari,
        UnaryOp::Dar,
        UnaryOp::DarInv,
        UnaryOp::Circ,
        UnaryOp::Push,
        UnaryOp::Swap,
        UnaryOp::Teru,
        UnaryOp::Delta,
        UnaryOp::DeltaInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UnaryOp::Neg => "neg",
            UnaryOp::Mantar => "mantar",
            UnaryOp::Pari => "pari",
            UnaryOp::Dar => "dar",
            UnaryOp::DarInv => "dar_inv",
            UnaryOp::Circ => "circ",
            UnaryOp::Push => "push",
            UnaryOp::Swap => "swap",
            UnaryOp::Teru => "teru",
            UnaryOp::Delta => "delta",
            UnaryOp::DeltaInv => "delta_inv",
        }
    }

    pub fn from_name(s: &str) -> Option<UnaryOp> {
        UnaryOp::ALL.into_iter().find(|op| op.name() == s)
    }
}

/// Dispatch by operator name. `dar_inv` here is the checked (polynomial)
/// version.
pub fn unary(m: &Mould, op: UnaryOp) -> Result<Mould, MouldError> {
    match op {
        UnaryOp::Neg => Ok(neg(m)),
        UnaryOp::Mantar => Ok(mantar(m)),
        UnaryOp::Pari => Ok(pari(m)),
        UnaryOp::Dar => Ok(dar(m)),
        UnaryOp::DarInv => dar_inv_exact(m),
        UnaryOp::Circ => circ(m),
        UnaryOp::Push => push(m),
        UnaryOp::Swap => Ok(swap(m)),
        UnaryOp::Teru => teru(m),
        UnaryOp::Delta => {
            m.check_alphabet(Alphabet::U)?;
            Ok(delta_op(m))
        }
        UnaryOp::DeltaInv => {
            m.check_alphabet(Alphabet::U)?;
            if m.value_ref(0).is_some() {
                return Err(MouldError::Malformed("delta_inv needs a zero constant term".into()));
            }
            Ok(delta_inv(m))
        }
    }
}

/// `Σ_{i<r} circ^i(B)` in depth `r`.
pub fn circ_sum(r: usize, v: &RatFrac) -> RatFrac {
    let mut s = RatFrac::zero(r);
    for k in 0..r {
        s = &s + &circ_value(r, v, k);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn u(r: usize, i: usize) -> MultiPoly {
        MultiPoly::var(r, i - 1)
    }

    fn concentrated(alpha: Alphabet, p: MultiPoly) -> Mould {
        let r = p.arity();
        Mould::from_polys(alpha, [(r, p)])
    }

    #[test]
    fn swap_examples() {
        let m = concentrated(Alphabet::U, u(1, 1).pow(2));
        assert_eq!(swap(&m), concentrated(Alphabet::V, u(1, 1).pow(2)));
        let m = concentrated(Alphabet::U, &u(2, 1) - &u(2, 2));
        let expect = &u(2, 2).scale(&int(2)) - &u(2, 1);
        assert_eq!(swap(&m), concentrated(Alphabet::V, expect));
        assert_eq!(swap(&swap(&m)), m);
    }

    #[test]
    fn push_examples() {
        let m = concentrated(Alphabet::U, &u(2, 1) * &u(2, 2));
        let u0 = -(&u(2, 1) + &u(2, 2));
        assert_eq!(push(&m).unwrap(), concentrated(Alphabet::U, &u0 * &u(2, 1)));
        let mut p = m.clone();
        for _ in 0..3 {
            p = push(&p).unwrap();
        }
        assert_eq!(p, m);
        assert!(push(&swap(&m)).is_err());
    }

    #[test]
    fn small_unary_examples() {
        let one2 = Mould::constant(Alphabet::U, [(2, int(1))]);
        assert_eq!(dar(&one2), concentrated(Alphabet::U, &u(2, 1) * &u(2, 2)));
        assert_eq!(dar_inv_exact(&dar(&one2)).unwrap(), one2);
        assert!(dar_inv_exact(&concentrated(Alphabet::U, u(2, 1))).is_err());
        let one1 = Mould::constant(Alphabet::U, [(1, int(1))]);
        assert_eq!(delta_op(&one1), concentrated(Alphabet::U, u(1, 1).pow(2)));
        let m = concentrated(Alphabet::U, &u(3, 1) - &u(3, 3).scale(&int(2)));
        assert_eq!(pari(&pari(&m)), m);
        assert_eq!(delta_inv(&delta_op(&m)), m);
        let v = concentrated(Alphabet::V, u(3, 1));
        assert_eq!(circ(&v).unwrap(), concentrated(Alphabet::V, u(3, 2)));
    }

    #[test]
    fn teru_examples() {
        let b = concentrated(Alphabet::U, u(1, 1));
        assert_eq!(teru(&b).unwrap().value(1), b.value(1));
        assert!(teru(&Mould::zero(Alphabet::U)).unwrap().is_zero());
        // B = u₁ in depth 1 only: depth 2 picks up (1/u₂)((u₁+u₂) − u₁) = 1.
        let t = teru(&b).unwrap();
        assert_eq!(t.value(2).as_constant(), Some(int(1)));
    }
}
