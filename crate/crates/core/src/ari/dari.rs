//! The `Dari` bracket, the transfer of `ari` by `Δ`, and the derivations
//! `Darit(A) = dar∘(−arit(Δ⁻¹A) + ad(Δ⁻¹A))∘dar⁻¹` with `ad(X)·Y = lu(X,Y)`.

use super::{ari, arit, lu};
use crate::mould::{dar, dar_inv, delta_inv, delta_op, Alphabet, Mould, MouldError};

pub fn darit(a: &Mould, b: &Mould) -> Result<Mould, MouldError> {
    a.check_alphabet(Alphabet::U)?;
    b.check_alphabet(Alphabet::U)?;
    let x = delta_inv(a);
    let y = dar_inv(b);
    let inner = lu(&x, &y)?.sub(&arit(&x, &y)?);
    Ok(dar(&inner))
}

/// `Δ(ari(Δ⁻¹A, Δ⁻¹B))`.
pub fn dari(a: &Mould, b: &Mould) -> Result<Mould, MouldError> {
    a.check_alphabet(Alphabet::U)?;
    b.check_alphabet(Alphabet::U)?;
    Ok(delta_op(&ari(&delta_inv(a), &delta_inv(b))?))
}

/// `Darit(A)·B − Darit(B)·A`.
pub fn dari_via_darit(a: &Mould, b: &Mould) -> Result<Mould, MouldError> {
    Ok(darit(a, b)?.sub(&darit(b, a)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mould::ma;
    use crate::words::{angle_bracket, NCPoly};

    #[test]
    fn dari_matches_the_angle_bracket_with_swapped_arguments() {
        // Push-invariant Lie elements of weight 5 in depths 1 and 2.
        let basis = crate::spaces::push_invariant_lie_basis(5);
        let (f, g) = (basis[0].depth_part(1), basis[1].depth_part(2));
        let (mf, mg) = (ma(&f).unwrap(), ma(&g).unwrap());
        let angle = angle_bracket(&f, &g).unwrap();
        assert!(!angle.is_zero());
        assert_eq!(dari(&mg, &mf).unwrap(), ma(&angle).unwrap());
        assert_eq!(dari_via_darit(&mg, &mf).unwrap(), ma(&angle).unwrap());
        assert_ne!(dari(&mf, &mg).unwrap(), ma(&angle).unwrap());
        let b3 = NCPoly::parse("xxy - 2*xyx + yxx").unwrap();
        let m3 = ma(&b3).unwrap();
        assert!(dari(&m3, &m3).unwrap().is_zero());
    }
}
