//! Smale invariants of immersions `S^3 -> R^5`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::surface::SeifertSurfaceModel;

/// Data of a singular Seifert surface (a generic map `V^4 -> R^5` restricting
/// to the immersion on the boundary): the signature of `V^4` and the
/// algebraic number of cusp points, which equals the Euler number of the
/// singular-set bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularSeifertData {
    pub sigma: BigInt,
    pub cusps: BigInt,
}

impl SingularSeifertData {
    pub fn new(sigma: impl Into<BigInt>, cusps: impl Into<BigInt>) -> Self {
        SingularSeifertData {
            sigma: sigma.into(),
            cusps: cusps.into(),
        }
    }
}

/// `omega = (3 sigma + cusps) / 2`.
pub fn smale_from_singular(data: &SingularSeifertData) -> Result<BigInt> {
    let total: BigInt = &data.sigma * 3 + &data.cusps;
    let (q, r) = total.div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(Error::ParityViolation);
    }
    Ok(q)
}

/// Smale invariant of the projection to `R^5` of the boundary of a
/// compressible embedding: `(3 sigma + e.e) / 2`.
///
/// Always even, and `= 2 sigma (mod 4)`, because `sigma = e.e (mod 8)`.
pub fn smale_of_projection(surface: &SeifertSurfaceModel) -> BigInt {
    let data = SingularSeifertData {
        sigma: BigInt::from(surface.signature()),
        cusps: surface.cup_square(),
    };
    smale_from_singular(&data).expect("3 sigma + e.e is even for characteristic e")
}

/// Whether an immersion with Smale invariant `omega` lifts to an embedding
/// in `R^6`, i.e. whether `omega` is even.
pub fn is_liftable_parity(omega: &BigInt) -> bool {
    omega.is_even()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ekholm_szucs_formula() {
        assert_eq!(
            smale_from_singular(&SingularSeifertData::new(0, 0)),
            Ok(BigInt::from(0))
        );
        assert_eq!(
            smale_from_singular(&SingularSeifertData::new(-1, 7)),
            Ok(BigInt::from(2))
        );
        assert_eq!(
            smale_from_singular(&SingularSeifertData::new(1, 0)),
            Err(Error::ParityViolation)
        );
        assert_eq!(
            smale_from_singular(&SingularSeifertData::new(-3, 0)),
            Err(Error::ParityViolation)
        );
    }

    #[test]
    fn projections() {
        let s = SeifertSurfaceModel::s2xs2(1, 1);
        assert_eq!(smale_of_projection(&s), BigInt::from(4));
        assert_eq!(
            smale_from_singular(&SingularSeifertData::new(0, 8)),
            Ok(smale_of_projection(&s))
        );
        assert_eq!(smale_of_projection(&SeifertSurfaceModel::p_block()), BigInt::from(2));
        assert_eq!(
            smale_of_projection(&SeifertSurfaceModel::kummer(0, 0)),
            BigInt::from(-24)
        );
    }

    #[test]
    fn parity() {
        assert!(is_liftable_parity(&BigInt::from(0)));
        assert!(is_liftable_parity(&BigInt::from(4)));
        assert!(is_liftable_parity(&BigInt::from(-2)));
        assert!(!is_liftable_parity(&BigInt::from(3)));
        assert!(!is_liftable_parity(&BigInt::from(-1)));
    }
}
