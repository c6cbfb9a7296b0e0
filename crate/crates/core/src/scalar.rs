//! Coefficient fields.
//!
//! Everything in this crate is generic over [`Scalar`]. Exact work is done
//! with [`BigRational`]; the floating point and `i64` ratio impls exist for
//! cheap experiments and are not suitable for Groebner computations.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Signed, ToPrimitive};

/// A field of coefficients.
pub trait Scalar: Signed + Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_i64(numer) / Self::from_i64(denom)
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

impl Scalar for Rational64 {
    fn from_bigint(n: &BigInt) -> Self {
        Rational64::from_integer(n.to_i64().expect("integer does not fit in i64"))
    }
}

impl Scalar for f64 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f32().unwrap_or(f32::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_reduce() {
        let q = BigRational::from_ratio(6, 4);
        assert_eq!(q.to_string(), "3/2");
        assert_eq!(Rational64::from_ratio(6, 4), Rational64::new(3, 2));
        assert_eq!(f64::from_ratio(1, 4), 0.25);
    }
}
