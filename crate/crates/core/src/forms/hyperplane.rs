use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// A hyperplane `h_1 x_1 + ... + h_n x_n = 0` through the origin.
///
/// The normal is kept primitive: integer entries with gcd 1 and the first
/// nonzero entry positive, so every hyperplane has exactly one
/// representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: Vec<BigInt>,
}

impl Hyperplane {
    pub fn new(normal: &[BigRational]) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::ZeroNormal);
        }
        let denom = normal.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut ints: Vec<BigInt> = normal.iter().map(|q| q.numer() * (&denom / q.denom())).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let first_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        for x in &mut ints {
            *x = &*x / &content;
            if first_negative {
                *x = -&*x;
            }
        }
        Ok(Hyperplane { normal: ints })
    }

    pub fn from_integers(normal: &[i64]) -> Result<Self> {
        let q: Vec<BigRational> = normal.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        Self::new(&q)
    }

    pub fn nvars(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    /// Position of the first nonzero normal entry; this is the coordinate a
    /// section solves for.
    pub fn pivot(&self) -> usize {
        self.normal.iter().position(|x| !x.is_zero()).expect("nonzero normal")
    }

    pub fn linear_form<F: Scalar>(&self) -> Polynomial<F> {
        let coeffs: Vec<F> = self.normal.iter().map(F::from_bigint).collect();
        Polynomial::linear(&coeffs)
    }

    /// Whether the coordinate axis `x_i` lies in the hyperplane.
    pub fn contains_axis(&self, i: usize) -> bool {
        self.normal[i].is_zero()
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.normal.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
