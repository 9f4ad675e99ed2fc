//! Scalar traits shared by the exact and floating-point kernels.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive};

/// Minimal ring/field interface used by the polynomial code.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> {}

impl<T: Clone + PartialEq + fmt::Debug + Num + Neg<Output = T>> Scalar for T {}

/// A scalar with exact arithmetic and integrality tests.
pub trait ExactScalar:
    Scalar + Ord + Signed + FromPrimitive + ToPrimitive + fmt::Display
{
    fn numer_big(&self) -> BigInt;
    fn denom_big(&self) -> BigInt;
    fn from_big(n: BigInt, d: BigInt) -> Self;

    fn is_integral(&self) -> bool {
        self.denom_big().is_one()
    }

    /// The value as an `i64` when it is an integer that fits.
    fn as_i64(&self) -> Option<i64> {
        if self.is_integral() {
            self.numer_big().to_i64()
        } else {
            None
        }
    }

    fn is_nonpositive_integer(&self) -> bool {
        self.is_integral() && !self.is_positive()
    }

    /// True when twice the value is an integer.
    fn is_half_integral(&self) -> bool {
        let d = self.denom_big();
        d.is_one() || d == BigInt::from(2)
    }
}

impl ExactScalar for BigRational {
    fn numer_big(&self) -> BigInt {
        self.numer().clone()
    }
    fn denom_big(&self) -> BigInt {
        self.denom().clone()
    }
    fn from_big(n: BigInt, d: BigInt) -> Self {
        BigRational::new(n, d)
    }
}

/// Convenience constructor for exact rationals.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer as a rational.
pub fn qi(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
