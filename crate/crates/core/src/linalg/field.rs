use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact field of characteristic zero used for all linear algebra.
///
/// Implemented for [`BigRational`] (the rationals) and
/// [`Scalar`](super::Scalar) (the Gaussian rationals). Every algorithm in the
/// crate that only needs field operations is generic over this trait, which
/// lets the same computation be run over both fields and compared.
pub trait Field:
    Clone
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: BigRational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_rational(r: BigRational) -> Self {
        r
    }
}
