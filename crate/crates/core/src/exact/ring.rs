use std::fmt;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// A commutative ring with the few extra hooks that series arithmetic needs.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn from_int(n: i64) -> Self;

    /// Multiplicative inverse, when this element is a unit.
    fn try_inv(&self) -> Option<Self>;

    /// Exact division by a nonzero integer, when it exists in the ring.
    fn try_div_int(&self, n: i64) -> Option<Self>;
}

impl Ring for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn try_div_int(&self, n: i64) -> Option<Self> {
        (n != 0).then(|| self / Rational::from_integer(BigInt::from(n)))
    }
}

impl Ring for BigInt {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn try_inv(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }

    fn try_div_int(&self, n: i64) -> Option<Self> {
        if n == 0 {
            return None;
        }
        let d = BigInt::from(n);
        (self % &d).is_zero().then(|| self / d)
    }
}

impl Ring for i64 {
    fn from_int(n: i64) -> Self {
        n
    }

    fn try_inv(&self) -> Option<Self> {
        (self.abs() == 1).then_some(*self)
    }

    fn try_div_int(&self, n: i64) -> Option<Self> {
        (n != 0 && self % n == 0).then(|| self / n)
    }
}

