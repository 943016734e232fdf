//! Integer arithmetic used by the exact searches once rational weights are
//! scaled to a common denominator.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

pub(crate) trait ExactInt:
    Clone + Ord + Zero + Integer + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + From<i64>
{
    fn from_big(b: &BigInt) -> Self;
    fn to_big(&self) -> BigInt;
}

impl ExactInt for i128 {
    fn from_big(b: &BigInt) -> Self {
        b.to_i128().expect("caller checked the i128 range")
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn from_big(b: &BigInt) -> Self {
        b.clone()
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// True if `x` fits comfortably under `2^bits`.
pub(crate) fn below_pow2(x: &BigInt, bits: u64) -> bool {
    x.bits() < bits
}
