//! Scalar abstractions.
//!
//! Character coefficients live in any signed field-like type: exact rationals
//! (`BigRational`, `Rational64`) or floats. Smith normal form runs over any
//! Euclidean integer type with checked arithmetic, so a fixed-width fast path
//! can bail out to `BigInt` on overflow.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::{BigInt, ToBigInt};
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Num, Signed};

/// Coefficient type of a character.
pub trait Coefficient:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + FromStr + Send + Sync
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer embeds into the coefficient type")
    }

    fn half(&self) -> Self {
        self.clone() / Self::from_int(2)
    }
}

impl<T> Coefficient for T where
    T: Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + FromStr + Send + Sync
{
}

/// Integer ring used by Smith normal form elimination.
pub trait SnfRing:
    Clone
    + Debug
    + Display
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToBigInt
    + Send
    + Sync
{
    fn to_big(&self) -> BigInt {
        self.to_bigint().expect("integers convert to BigInt")
    }
}

impl<T> SnfRing for T where
    T: Clone
        + Debug
        + Display
        + Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToBigInt
        + Send
        + Sync
{
}
