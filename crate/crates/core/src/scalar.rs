//! Scalar traits shared by the cyclotomic and symmetric-function layers.
//!
//! Everything in this crate is exact. [`Coefficient`] is an exact rational
//! type (`Ratio<i64>` for quick small computations, `BigRational` for the
//! real work); [`Scalar`] is any ring the symmetric-function machinery can
//! carry coefficients in, which is either such a rational type or a
//! cyclotomic number over one.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, Zero};

/// An exact rational number type usable as a field of coefficients.
pub trait Coefficient:
    Clone + Debug + Display + FromStr + Eq + Ord + Num + Signed + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    fn from_frac(numer: i64, denom: i64) -> Self {
        Self::from_int(numer) / Self::from_int(denom)
    }

    /// Lossless conversion to an arbitrary-precision rational.
    fn to_big(&self) -> BigRational;
}

impl<T> Coefficient for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + From<i64>
        + Into<BigInt>
        + Display
        + Debug
        + FromStr
        + Send
        + Sync
        + 'static,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from(v))
    }

    fn to_big(&self) -> BigRational {
        BigRational::new(self.numer().clone().into(), self.denom().clone().into())
    }
}

/// A commutative ring with an involution, containing the rationals.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    type Rational: Coefficient;

    fn from_rational(q: Self::Rational) -> Self;

    /// Complex conjugation.
    fn conj(&self) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(<Self::Rational as Coefficient>::from_int(v))
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(<Self::Rational as Coefficient>::from_frac(numer, denom))
    }

    fn scale(&self, q: &Self::Rational) -> Self {
        if q.is_one() {
            return self.clone();
        }
        self.clone() * Self::from_rational(q.clone())
    }

    /// Returns the value as a rational when it is one.
    fn as_rational(&self) -> Option<Self::Rational>;
}

impl<T> Scalar for Ratio<T>
where
    Ratio<T>: Coefficient,
    T: Clone + Integer,
{
    type Rational = Self;

    fn from_rational(q: Self) -> Self {
        q
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn as_rational(&self) -> Option<Self> {
        Some(self.clone())
    }
}

/// `base^exp` for any scalar, by repeated squaring.
pub fn pow<K: Scalar>(base: &K, mut exp: u32) -> K {
    let mut acc = K::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * sq.clone();
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.clone() * sq;
        }
    }
    acc
}
