use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{GaussRat, RadNum, Rat};
use crate::{Error, Result};

/// An exact field of characteristic zero containing the rationals.
///
/// Arithmetic goes through the owned `std::ops` operators; division is
/// fallible and spelled [`Field::try_div`].
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self>;
    fn from_rat(q: Rat) -> Self;
    fn to_radnum(&self) -> RadNum;
    /// The value of `x` in this field, when it lies there.
    fn from_radnum(x: &RadNum) -> Option<Self>;
    /// The value as a rational, when it is one.
    fn as_rat(&self) -> Option<Rat>;
    /// Whether the printed form starts with a minus sign.
    fn displays_negative(&self) -> bool;
    /// Whether the printed form is a single factor (no top-level `+`/`-`).
    fn is_atomic(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.inv()?)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn from_rat(q: Rat) -> Self {
        q
    }
    fn to_radnum(&self) -> RadNum {
        RadNum::from(self.clone())
    }
    fn from_radnum(x: &RadNum) -> Option<Self> {
        x.as_gauss().and_then(|g| g.as_rat())
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn displays_negative(&self) -> bool {
        self.is_negative()
    }
    fn is_atomic(&self) -> bool {
        true
    }
}

impl Field for GaussRat {
    fn zero() -> Self {
        GaussRat::zero()
    }
    fn one() -> Self {
        GaussRat::one()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn inv(&self) -> Result<Self> {
        GaussRat::inv(self)
    }
    fn from_rat(q: Rat) -> Self {
        GaussRat::from(q)
    }
    fn to_radnum(&self) -> RadNum {
        RadNum::from(self.clone())
    }
    fn from_radnum(x: &RadNum) -> Option<Self> {
        x.as_gauss()
    }
    fn as_rat(&self) -> Option<Rat> {
        Zero::is_zero(&self.im).then(|| self.re.clone())
    }
    fn displays_negative(&self) -> bool {
        GaussRat::displays_negative(self)
    }
    fn is_atomic(&self) -> bool {
        Zero::is_zero(&self.re) || Zero::is_zero(&self.im)
    }
}

impl Field for RadNum {
    fn zero() -> Self {
        RadNum::zero()
    }
    fn one() -> Self {
        RadNum::one()
    }
    fn is_zero(&self) -> bool {
        RadNum::is_zero(self)
    }
    fn inv(&self) -> Result<Self> {
        RadNum::inv(self)
    }
    fn from_rat(q: Rat) -> Self {
        RadNum::from(q)
    }
    fn to_radnum(&self) -> RadNum {
        self.clone()
    }
    fn from_radnum(x: &RadNum) -> Option<Self> {
        Some(x.clone())
    }
    fn as_rat(&self) -> Option<Rat> {
        self.as_gauss().and_then(|g| g.as_rat())
    }
    fn displays_negative(&self) -> bool {
        RadNum::displays_negative(self)
    }
    fn is_atomic(&self) -> bool {
        RadNum::is_atomic(self)
    }
}
