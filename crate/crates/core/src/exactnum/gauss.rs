use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::Rat;
use crate::{Error, Result};

/// Gaussian rational `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Self::new(Rat::one(), Rat::zero())
    }

    pub fn i() -> Self {
        Self::new(Rat::zero(), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn scale(&self, q: &Rat) -> Self {
        Self::new(&self.re * q, &self.im * q)
    }

    pub(crate) fn displays_negative(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else {
            self.re.is_negative()
        }
    }
}

impl From<Rat> for GaussRat {
    fn from(q: Rat) -> Self {
        Self::new(q, Rat::zero())
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        Self::from(Rat::from_integer(n.into()))
    }
}

impl Add for GaussRat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussRat {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussRat {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for GaussRat {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

fn fmt_imag(im: &Rat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if im.is_one() {
        write!(f, "i")
    } else if *im == -Rat::one() {
        write!(f, "-i")
    } else {
        write!(f, "{im}*i")
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => fmt_imag(&self.im, f),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.is_positive() {
                    write!(f, "+")?;
                }
                fmt_imag(&self.im, f)
            }
        }
    }
}

impl Serialize for GaussRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn field_basics() {
        let z = GaussRat::new(rat(1, 2), rat(-3, 1));
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, GaussRat::one());
        assert_eq!(z.conj().conj(), z);
        assert_eq!(&GaussRat::i() * &GaussRat::i(), GaussRat::from(-1));
        assert_eq!(GaussRat::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!((&z * &z.conj()).re, z.norm_sqr());
    }

    #[test]
    fn display() {
        assert_eq!(GaussRat::new(rat(1, 2), rat(0, 1)).to_string(), "1/2");
        assert_eq!(GaussRat::i().to_string(), "i");
        assert_eq!(GaussRat::new(rat(1, 1), rat(-1, 1)).to_string(), "1-i");
        assert_eq!(GaussRat::new(rat(0, 1), rat(3, 2)).to_string(), "3/2*i");
    }
}
