use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::integer::{coprime_base, square_part};
use super::{GaussRat, Rat};
use crate::{Error, Result};

/// `Σ c_s·√s` with pairwise distinct squarefree radicands `s ≥ 1` and nonzero
/// Gaussian-rational coefficients. Radicand `1` carries the rational part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadNum {
    terms: BTreeMap<BigUint, GaussRat>,
}

fn one_radicand() -> BigUint {
    BigUint::one()
}

impl RadNum {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from(GaussRat::one())
    }

    pub fn i() -> Self {
        Self::from(GaussRat::i())
    }

    /// `c·√s` for an arbitrary positive integer `s`.
    pub fn radical(c: GaussRat, s: &BigUint) -> Self {
        assert!(!s.is_zero(), "radicand must be positive");
        let (f, core) = square_part(s);
        let mut out = Self::zero();
        out.insert(core, c.scale(&Rat::from_integer(BigInt::from(f))));
        out
    }

    fn insert(&mut self, s: BigUint, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&s) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&s);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(s, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(radicand, coefficient)` in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &GaussRat)> {
        self.terms.iter()
    }

    /// The value as a Gaussian rational, when no nontrivial radical occurs.
    pub fn as_gauss(&self) -> Option<GaussRat> {
        match self.terms.len() {
            0 => Some(GaussRat::zero()),
            1 => self.terms.get(&one_radicand()).cloned(),
            _ => None,
        }
    }

    /// The value as an integer, when it is one.
    pub fn is_integer(&self) -> Option<BigInt> {
        let g = self.as_gauss()?;
        (g.im.is_zero() && g.re.is_integer()).then(|| g.re.to_integer())
    }

    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(s, c)| (s.clone(), c.conj())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        let mut out = Self::zero();
        for (s, v) in &self.terms {
            out.insert(s.clone(), v * c);
        }
        out
    }

    /// Flips the sign of every term whose radicand is divisible by `b`.
    fn flip(&self, b: &BigUint) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| {
                    let c = if (s % b).is_zero() { -c.clone() } else { c.clone() };
                    (s.clone(), c)
                })
                .collect(),
        }
    }

    /// Multiplicative inverse by repeated conjugation over a coprime base of
    /// the radicands.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(g) = self.as_gauss() {
            return Ok(Self::from(g.inv()?));
        }
        let base = coprime_base(self.terms.keys().cloned());
        let b = &base[0];
        let conj = self.flip(b);
        let norm = self.clone() * conj.clone();
        Ok(conj * norm.inv()?)
    }

    /// Exact square root, supported when the value is a Gaussian rational
    /// whose square root lies in the radical field.
    pub fn sqrt(&self) -> Result<Self> {
        let g = self.as_gauss().ok_or_else(|| {
            Error::UnsupportedAlgebraicDegree(format!("square root of {self}"))
        })?;
        sqrt_gauss(&g)
    }

    pub(crate) fn displays_negative(&self) -> bool {
        self.terms.values().next().is_some_and(|c| c.displays_negative())
    }

    pub(crate) fn is_atomic(&self) -> bool {
        match self.terms.iter().next() {
            None => true,
            Some((_, c)) => self.terms.len() == 1 && (c.re.is_zero() || c.im.is_zero()),
        }
    }
}

/// `√q` as a radical number; negative inputs give `i·√|q|`.
pub fn sqrt_rational(q: &Rat) -> RadNum {
    if q.is_zero() {
        return RadNum::zero();
    }
    let n = q.numer().abs().to_biguint().expect("nonnegative");
    let d = q.denom().to_biguint().expect("positive");
    let (f, s) = square_part(&(&n * &d));
    let coeff = Rat::new(BigInt::from(f), BigInt::from(d));
    let c = if q.is_negative() {
        GaussRat::new(Rat::zero(), coeff)
    } else {
        GaussRat::from(coeff)
    };
    let mut out = RadNum::zero();
    out.insert(s, c);
    out
}

fn rational_sqrt_exact(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().to_biguint()?;
    let d = q.denom().to_biguint()?;
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == n && &rd * &rd == d)
        .then(|| Rat::new(BigInt::from_biguint(Sign::Plus, rn), BigInt::from(rd)))
}

fn sqrt_gauss(g: &GaussRat) -> Result<RadNum> {
    if g.im.is_zero() {
        return Ok(sqrt_rational(&g.re));
    }
    let modulus = rational_sqrt_exact(&g.norm_sqr())
        .ok_or_else(|| Error::UnsupportedAlgebraicDegree(format!("square root of {g}")))?;
    let half = Rat::new(1.into(), 2.into());
    let u_sq = (&g.re + &modulus) * &half;
    let u = sqrt_rational(&u_sq);
    // v = im / (2u) = im·u / (2u²)
    let v = u.scale(&GaussRat::from(&g.im / (&u_sq * Rat::from_integer(2.into()))));
    Ok(u + v * RadNum::i())
}

impl From<GaussRat> for RadNum {
    fn from(c: GaussRat) -> Self {
        let mut out = Self::zero();
        out.insert(one_radicand(), c);
        out
    }
}

impl From<Rat> for RadNum {
    fn from(q: Rat) -> Self {
        Self::from(GaussRat::from(q))
    }
}

impl From<i64> for RadNum {
    fn from(n: i64) -> Self {
        Self::from(GaussRat::from(n))
    }
}

impl Add for RadNum {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (s, c) in o.terms {
            self.insert(s, c);
        }
        self
    }
}

impl Sub for RadNum {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for RadNum {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(s, c)| (s, -c)).collect(),
        }
    }
}

impl Mul for RadNum {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<'a> Mul<&'a RadNum> for &'a RadNum {
    type Output = RadNum;
    fn mul(self, o: &RadNum) -> RadNum {
        let mut out = RadNum::zero();
        for (s1, c1) in &self.terms {
            for (s2, c2) in &o.terms {
                // √s1·√s2 = g·√(s1 s2 / g²) for squarefree s1, s2
                let g = s1.gcd(s2);
                let s = (s1 / &g) * (s2 / &g);
                let c = (c1 * c2).scale(&Rat::from_integer(BigInt::from(g)));
                out.insert(s, c);
            }
        }
        out
    }
}

fn fmt_term(s: &BigUint, c: &GaussRat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if s.is_one() {
        return write!(f, "{c}");
    }
    let atomic = c.re.is_zero() || c.im.is_zero();
    if *c == GaussRat::one() {
        write!(f, "sqrt({s})")
    } else if *c == -GaussRat::one() {
        write!(f, "-sqrt({s})")
    } else if atomic {
        write!(f, "{c}*sqrt({s})")
    } else {
        write!(f, "({c})*sqrt({s})")
    }
}

impl fmt::Display for RadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (s, c)) in self.terms.iter().enumerate() {
            if idx > 0 && !c.displays_negative() {
                write!(f, "+")?;
            }
            fmt_term(s, c, f)?;
        }
        Ok(())
    }
}

impl Serialize for RadNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn sqrt_int(n: u32) -> RadNum {
        RadNum::radical(GaussRat::one(), &BigUint::from(n))
    }

    #[test]
    fn sqrt_rational_examples() {
        assert_eq!(sqrt_rational(&int(9)), RadNum::from(3));
        assert_eq!(sqrt_rational(&int(8)), sqrt_int(2).scale(&GaussRat::from(2)));
        assert_eq!(sqrt_rational(&int(-4)), RadNum::from(GaussRat::new(int(0), int(2))));
        assert_eq!(sqrt_rational(&rat(1, 2)).to_string(), "1/2*sqrt(2)");
    }

    #[test]
    fn is_integer_examples() {
        let half = GaussRat::from(rat(1, 2));
        let z = (RadNum::one() + sqrt_rational(&int(9))).scale(&half);
        assert_eq!(z.is_integer(), Some(BigInt::from(2)));
        let w = (RadNum::one() + sqrt_rational(&int(5))).scale(&half);
        assert_eq!(w.is_integer(), None);
        let t = RadNum::from(3) + sqrt_int(2).scale(&GaussRat::zero());
        assert_eq!(t.is_integer(), Some(BigInt::from(3)));
        assert_eq!(RadNum::i().is_integer(), None);
    }

    #[test]
    fn radicand_products() {
        assert_eq!(sqrt_int(2) * sqrt_int(3), sqrt_int(6));
        assert_eq!(sqrt_int(6) * sqrt_int(10), sqrt_int(15).scale(&GaussRat::from(2)));
        let a = RadNum::one() + sqrt_int(2);
        let b = RadNum::one() - sqrt_int(2);
        assert_eq!(a.clone() * b, RadNum::from(-1));
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        let a = RadNum::one() + sqrt_int(2);
        let inv = a.inv().unwrap();
        assert_eq!(inv, RadNum::from(-1) + sqrt_int(2));
        assert_eq!(a * inv, RadNum::one());
    }

    #[test]
    fn inverse_over_several_radicands() {
        let a = RadNum::from(GaussRat::new(int(1), int(1)))
            + sqrt_int(6)
            + sqrt_int(10).scale(&GaussRat::from(rat(-2, 3)))
            + sqrt_int(35);
        assert_eq!(a.clone() * a.inv().unwrap(), RadNum::one());
    }

    #[test]
    fn gaussian_square_roots() {
        let two_i = RadNum::from(GaussRat::new(int(0), int(2)));
        let r = two_i.sqrt().unwrap();
        assert_eq!(r.clone() * r, two_i);
        let z = RadNum::from(GaussRat::new(int(3), int(4)));
        let r = z.sqrt().unwrap();
        assert_eq!(r.clone() * r, z);
        let bad = RadNum::from(GaussRat::new(int(1), int(1)));
        assert!(matches!(bad.sqrt(), Err(Error::UnsupportedAlgebraicDegree(_))));
        assert!(matches!(sqrt_int(2).sqrt(), Err(Error::UnsupportedAlgebraicDegree(_))));
    }

    #[test]
    fn display_forms() {
        let a = RadNum::one() - sqrt_int(2);
        assert_eq!(a.to_string(), "1-sqrt(2)");
        assert_eq!(sqrt_int(3).scale(&GaussRat::i()).to_string(), "i*sqrt(3)");
        assert_eq!(RadNum::zero().to_string(), "0");
    }
}
