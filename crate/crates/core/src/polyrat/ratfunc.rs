use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Serialize, Serializer};

use super::Poly;
use crate::exactnum::{Field, Rat};
use crate::{Error, Result};

/// Rational function `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let l = den.lead().expect("nonzero").inv()?;
        Ok(Self { num: num.scale(&l), den: den.scale(&l) })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    /// `c/(x - a)^k`.
    pub fn pole_term(c: F, a: F, k: u32) -> Self {
        Self::new(Poly::constant(c), Poly::linear_root(a).pow(k)).expect("nonzero denominator")
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_constant() && self.num.is_constant()
    }

    pub fn as_constant(&self) -> Option<F> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn as_poly(&self) -> Option<&Poly<F>> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(Self { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn eval(&self, x: &F) -> Result<F> {
        self.num.eval(x).try_div(&self.den.eval(x))
    }

    /// `r(p/q)` for a rational argument.
    pub fn compose(&self, arg: &Self) -> Result<Self> {
        let horner = |p: &Poly<F>| {
            p.coeffs()
                .iter()
                .rev()
                .fold(Self::zero(), |acc, c| &(&acc * arg) + &Self::constant(c.clone()))
        };
        horner(&self.num).try_div(&horner(&self.den))
    }

    /// `r(1/x)`.
    pub fn invert_variable(&self) -> Self {
        let n = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let rev = |p: &Poly<F>| {
            let mut c = p.coeffs().to_vec();
            c.resize(n + 1, F::zero());
            c.reverse();
            Poly::new(c)
        };
        Self::new(rev(&self.num), rev(&self.den)).expect("nonzero denominator")
    }

    /// `deg den - deg num`; `None` for the zero function.
    pub fn order_at_infinity(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.den.degree_i64() - self.num.degree_i64())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::new(self.num.map(&f), self.den.map(&f)).expect("nonzero denominator")
    }
}

impl<F: Field> From<Poly<F>> for RatFunc<F> {
    fn from(p: Poly<F>) -> Self {
        Self::from_poly(p)
    }
}

macro_rules! rf_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, F: Field> $tr<&'a RatFunc<F>> for &'a RatFunc<F> {
            type Output = RatFunc<F>;
            fn $method(self, o: &RatFunc<F>) -> RatFunc<F> {
                let f: fn(&RatFunc<F>, &RatFunc<F>) -> RatFunc<F> = $body;
                f(self, o)
            }
        }
        impl<F: Field> $tr for RatFunc<F> {
            type Output = RatFunc<F>;
            fn $method(self, o: RatFunc<F>) -> RatFunc<F> {
                (&self).$method(&o)
            }
        }
    };
}

fn add_like<F: Field>(a: &RatFunc<F>, b: &RatFunc<F>, sign: bool) -> RatFunc<F> {
    let combine = |x: Poly<F>, y: Poly<F>| if sign { &x + &y } else { &x - &y };
    if a.den == b.den {
        return RatFunc::new(combine(a.num.clone(), b.num.clone()), a.den.clone())
            .expect("nonzero denominator");
    }
    let g = a.den.gcd(&b.den);
    let ad = a.den.exact_div(&g);
    let bd = b.den.exact_div(&g);
    let num = combine(&a.num * &bd, &b.num * &ad);
    RatFunc::new(num, &ad * &b.den).expect("nonzero denominator")
}

rf_binop!(Add, add, |a, b| add_like(a, b, true));
rf_binop!(Sub, sub, |a, b| add_like(a, b, false));
rf_binop!(Mul, mul, |a, b| {
    if a.is_zero() || b.is_zero() {
        return RatFunc::zero();
    }
    if a.is_polynomial() && b.is_polynomial() {
        return RatFunc::from_poly(&a.num * &b.num);
    }
    RatFunc::new(&a.num * &b.num, &a.den * &b.den).expect("nonzero denominator")
});

impl<F: Field> Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<F: Field> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        -self.clone()
    }
}

impl<F: Field> RatFunc<F> {
    /// Prints with a custom variable name.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a, F>(&'a RatFunc<F>, &'a str);
        impl<F: Field> fmt::Display for D<'_, F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let r = self.0;
                if r.is_polynomial() {
                    return write!(f, "{}", r.num.display_in(self.1));
                }
                let l = common_denominator(&r.num);
                let num_p = r.num.scale(&F::from_rat(Rat::from_integer(l.clone())));
                let num = num_p.display_in(self.1).to_string();
                let num = if num_p.term_count() > 1 { format!("({num})") } else { num };
                let den = r.den.display_in(self.1).to_string();
                let den_single = r.den.term_count() == 1;
                match (l == 1.into(), den_single) {
                    (true, true) => write!(f, "{num}/{den}"),
                    (true, false) => write!(f, "{num}/({den})"),
                    (false, true) => write!(f, "{num}/({l}*{den})"),
                    (false, false) => write!(f, "{num}/({l}*({den}))"),
                }
            }
        }
        D(self, var)
    }
}

/// Least common denominator of the coefficients when all are rational, else 1.
fn common_denominator<F: Field>(p: &Poly<F>) -> BigInt {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        match c.as_rat() {
            Some(q) => l = l.lcm(q.denom()),
            None => return BigInt::one(),
        }
    }
    l
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

impl<F: Field> Serialize for RatFunc<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    type R = RatFunc<Rat>;
    type P = Poly<Rat>;

    #[test]
    fn normal_form() {
        let r = R::new(P::from_ints(&[-2, 0, 2]), P::from_ints(&[-2, 2])).unwrap();
        assert_eq!(r, R::from_poly(P::from_ints(&[1, 1])));
        assert!(R::new(P::one(), P::zero()).is_err());
    }

    #[test]
    fn arithmetic() {
        let x = R::x();
        let a = R::pole_term(int(1), int(1), 1);
        let b = R::pole_term(int(1), int(-1), 1);
        // 1/(x-1) - 1/(x+1) = 2/(x^2-1)
        let d = &a - &b;
        assert_eq!(d, R::new(P::from_ints(&[2]), P::from_ints(&[-1, 0, 1])).unwrap());
        assert_eq!(&(&x * &a) - &a, R::one());
        assert_eq!(x.powi(-2).unwrap().derivative(), x.powi(-3).unwrap().scale(&int(-2)));
    }

    #[test]
    fn invert_and_order() {
        let r = R::new(P::from_ints(&[1]), P::from_ints(&[0, 0, 1, 1])).unwrap();
        assert_eq!(r.order_at_infinity(), Some(3));
        let t = r.invert_variable();
        assert_eq!(t, R::new(P::from_ints(&[0, 0, 0, 1]), P::from_ints(&[1, 1])).unwrap());
        assert_eq!(R::zero().order_at_infinity(), None);
    }

    #[test]
    fn display() {
        let r = R::new(P::from_ints(&[3]), P::new(vec![int(0), int(0), int(16)])).unwrap();
        assert_eq!(r.to_string(), "3/(16*x^2)");
        let r = R::new(P::from_ints(&[1, 1]), P::from_ints(&[-1, 1])).unwrap();
        assert_eq!(r.to_string(), "(x+1)/(x-1)");
        let r = R::new(P::from_ints(&[1]), P::from_ints(&[0, 0, 1])).unwrap().scale(&rat(-1, 2));
        assert_eq!(r.to_string(), "-1/(2*x^2)");
        let r = R::new(P::new(vec![rat(-3, 16), int(1)]), P::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(r.to_string(), "(16*x-3)/(16*x^2)");
    }
}
