use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::exactnum::Field;
use crate::{Error, Result};

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient vector and `==` compares normal forms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// `c·x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x - c`.
    pub fn linear_root(c: F) -> Self {
        Self::new(vec![-c, F::one()])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = -1`.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.is_one())
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// The monic associate; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * F::from_int(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![F::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.try_div(&F::from_int(k as i64 + 1)).expect("nonzero"));
        }
        Self::new(coeffs)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `p(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: &F) -> Self {
        self.compose(&Self::new(vec![c.clone(), F::one()]))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.lead().ok_or(Error::DivisionByZero)?.inv()?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quo = vec![F::zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = rem[k + dd].clone() * dl.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quo), Self::new(rem)))
    }

    /// Exact quotient; panics in debug builds when the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: `(g, s, t)` with `s·a + t·b = g` and `g` monic.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv().expect("nonzero");
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    /// Yun's squarefree decomposition: monic pairwise coprime squarefree
    /// factors `f_i` with `self = lead·Π f_i^i`; only nonconstant factors
    /// are listed.
    pub fn squarefree(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0);
        let mut c = df.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Multiplicity of `c` as a root.
    pub fn root_multiplicity(&self, c: &F) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let shifted = self.shift(c);
        shifted.valuation().unwrap_or(0)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, F: Field> $tr<&'a Poly<F>> for &'a Poly<F> {
            type Output = Poly<F>;
            fn $method(self, o: &Poly<F>) -> Poly<F> {
                let f: fn(&Poly<F>, &Poly<F>) -> Poly<F> = $body;
                f(self, o)
            }
        }
        impl<F: Field> $tr for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, o: Poly<F>) -> Poly<F> {
                (&self).$method(&o)
            }
        }
    };
}

poly_binop!(Add, add, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new((0..n).map(|k| a.coeff(k) + b.coeff(k)).collect())
});

poly_binop!(Sub, sub, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new((0..n).map(|k| a.coeff(k) - b.coeff(k)).collect())
});

poly_binop!(Mul, mul, |a, b| {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![F::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    Poly::new(out)
});

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -self.clone()
    }
}

/// Writes `c·x^k` (or `c·(x-a)^k` via `var`) with sign handling; `first`
/// suppresses the leading `+`.
pub(crate) fn fmt_term<F: Field>(
    f: &mut fmt::Formatter<'_>,
    c: &F,
    var: &str,
    k: i64,
    first: bool,
) -> fmt::Result {
    let neg = c.displays_negative();
    let mag = if neg { -c.clone() } else { c.clone() };
    if neg {
        write!(f, "-")?;
    } else if !first {
        write!(f, "+")?;
    }
    let mono = match k {
        0 => String::new(),
        1 => var.to_string(),
        k if k < 0 => format!("{var}^({k})"),
        k => format!("{var}^{k}"),
    };
    if mono.is_empty() {
        return write!(f, "{mag}");
    }
    if mag.is_one() {
        return write!(f, "{mono}");
    }
    if let Some(q) = mag.as_rat() {
        let (n, d) = (q.numer().clone(), q.denom().clone());
        let d_one = d == 1.into();
        return match (n == 1.into(), d_one) {
            (true, false) => write!(f, "{mono}/{d}"),
            (false, true) => write!(f, "{n}*{mono}"),
            (false, false) => write!(f, "{n}*{mono}/{d}"),
            (true, true) => write!(f, "{mono}"),
        };
    }
    if mag.is_atomic() {
        write!(f, "{mag}*{mono}")
    } else {
        write!(f, "({mag})*{mono}")
    }
}

impl<F: Field> Poly<F> {
    /// Prints with a custom variable name.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a, F>(&'a Poly<F>, &'a str);
        impl<F: Field> fmt::Display for D<'_, F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let p = self.0;
                if p.is_zero() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (k, c) in p.coeffs.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    fmt_term(f, c, self.1, k as i64, first)?;
                    first = false;
                }
                Ok(())
            }
        }
        D(self, var)
    }

    /// Number of printed summands.
    pub fn term_count(&self) -> usize {
        self.coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| if c.is_atomic() || c.as_rat().is_some() { 1 } else { 2 })
            .sum()
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

impl<F: Field> Serialize for Poly<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rat};

    type P = Poly<Rat>;

    #[test]
    fn gcd_and_division() {
        let a = P::from_ints(&[-1, 0, 1]);
        let b = P::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, P::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert!(a.div_rem(&P::zero()).is_err());
    }

    #[test]
    fn squarefree_of_cube() {
        let x3 = P::monomial(int(1), 3);
        assert_eq!(x3.squarefree(), vec![(P::x(), 3)]);
        // (x-1)^2 (x+2)
        let p = &P::from_ints(&[-1, 1]).pow(2) * &P::from_ints(&[2, 1]);
        assert_eq!(
            p.squarefree(),
            vec![(P::from_ints(&[2, 1]), 1), (P::from_ints(&[-1, 1]), 2)]
        );
    }

    #[test]
    fn ext_gcd_identity() {
        let a = P::from_ints(&[1, 0, 1]);
        let b = P::from_ints(&[0, 1, 3]);
        let (g, s, t) = Poly::ext_gcd(&a, &b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert!(g.is_monic());
    }

    #[test]
    fn display() {
        let p = P::new(vec![int(3), int(0), int(1)]);
        assert_eq!(p.to_string(), "x^2+3");
        let p = P::new(vec![int(0), int(-3), rat(1, 2)]);
        assert_eq!(p.to_string(), "x^2/2-3*x");
        assert_eq!(P::new(vec![rat(-3, 2), rat(3, 4)]).to_string(), "3*x/4-3/2");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn shift_and_compose() {
        let p = P::from_ints(&[1, 2, 1]);
        assert_eq!(p.shift(&int(-1)), P::monomial(int(1), 2));
        assert_eq!(p.root_multiplicity(&int(-1)), 2);
        assert_eq!(p.integral().derivative(), p);
    }
}
