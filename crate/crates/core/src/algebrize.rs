//! Algebrization of `ξ̈ = r(t)ξ` when `r` is a finite sum of exponentials
//! (sines and cosines included) with commensurable frequencies.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::exactnum::{Field, GaussRat, RadNum, Rat};
use crate::kovacic::{kovacic, KovacicReport};
use crate::ode::{classify_singularity, reduce, Lode2, Point, ReductionTransform, Rlde, SingularityClass};
use crate::polyrat::{half, Poly, RatFunc};
use crate::{Error, Result};

/// `Σ c_k·exp(λ_k t)` with distinct exponents and nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TrigExpExpr {
    terms: BTreeMap<GaussRat, GaussRat>,
}

impl TrigExpExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::term(c, GaussRat::zero())
    }

    /// `c·exp(λt)`.
    pub fn term(c: GaussRat, lambda: GaussRat) -> Self {
        let mut e = Self::zero();
        e.insert(lambda, c);
        e
    }

    pub fn exp(lambda: GaussRat) -> Self {
        Self::term(GaussRat::one(), lambda)
    }

    /// `sin(ωt) = (e^{iωt} − e^{−iωt})/(2i)`.
    pub fn sin(omega: GaussRat) -> Self {
        let iw = &GaussRat::i() * &omega;
        let half_i = GaussRat::new(<Rat as Zero>::zero(), Rat::new(1.into(), 2.into()));
        &Self::term(-half_i.clone(), iw.clone()) + &Self::term(half_i, -iw)
    }

    /// `cos(ωt) = (e^{iωt} + e^{−iωt})/2`.
    pub fn cos(omega: GaussRat) -> Self {
        let iw = &GaussRat::i() * &omega;
        let half: GaussRat = half(1);
        &Self::term(half.clone(), iw.clone()) + &Self::term(half, -iw)
    }

    fn insert(&mut self, lambda: GaussRat, c: GaussRat) {
        let v = self.terms.remove(&lambda).map_or(c.clone(), |old| old + c);
        if !v.is_zero() {
            self.terms.insert(lambda, v);
        }
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&GaussRat, &GaussRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> GaussRat {
        self.terms.get(&GaussRat::zero()).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn as_constant(&self) -> Option<GaussRat> {
        self.terms.keys().all(|l| l.is_zero()).then(|| self.constant_term())
    }

    pub fn scale(&self, k: &GaussRat) -> Self {
        let mut out = Self::zero();
        for (l, c) in &self.terms {
            out.insert(l.clone(), c * k);
        }
        out
    }

    /// `d/dt`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (l, c) in &self.terms {
            out.insert(l.clone(), c * l);
        }
        out
    }
}

impl Add for &TrigExpExpr {
    type Output = TrigExpExpr;
    fn add(self, o: &TrigExpExpr) -> TrigExpExpr {
        let mut out = self.clone();
        for (l, c) in &o.terms {
            out.insert(l.clone(), c.clone());
        }
        out
    }
}

impl Neg for &TrigExpExpr {
    type Output = TrigExpExpr;
    fn neg(self) -> TrigExpExpr {
        self.scale(&-GaussRat::one())
    }
}

impl Sub for &TrigExpExpr {
    type Output = TrigExpExpr;
    fn sub(self, o: &TrigExpExpr) -> TrigExpExpr {
        self + &(-o)
    }
}

impl Mul for &TrigExpExpr {
    type Output = TrigExpExpr;
    fn mul(self, o: &TrigExpExpr) -> TrigExpExpr {
        let mut out = TrigExpExpr::zero();
        for (l1, c1) in &self.terms {
            for (l2, c2) in &o.terms {
                out.insert(l1.clone() + l2.clone(), c1 * c2);
            }
        }
        out
    }
}

fn paren_if_compound(g: &GaussRat) -> String {
    if Field::is_atomic(g) {
        g.to_string()
    } else {
        format!("({g})")
    }
}

impl fmt::Display for TrigExpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.terms.iter().enumerate() {
            let neg = Field::is_atomic(c) && c.displays_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if neg {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            if l.is_zero() {
                write!(f, "{}", paren_if_compound(&mag))?;
                continue;
            }
            let arg = if l.is_one() { "t".to_string() } else { format!("{}*t", paren_if_compound(l)) };
            if mag.is_one() {
                write!(f, "exp({arg})")?;
            } else {
                write!(f, "{}*exp({arg})", paren_if_compound(&mag))?;
            }
        }
        Ok(())
    }
}

impl Serialize for TrigExpExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The change of independent variable used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Substitution {
    /// `x = t`.
    Identity,
    /// `x = exp(λt/q)`.
    Exponential { lambda: GaussRat, q: u64 },
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Substitution::Identity => write!(f, "x = t"),
            Substitution::Exponential { lambda, q } => {
                let rate = lambda.scale(&Rat::new(1.into(), BigInt::from(*q)));
                if rate.is_one() {
                    write!(f, "x = exp(t)")
                } else {
                    write!(f, "x = exp({}*t)", paren_if_compound(&rate))
                }
            }
        }
    }
}

/// Hamiltonian change of variable: `f(x(t)) = r(t)` and `α(x(t)) = ẋ(t)²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HamChange {
    pub substitution: Substitution,
    pub f: RatFunc<RadNum>,
    pub alpha: RatFunc<RadNum>,
}

impl HamChange {
    /// `g(x(t))` for a Laurent polynomial `g`, as a time-domain expression.
    pub fn pull_back(&self, g: &RatFunc<RadNum>) -> Result<TrigExpExpr> {
        match &self.substitution {
            Substitution::Identity => {
                let c = g.as_constant().ok_or_else(|| Error::NotLaurent(g.to_string()))?;
                Ok(TrigExpExpr::constant(gauss(&c)?))
            }
            Substitution::Exponential { lambda, q } => {
                let den = g.den();
                let k = den.degree().unwrap_or(0);
                if *den != Poly::monomial(RadNum::one(), k) {
                    return Err(Error::NotLaurent(g.to_string()));
                }
                let rate = lambda.scale(&Rat::new(1.into(), BigInt::from(*q)));
                let mut out = TrigExpExpr::zero();
                for (j, c) in g.num().coeffs().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let n = Rat::from_integer(BigInt::from(j as i64 - k as i64));
                    out = &out + &TrigExpExpr::term(gauss(c)?, rate.scale(&n));
                }
                Ok(out)
            }
        }
    }

    /// `(f(x(t)), α(x(t)))`; the first must equal `r` and the second `ẋ²`.
    pub fn replay(&self) -> Result<(TrigExpExpr, TrigExpExpr)> {
        Ok((self.pull_back(&self.f)?, self.pull_back(&self.alpha)?))
    }
}

fn gauss(c: &RadNum) -> Result<GaussRat> {
    c.as_gauss().ok_or_else(|| Error::NotLaurent(c.to_string()))
}

/// Commensurability test and substitution `x = exp(λt/q)`.
pub fn exp_change(r: &TrigExpExpr) -> Result<HamChange> {
    let exps: Vec<&GaussRat> = r.terms.keys().filter(|l| !l.is_zero()).collect();
    let base = exps
        .iter()
        .copied()
        .min_by(|a, b| {
            a.norm_sqr()
                .cmp(&b.norm_sqr())
                .then_with(|| b.re.cmp(&a.re))
                .then_with(|| b.im.cmp(&a.im))
        })
        .ok_or_else(|| Error::Precondition("r(t) has no nonconstant term".into()))?
        .clone();
    let mut ratios = Vec::new();
    let mut q = BigInt::one();
    for l in &exps {
        let c = (*l).clone().try_div(&base)?;
        if !Zero::is_zero(&c.im) {
            return Err(Error::NonCommensurateFrequencies(l.to_string(), base.to_string()));
        }
        q = q.lcm(c.re.denom());
        ratios.push(c.re);
    }
    let qr = Rat::from_integer(q.clone());
    let mut powers: Vec<(i64, GaussRat)> = vec![(0, r.constant_term())];
    for (l, c) in exps.iter().zip(&ratios) {
        let n = c * &qr;
        assert!(n.is_integer(), "exponent ratio times q is an integer");
        let n = n.to_integer().to_i64().ok_or_else(|| Error::NotLaurent(l.to_string()))?;
        powers.push((n, r.terms[*l].clone()));
    }
    let shift = powers.iter().map(|(n, _)| *n).min().unwrap_or(0).min(0);
    let deg = powers.iter().map(|(n, _)| n - shift).max().unwrap_or(0) as usize;
    let mut coeffs = vec![RadNum::zero(); deg + 1];
    for (n, c) in powers {
        let i = (n - shift) as usize;
        coeffs[i] = coeffs[i].clone() + RadNum::from(c);
    }
    let f = RatFunc::new(Poly::new(coeffs), Poly::monomial(RadNum::one(), (-shift) as usize))?;
    let rate = base.scale(&Rat::new(1.into(), q.clone()));
    let alpha = RatFunc::from_poly(Poly::monomial(RadNum::from(&rate * &rate), 2));
    let q = u64::try_from(q).map_err(|_| Error::Precondition("denominator too large".into()))?;
    Ok(HamChange { substitution: Substitution::Exponential { lambda: base, q }, f, alpha })
}

/// `y'' + ½(α'/α)y' − (f/α)y = 0`.
pub fn algebraic_form(f: &RatFunc<RadNum>, alpha: &RatFunc<RadNum>) -> Result<Lode2> {
    if alpha.is_zero() {
        return Err(Error::Precondition("alpha must be nonzero".into()));
    }
    let a = alpha.derivative().try_div(alpha)?.scale(&half::<RadNum>(1));
    let b = -f.try_div(alpha)?;
    Ok(Lode2 { a, b })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebrizeReport {
    pub r: TrigExpExpr,
    pub change: HamChange,
    pub algebraic_form: Lode2,
    pub reduced: Rlde,
    pub transform: ReductionTransform,
    pub infinity: SingularityClass,
    pub kovacic: KovacicReport,
    /// Only the identity component transfers back to the time-domain equation.
    pub identity_component_abelian: bool,
    pub notes: Vec<String>,
}

/// Change of variable for a constant `r`: `x = t`, `f = r`, `α = 1`.
fn identity_change(c: &GaussRat) -> HamChange {
    HamChange {
        substitution: Substitution::Identity,
        f: RatFunc::constant(RadNum::from(c.clone())),
        alpha: RatFunc::one(),
    }
}

/// `exp_change → algebraic_form → reduce → kovacic`.
pub fn algebrize_and_solve(r: &TrigExpExpr) -> Result<AlgebrizeReport> {
    let change = match r.as_constant() {
        Some(c) => identity_change(&c),
        None => exp_change(r)?,
    };
    let algebraic_form = algebraic_form(&change.f, &change.alpha)?;
    let (reduced, transform) = reduce(&algebraic_form);
    let infinity = classify_singularity(&algebraic_form, &Point::Infinity)?;
    let kovacic = kovacic(&reduced)?;
    let identity_component_abelian = kovacic.group_identity_component_abelian;
    let notes = vec![format!(
        "{} is a finite covering; the identity component of the Galois group of the original equation is that of the algebraic form",
        change.substitution
    )];
    Ok(AlgebrizeReport {
        r: r.clone(),
        change,
        algebraic_form,
        reduced,
        transform,
        infinity,
        kovacic,
        identity_component_abelian,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::kovacic::GroupLabel;

    fn g(q: Rat) -> GaussRat {
        GaussRat::from(q)
    }

    fn rn(q: Rat) -> RadNum {
        RadNum::from(q)
    }

    #[test]
    fn sin_cos_identities() {
        let one = g(int(1));
        let s = TrigExpExpr::sin(one.clone());
        let c = TrigExpExpr::cos(one);
        assert_eq!(&(&s * &s) + &(&c * &c), TrigExpExpr::constant(g(int(1))));
        assert_eq!(s.derivative(), c);
        assert_eq!(TrigExpExpr::cos(g(int(2))), &(&c * &c) - &(&s * &s));
    }

    #[test]
    fn mathieu_change() {
        let (a, c) = (rat(1, 3), rat(2, 1));
        let r = &TrigExpExpr::constant(g(a.clone())) + &TrigExpExpr::cos(g(int(1))).scale(&g(c.clone()));
        let ch = exp_change(&r).unwrap();
        assert_eq!(ch.substitution, Substitution::Exponential { lambda: GaussRat::i(), q: 1 });
        let expected_f = RatFunc::new(
            Poly::new(vec![rn(c.clone()), rn(a.clone() * int(2)), rn(c.clone())]),
            Poly::from_ints(&[0, 2]),
        )
        .unwrap();
        assert_eq!(ch.f, expected_f);
        assert_eq!(ch.alpha, RatFunc::from_poly(Poly::monomial(rn(int(-1)), 2)));
        let (fr, ar) = ch.replay().unwrap();
        assert_eq!(fr, r);
        let xdot = TrigExpExpr::term(GaussRat::i(), GaussRat::i());
        assert_eq!(ar, &xdot * &xdot);
        let form = algebraic_form(&ch.f, &ch.alpha).unwrap();
        assert_eq!(form.a, RatFunc::x().inv().unwrap());
        let expected_b = RatFunc::new(
            Poly::new(vec![rn(c.clone()), rn(a * int(2)), rn(c)]),
            Poly::from_ints(&[0, 0, 0, 2]),
        )
        .unwrap();
        assert_eq!(form.b, expected_b);
    }

    #[test]
    fn exponential_waste() {
        let r = &TrigExpExpr::constant(g(int(2))) + &TrigExpExpr::term(g(int(3)), g(int(-1)));
        let ch = exp_change(&r).unwrap();
        assert_eq!(ch.f, RatFunc::from_poly(Poly::from_ints(&[2, 3])));
        assert_eq!(ch.alpha, RatFunc::from_poly(Poly::monomial(RadNum::one(), 2)));
        let rep = algebrize_and_solve(&r).unwrap();
        assert_eq!(rep.kovacic.group, GroupLabel::SL2);
        assert_eq!(rep.infinity, SingularityClass::IrregularSingular);
    }

    #[test]
    fn commensurability() {
        let r = &TrigExpExpr::exp(g(int(1))) + &TrigExpExpr::cos(g(int(1)));
        assert!(matches!(exp_change(&r), Err(Error::NonCommensurateFrequencies(_, _))));
        // e^{t/2} + e^{t/3}: λ = 1/3, ratios 3/2 and 1, q = 2
        let r = &TrigExpExpr::exp(g(rat(1, 2))) + &TrigExpExpr::exp(g(rat(1, 3)));
        let ch = exp_change(&r).unwrap();
        assert_eq!(ch.substitution, Substitution::Exponential { lambda: g(rat(1, 3)), q: 2 });
        assert_eq!(ch.f, RatFunc::from_poly(Poly::from_ints(&[0, 0, 1, 1])));
        assert_eq!(ch.replay().unwrap().0, r);
        assert!(exp_change(&TrigExpExpr::constant(g(int(1)))).is_err());
    }

    #[test]
    fn constant_short_circuit() {
        let rep = algebrize_and_solve(&TrigExpExpr::constant(g(int(4)))).unwrap();
        assert_eq!(rep.change.substitution, Substitution::Identity);
        assert_eq!(rep.kovacic.group, GroupLabel::TorusCstar);
        let sols: Vec<String> = rep.kovacic.solutions.iter().map(|s| s.to_string()).collect();
        assert_eq!(sols, vec!["exp(2*x)", "exp(-2*x)"]);
    }

    #[test]
    fn mathieu_is_sl2() {
        let r = &TrigExpExpr::constant(g(int(1))) + &TrigExpExpr::cos(g(int(1))).scale(&g(int(3)));
        let rep = algebrize_and_solve(&r).unwrap();
        let c2 = rep.kovacic.case2.as_ref().unwrap();
        assert_eq!(c2.e_at(&Point::Finite(RadNum::zero())), Some(&[3][..]));
        assert_eq!(c2.e_at(&Point::Infinity), Some(&[1][..]));
        assert!(c2.d.is_empty());
        assert_eq!(rep.kovacic.group, GroupLabel::SL2);
        assert!(!rep.identity_component_abelian);
        assert_eq!(rep.infinity, SingularityClass::IrregularSingular);
    }

    #[test]
    fn display() {
        let r = &TrigExpExpr::constant(g(int(1))) + &TrigExpExpr::cos(g(int(1)));
        assert_eq!(r.to_string(), "1/2*exp(-i*t)+1+1/2*exp(i*t)");
    }
}
