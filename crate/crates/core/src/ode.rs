//! Second-order linear equations `y'' + a y' + b y = 0`, their reduced form
//! `ξ'' = rξ`, the associated Riccati equation and singularity types.

use std::fmt;

use serde::Serialize;

use crate::exactnum::RadNum;
use crate::polyrat::{order_at, RatFunc};
use crate::Result;

/// `y'' + a·y' + b·y = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lode2 {
    pub a: RatFunc<RadNum>,
    pub b: RatFunc<RadNum>,
}

/// Reduced equation `ξ'' = r·ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rlde {
    pub r: RatFunc<RadNum>,
}

impl Rlde {
    pub fn new(r: RatFunc<RadNum>) -> Self {
        Self { r }
    }
}

/// Record of `y = exp(-∫ half_a) ξ`; `half_a = a/2` is left unintegrated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTransform {
    pub half_a: RatFunc<RadNum>,
}

impl fmt::Display for ReductionTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.half_a.is_zero() {
            write!(f, "y = xi")
        } else {
            write!(f, "y = exp(-integral({}, x))*xi", self.half_a)
        }
    }
}

/// `r = a²/4 + a'/2 − b`.
pub fn reduce(e: &Lode2) -> (Rlde, ReductionTransform) {
    let half_a = e.a.scale(&half());
    let r = &(&(&half_a * &half_a) + &half_a.derivative()) - &e.b;
    (Rlde { r }, ReductionTransform { half_a })
}

/// The Riccati equation `v' = r − v²` satisfied by `v = ξ'/ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Riccati {
    pub r: RatFunc<RadNum>,
    pub substitution: &'static str,
}

impl fmt::Display for Riccati {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.is_zero() {
            write!(f, "v' = -v^2")
        } else {
            write!(f, "v' = {}-v^2", self.r)
        }
    }
}

pub fn riccati(e: &Rlde) -> Riccati {
    Riccati { r: e.r.clone(), substitution: "v = xi'/xi" }
}

/// The equation in `t` after `x = 1/t`:
/// `a ↦ 2/t − a(1/t)/t²`, `b ↦ b(1/t)/t⁴`.
pub fn invert_at_infinity(e: &Lode2) -> Lode2 {
    let t = RatFunc::<RadNum>::x();
    let t2 = &t * &t;
    let two_over_t = t.inv().expect("nonzero").scale(&RadNum::from(2i64));
    let a = &two_over_t - &e.a.invert_variable().try_div(&t2).expect("nonzero");
    let b = e.b.invert_variable().try_div(&(&t2 * &t2)).expect("nonzero");
    Lode2 { a, b }
}

/// A point of the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Finite(RadNum),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(c) => write!(f, "{c}"),
            Point::Infinity => write!(f, "infinity"),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularityClass {
    Ordinary,
    RegularSingular,
    IrregularSingular,
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SingularityClass::Ordinary => "ordinary",
            SingularityClass::RegularSingular => "regular_singular",
            SingularityClass::IrregularSingular => "irregular_singular",
        })
    }
}

/// Pole order of `f` at `c` (0 when analytic).
fn pole_order(f: &RatFunc<RadNum>, c: &RadNum) -> i64 {
    order_at(f, c).map_or(0, |o| (-o).max(0))
}

pub fn classify_singularity(e: &Lode2, point: &Point) -> Result<SingularityClass> {
    match point {
        Point::Infinity => classify_singularity(&invert_at_infinity(e), &Point::Finite(RadNum::zero())),
        Point::Finite(c) => {
            let pa = pole_order(&e.a, c);
            let pb = pole_order(&e.b, c);
            Ok(if pa == 0 && pb == 0 {
                SingularityClass::Ordinary
            } else if pa <= 1 && pb <= 2 {
                SingularityClass::RegularSingular
            } else {
                SingularityClass::IrregularSingular
            })
        }
    }
}

/// Every singular point (finite poles of `a` or `b`, then infinity) with its type.
pub fn singularities(e: &Lode2) -> Result<Vec<(Point, SingularityClass)>> {
    let den = &e.a.den().clone() * e.b.den();
    let mut out = Vec::new();
    for (c, _) in crate::polyrat::roots(&den)? {
        if out.iter().any(|(p, _)| *p == Point::Finite(c.clone())) {
            continue;
        }
        let class = classify_singularity(e, &Point::Finite(c.clone()))?;
        out.push((Point::Finite(c), class));
    }
    out.push((Point::Infinity, classify_singularity(e, &Point::Infinity)?));
    Ok(out)
}

fn half() -> RadNum {
    RadNum::from(crate::exactnum::rat(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::polyrat::Poly;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc<RadNum> {
        RatFunc::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let x = RatFunc::<RadNum>::x();
        let e = Lode2 { a: RatFunc::zero(), b: -x.clone() };
        assert_eq!(reduce(&e).0.r, x);
        // a = 1/x, b = 1/x → r = -1/(4x²) - 1/x
        let e = Lode2 { a: rf(&[1], &[0, 1]), b: rf(&[1], &[0, 1]) };
        let expected = &rf(&[-1], &[0, 0, 4]) - &rf(&[1], &[0, 1]);
        assert_eq!(reduce(&e).0.r, expected);
        let e = Lode2 { a: rf(&[2], &[1]), b: rf(&[1], &[1]) };
        assert!(reduce(&e).0.r.is_zero());
    }

    #[test]
    fn infinity_change() {
        let x = RatFunc::<RadNum>::x();
        let e = Lode2 { a: RatFunc::zero(), b: -x };
        let inv = invert_at_infinity(&e);
        assert_eq!(inv.a, rf(&[2], &[0, 1]));
        assert_eq!(inv.b, rf(&[-1], &[0, 0, 0, 0, 0, 1]));
        let e = Lode2 { a: rf(&[1], &[0, 1]), b: RatFunc::zero() };
        assert_eq!(invert_at_infinity(&e).a, rf(&[1], &[0, 1]));
        assert_eq!(invert_at_infinity(&invert_at_infinity(&e)), e);
    }

    #[test]
    fn classification() {
        let e = Lode2 { a: RatFunc::zero(), b: rf(&[-3, 0, -1], &[1]) };
        assert_eq!(classify_singularity(&e, &Point::Infinity).unwrap(), SingularityClass::IrregularSingular);
        let e = Lode2 { a: rf(&[1], &[0, 1]), b: RatFunc::zero() };
        let zero = Point::Finite(RadNum::zero());
        assert_eq!(classify_singularity(&e, &zero).unwrap(), SingularityClass::RegularSingular);
        let e = Lode2 { a: RatFunc::zero(), b: rf(&[-1], &[1]) };
        assert_eq!(classify_singularity(&e, &zero).unwrap(), SingularityClass::Ordinary);
        assert_eq!(riccati(&Rlde::new(RatFunc::constant(RadNum::from(int(1))))).to_string(), "v' = 1-v^2");
    }
}
