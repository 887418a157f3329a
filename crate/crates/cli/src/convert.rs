//! Evaluation of parsed expressions into library values.

use liouville::algebrize::TrigExpExpr;
use liouville::exactnum::sqrt_rational;
use liouville::{Field, GaussRat, Poly, RadNum, RatFunc, Rat};

use crate::expr::{Expr, Func};
use crate::CliError;

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// `(constant part, coefficient of t)` when `e` is affine in `t`.
fn affine_t(e: &Expr) -> Option<(GaussRat, GaussRat)> {
    let z = GaussRat::zero;
    Some(match e {
        Expr::Int(n) => (GaussRat::from(Rat::from_integer(n.clone())), z()),
        Expr::I => (GaussRat::i(), z()),
        Expr::Var('t') => (z(), GaussRat::one()),
        Expr::Var(_) | Expr::Call(..) => return None,
        Expr::Neg(a) => {
            let (c, l) = affine_t(a)?;
            (-c, -l)
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let (c1, l1) = affine_t(a)?;
            let (mut c2, mut l2) = affine_t(b)?;
            if matches!(e, Expr::Sub(..)) {
                c2 = -c2;
                l2 = -l2;
            }
            (c1 + c2, l1 + l2)
        }
        Expr::Mul(a, b) => {
            let (c1, l1) = affine_t(a)?;
            let (c2, l2) = affine_t(b)?;
            if !l1.is_zero() && !l2.is_zero() {
                return None;
            }
            (&c1 * &c2, &c1 * &l2 + &l1 * &c2)
        }
        Expr::Div(a, b) => {
            let (c1, l1) = affine_t(a)?;
            let (c2, l2) = affine_t(b)?;
            if !l2.is_zero() || c2.is_zero() {
                return None;
            }
            (c1.try_div(&c2).ok()?, l1.try_div(&c2).ok()?)
        }
        Expr::Pow(a, n) => {
            let (c, l) = affine_t(a)?;
            match (l.is_zero(), *n) {
                (_, 1) => (c, l),
                (true, n) if n >= 0 => (c.pow(u32::try_from(n).ok()?), z()),
                (true, n) => (c.inv().ok()?.pow(u32::try_from(-n).ok()?), z()),
                _ => return None,
            }
        }
    })
}

/// `c` when `e` is exactly `c·t`.
pub fn linear_in_t(e: &Expr) -> Option<GaussRat> {
    let (c, l) = affine_t(e)?;
    c.is_zero().then_some(l)
}

pub fn constant_rational(e: &Expr) -> Option<Rat> {
    let (c, l) = affine_t(e)?;
    if l.is_zero() {
        c.as_rat()
    } else {
        None
    }
}

/// Rational function of `x` over `Q(i, √…)`.
pub fn to_ratfunc(e: &Expr) -> Result<RatFunc<RadNum>, CliError> {
    Ok(match e {
        Expr::Int(n) => RatFunc::constant(RadNum::from(Rat::from_integer(n.clone()))),
        Expr::I => RatFunc::constant(RadNum::i()),
        Expr::Var('x') => RatFunc::x(),
        Expr::Var(v) => return Err(input(format!("variable {v} is not allowed here; use x"))),
        Expr::Neg(a) => -to_ratfunc(a)?,
        Expr::Add(a, b) => &to_ratfunc(a)? + &to_ratfunc(b)?,
        Expr::Sub(a, b) => &to_ratfunc(a)? - &to_ratfunc(b)?,
        Expr::Mul(a, b) => &to_ratfunc(a)? * &to_ratfunc(b)?,
        Expr::Div(a, b) => to_ratfunc(a)?.try_div(&to_ratfunc(b)?)?,
        Expr::Pow(a, n) => {
            let n = i32::try_from(*n).map_err(|_| input("exponent too large"))?;
            to_ratfunc(a)?.powi(n)?
        }
        Expr::Call(Func::Sqrt, a) => {
            let q = constant_rational(a).ok_or_else(|| input("sqrt needs a rational constant"))?;
            RatFunc::constant(sqrt_rational(&q))
        }
        Expr::Call(f, _) => return Err(input(format!("{f:?} is only allowed in time-domain input").to_lowercase())),
    })
}

/// Rational function of `x` with rational coefficients.
pub fn to_ratfunc_rat(e: &Expr) -> Result<RatFunc<Rat>, CliError> {
    let r = to_ratfunc(e)?;
    let num = lower(r.num())?;
    let den = lower(r.den())?;
    Ok(RatFunc::new(num, den)?)
}

fn lower(p: &Poly<RadNum>) -> Result<Poly<Rat>, CliError> {
    let cs = p
        .coeffs()
        .iter()
        .map(|c| c.as_gauss().and_then(|g| g.as_rat()).ok_or_else(|| input(format!("coefficient {c} is not rational"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(cs))
}

pub fn to_poly_rat(e: &Expr) -> Result<Poly<Rat>, CliError> {
    let r = to_ratfunc_rat(e)?;
    r.as_poly().cloned().ok_or_else(|| input(format!("{r} is not a polynomial")))
}

pub fn to_rat(e: &Expr) -> Result<Rat, CliError> {
    let r = to_ratfunc_rat(e)?;
    r.as_constant().ok_or_else(|| input(format!("{r} is not a constant")))
}

/// Exponential polynomial in `t`.
pub fn to_trigexp(e: &Expr) -> Result<TrigExpExpr, CliError> {
    let g = |n: &num_bigint::BigInt| GaussRat::from(Rat::from_integer(n.clone()));
    Ok(match e {
        Expr::Int(n) => TrigExpExpr::constant(g(n)),
        Expr::I => TrigExpExpr::constant(GaussRat::i()),
        Expr::Var('t') => return Err(input("t may only appear inside sin, cos or exp")),
        Expr::Var(v) => return Err(input(format!("variable {v} is not allowed in time-domain input; use t"))),
        Expr::Neg(a) => -&to_trigexp(a)?,
        Expr::Add(a, b) => &to_trigexp(a)? + &to_trigexp(b)?,
        Expr::Sub(a, b) => &to_trigexp(a)? - &to_trigexp(b)?,
        Expr::Mul(a, b) => &to_trigexp(a)? * &to_trigexp(b)?,
        Expr::Div(a, b) => {
            let d = to_trigexp(b)?.as_constant().ok_or_else(|| input("division by a non-constant in time-domain input"))?;
            to_trigexp(a)?.scale(&d.inv()?)
        }
        Expr::Pow(a, n) => {
            let base = to_trigexp(a)?;
            if *n >= 0 {
                let mut acc = TrigExpExpr::constant(GaussRat::one());
                for _ in 0..*n {
                    acc = &acc * &base;
                }
                acc
            } else {
                let terms: Vec<_> = base.terms().collect();
                let [(l, c)] = terms.as_slice() else {
                    return Err(input("negative powers need a single exponential term"));
                };
                let inv = TrigExpExpr::term(c.inv()?, -(*l).clone());
                let mut acc = TrigExpExpr::constant(GaussRat::one());
                for _ in 0..-*n {
                    acc = &acc * &inv;
                }
                acc
            }
        }
        Expr::Call(f, a) => {
            let c = linear_in_t(a).ok_or_else(|| input("argument must be c*t"))?;
            match f {
                Func::Sin => TrigExpExpr::sin(c),
                Func::Cos => TrigExpExpr::cos(c),
                Func::Exp => TrigExpExpr::exp(c),
                Func::Sqrt => return Err(input("sqrt is not allowed in time-domain input")),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use liouville::exactnum::rat;

    #[test]
    fn rational_inputs() {
        let r = to_ratfunc(&parse("(2*x+1)/(2*x^3)").unwrap()).unwrap();
        assert_eq!(r.to_string(), "(2*x+1)/(2*x^3)");
        assert_eq!(to_ratfunc(&parse("x^2+3").unwrap()).unwrap().to_string(), "x^2+3");
        assert!(matches!(to_ratfunc(&parse("1/(x-x)").unwrap()), Err(CliError::Math(_))));
        assert!(matches!(to_ratfunc(&parse("t").unwrap()), Err(CliError::Input(_))));
        assert_eq!(to_rat(&parse("-3/4").unwrap()).unwrap(), rat(-3, 4));
    }

    #[test]
    fn trig_inputs() {
        let e = to_trigexp(&parse("1 + cos(t)").unwrap()).unwrap();
        let half = GaussRat::from(rat(1, 2));
        let expected = &(&TrigExpExpr::constant(GaussRat::one()) + &TrigExpExpr::term(half.clone(), GaussRat::i()))
            + &TrigExpExpr::term(half, -GaussRat::i());
        assert_eq!(e, expected);
        let e = to_trigexp(&parse("exp(t)^(-2)*3").unwrap()).unwrap();
        assert_eq!(e, TrigExpExpr::term(GaussRat::from(rat(3, 1)), GaussRat::from(rat(-2, 1))));
        assert_eq!(to_trigexp(&parse(&e.to_string()).unwrap()).unwrap(), e);
    }
}
