use serde::Serialize;

use super::{sign_text, solve_monic, sqrt_one_plus_4b, Hyperexponential, LocalData};
use crate::exactnum::{Field, RadNum};
use crate::ode::{Point, Rlde};
use crate::polyrat::{laurent_at, laurent_at_infinity, sqrt_part_at, sqrt_part_at_infinity, Poly, RatFunc};
use crate::{Error, Result};

/// Largest `m` for which a polynomial system is attempted.
const MAX_DEGREE: u64 = 400;

/// Local data at one point of `Γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case1Point {
    pub point: Point,
    /// Pole order at a finite point, order `deg t − deg s` at infinity.
    pub order: i64,
    pub situation: &'static str,
    pub sqrt_part: RatFunc<RadNum>,
    pub alpha_plus: RadNum,
    pub alpha_minus: RadNum,
}

/// An element of `D` with the signs producing it (infinity first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedCandidate {
    pub m: u64,
    pub signs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case1Witness {
    pub m: u64,
    pub signs: String,
    pub omega: RatFunc<RadNum>,
    pub p: Poly<RadNum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case1Data {
    /// Finite poles in order, then infinity.
    pub points: Vec<Case1Point>,
    pub obstruction: Option<String>,
    pub d: Vec<SignedCandidate>,
    /// Distinct successful `(ω, P)` pairs; the first is the reported one.
    pub witnesses: Vec<Case1Witness>,
}

fn local_finite(r: &RatFunc<RadNum>, c: &RadNum, order: i64) -> Result<std::result::Result<Case1Point, String>> {
    let point = Point::Finite(c.clone());
    let one = RadNum::one();
    Ok(Ok(match order {
        1 => Case1Point {
            point,
            order,
            situation: "c1",
            sqrt_part: RatFunc::zero(),
            alpha_plus: one.clone(),
            alpha_minus: one,
        },
        2 => {
            let b = laurent_at(r, c, -2);
            let s = sqrt_one_plus_4b(&b).ok_or_else(|| Error::UnsupportedAlgebraicDegree(format!("1+4*({b})")))?;
            let h = RadNum::from(crate::exactnum::rat(1, 2));
            Case1Point {
                point,
                order,
                situation: "c2",
                sqrt_part: RatFunc::zero(),
                alpha_plus: (one.clone() + s.clone()) * h.clone(),
                alpha_minus: (one - s) * h,
            }
        }
        o if o % 2 == 0 => {
            let sp = sqrt_part_at(r, c)?;
            let ratio = sp.b.try_div(&sp.leading)?;
            let v = RadNum::from(sp.v);
            let h = RadNum::from(crate::exactnum::rat(1, 2));
            Case1Point {
                point,
                order,
                situation: "c3",
                sqrt_part: sp.principal,
                alpha_plus: (ratio.clone() + v.clone()) * h.clone(),
                alpha_minus: (v - ratio) * h,
            }
        }
        o => return Ok(Err(format!("pole of odd order {o} at {c}"))),
    }))
}

fn local_infinity(r: &RatFunc<RadNum>, o: i64) -> Result<std::result::Result<Case1Point, String>> {
    let h = RadNum::from(crate::exactnum::rat(1, 2));
    let one = RadNum::one();
    Ok(Ok(if o > 2 {
        Case1Point {
            point: Point::Infinity,
            order: o,
            situation: "inf1",
            sqrt_part: RatFunc::zero(),
            alpha_plus: RadNum::zero(),
            alpha_minus: one,
        }
    } else if o == 2 {
        let b = laurent_at_infinity(r, -2);
        let s = sqrt_one_plus_4b(&b).ok_or_else(|| Error::UnsupportedAlgebraicDegree(format!("1+4*({b})")))?;
        Case1Point {
            point: Point::Infinity,
            order: o,
            situation: "inf2",
            sqrt_part: RatFunc::zero(),
            alpha_plus: (one.clone() + s.clone()) * h.clone(),
            alpha_minus: (one - s) * h,
        }
    } else if o % 2 == 0 {
        let sp = sqrt_part_at_infinity(r)?;
        let ratio = sp.b.try_div(&sp.leading)?;
        let v = RadNum::from(sp.v);
        Case1Point {
            point: Point::Infinity,
            order: o,
            situation: "inf3",
            sqrt_part: sp.principal,
            alpha_plus: (ratio.clone() - v.clone()) * h.clone(),
            alpha_minus: (-ratio - v) * h,
        }
    } else {
        return Ok(Err(format!("odd order {o} at infinity")));
    }))
}

fn alpha(p: &Case1Point, plus: bool) -> &RadNum {
    if plus {
        &p.alpha_plus
    } else {
        &p.alpha_minus
    }
}

/// `P'' + 2ωP' + (ω' + ω² − r)P`.
fn operator(omega: &RatFunc<RadNum>, r: &RatFunc<RadNum>) -> impl Fn(&Poly<RadNum>) -> RatFunc<RadNum> {
    let two_omega = omega.scale(&RadNum::from(2i64));
    let v = &(&omega.derivative() + &(omega * omega)) - r;
    move |p| {
        let d1 = p.derivative();
        let d2 = d1.derivative();
        &(&RatFunc::from_poly(d2) + &(&two_omega * &RatFunc::from_poly(d1))) + &(&v * &RatFunc::from_poly(p.clone()))
    }
}

pub(crate) fn run(ld: &LocalData) -> Result<Case1Data> {
    let r = &ld.r;
    let mut points = Vec::new();
    let mut obstruction = None;
    for pole in &ld.poles {
        match local_finite(r, &pole.location, pole.order as i64)? {
            Ok(p) => points.push(p),
            Err(why) => {
                obstruction.get_or_insert(why);
            }
        }
    }
    let o = ld.order_inf.expect("nonzero r");
    match local_infinity(r, o)? {
        Ok(p) => points.push(p),
        Err(why) => {
            obstruction.get_or_insert(why);
        }
    }
    let mut data = Case1Data { points, obstruction, d: Vec::new(), witnesses: Vec::new() };
    if data.obstruction.is_some() {
        return Ok(data);
    }
    let (inf, finite) = data.points.split_last().expect("infinity present");
    let k = finite.len();
    // signs[0] is infinity; lexicographic with + first
    let mut candidates: Vec<(u64, Vec<bool>)> = Vec::new();
    for mask in 0..(1u64 << (k + 1)) {
        let signs: Vec<bool> = (0..=k).map(|i| mask >> (k - i) & 1 == 0).collect();
        let mut m = alpha(inf, signs[0]).clone();
        for (p, &s) in finite.iter().zip(&signs[1..]) {
            m = m - alpha(p, s).clone();
        }
        if let Some(mi) = m.is_integer() {
            if let Ok(mu) = u64::try_from(mi) {
                candidates.push((mu, signs));
            }
        }
    }
    candidates.sort_by_key(|(m, _)| *m);
    data.d = candidates.iter().map(|(m, s)| SignedCandidate { m: *m, signs: sign_text(s) }).collect();
    let mut tried: Vec<(u64, RatFunc<RadNum>)> = Vec::new();
    let mut found_w: Vec<RatFunc<RadNum>> = Vec::new();
    for (m, signs) in &candidates {
        let mut omega = if signs[0] { inf.sqrt_part.clone() } else { -inf.sqrt_part.clone() };
        for (p, &s) in finite.iter().zip(&signs[1..]) {
            let Point::Finite(c) = &p.point else { unreachable!() };
            let sp = if s { p.sqrt_part.clone() } else { -p.sqrt_part.clone() };
            omega = &(&omega + &sp) + &RatFunc::pole_term(alpha(p, s).clone(), c.clone(), 1);
        }
        if tried.iter().any(|(tm, to)| tm == m && *to == omega) {
            continue;
        }
        tried.push((*m, omega.clone()));
        if *m > MAX_DEGREE {
            continue;
        }
        let Some((p, kernel)) = solve_monic(*m as usize, operator(&omega, r)) else {
            continue;
        };
        let mut ps = vec![p.clone()];
        if let Some(k0) = kernel.first() {
            ps.push(&p + k0);
        }
        for p in ps {
            let w = &omega + &RatFunc::new(p.derivative(), p.clone())?;
            debug_assert_eq!(&w.derivative() + &(&w * &w), *r, "Riccati identity");
            if found_w.contains(&w) {
                continue;
            }
            found_w.push(w);
            data.witnesses.push(Case1Witness { m: *m, signs: sign_text(signs), omega: omega.clone(), p });
        }
    }
    Ok(data)
}

/// First Kovacic case: `(ω, P_m, ξ₁)` when a hyperexponential solution exists.
pub fn case1(e: &Rlde) -> Result<Option<(RatFunc<RadNum>, Poly<RadNum>, Hyperexponential)>> {
    if e.r.is_zero() {
        return Ok(Some((RatFunc::zero(), Poly::one(), Hyperexponential::rational(RatFunc::one()))));
    }
    let data = run(&LocalData::new(&e.r)?)?;
    data.witnesses
        .first()
        .map(|w| Ok((w.omega.clone(), w.p.clone(), Hyperexponential::from_omega(&w.p, &w.omega)?)))
        .transpose()
}
