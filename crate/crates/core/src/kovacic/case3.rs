use serde::Serialize;

use super::case2::{families, integer_members, PointESet, ECandidate};
use super::{riccati_invariant, solve_monic, sqrt_one_plus_4b, LocalData};
use crate::exactnum::{rat, RadNum};
use crate::ode::{Point, Rlde};
use crate::polyrat::{laurent_at, laurent_at_infinity, Poly, RatFunc};
use crate::Result;

const MAX_DEGREE: u64 = 400;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case3Attempt {
    pub n: u32,
    pub e_sets: Vec<PointESet>,
    pub d: Vec<ECandidate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case3Witness {
    pub n: u32,
    pub m: u64,
    pub family: Vec<i64>,
    pub theta: RatFunc<RadNum>,
    pub s: Poly<RadNum>,
    pub p: Poly<RadNum>,
    /// Coefficients (ascending) of `Σ S^i P_i/(n−i)! ω^i`.
    pub omega_polynomial: Vec<RatFunc<RadNum>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case3Data {
    /// Why the necessary conditions fail, when they do.
    pub obstruction: Option<String>,
    pub attempts: Vec<Case3Attempt>,
    pub witness: Option<Case3Witness>,
}

/// `P_n = −P`, `P_{i−1} = −S P_i' + ((n−i)S' − Sθ)P_i − (n−i)(i+1)S² r P_{i+1}`;
/// returns `P_n, ..., P_{-1}` reversed into `[P_{-1}, P_0, ..., P_n]`.
fn chain(
    p: &Poly<RadNum>,
    n: u32,
    s: &RatFunc<RadNum>,
    theta: &RatFunc<RadNum>,
    r: &RatFunc<RadNum>,
) -> Vec<RatFunc<RadNum>> {
    let ds = s.derivative();
    let st = s * theta;
    let s2r = &(s * s) * r;
    let mut ps: Vec<RatFunc<RadNum>> = vec![RatFunc::zero(); n as usize + 3];
    // index i + 1 holds P_i
    ps[n as usize + 1] = -RatFunc::from_poly(p.clone());
    for i in (0..=n as i64).rev() {
        let pi = ps[(i + 1) as usize].clone();
        let pnext = ps[(i + 2) as usize].clone();
        let ni = RadNum::from(n as i64 - i);
        let coef = &ds.scale(&ni) - &st;
        let k = RadNum::from((n as i64 - i) * (i + 1));
        let v = &(&(-(s * &pi.derivative())) + &(&coef * &pi)) - &(&s2r * &pnext).scale(&k);
        ps[i as usize] = v;
    }
    ps.truncate(n as usize + 2);
    ps
}

fn factorial(k: u32) -> RadNum {
    RadNum::from((1..=k as i64).product::<i64>())
}

pub(crate) fn run(ld: &LocalData) -> Result<Case3Data> {
    let r = &ld.r;
    let o = ld.order_inf.expect("nonzero r");
    let mut data = Case3Data { obstruction: None, attempts: Vec::new(), witness: None };
    if let Some(p) = ld.poles.iter().find(|p| p.order > 2) {
        data.obstruction = Some(format!("pole of order {} at {}", p.order, p.location));
        return Ok(data);
    }
    if o < 2 {
        data.obstruction = Some(format!("order {o} at infinity is below 2"));
        return Ok(data);
    }
    let ks: Vec<RadNum> = (-6..=6).map(RadNum::from).collect();
    let mut finite_sets = Vec::new();
    for pole in &ld.poles {
        let c = &pole.location;
        let e = if pole.order == 1 {
            vec![12]
        } else {
            let b = laurent_at(r, c, -2);
            integer_members(6, sqrt_one_plus_4b(&b).as_ref(), &ks)
        };
        finite_sets.push(PointESet { point: Point::Finite(c.clone()), order: pole.order as i64, e });
    }
    let b_inf = laurent_at_infinity(r, -2);
    let s_inf = sqrt_one_plus_4b(&b_inf);
    let mut s_poly = Poly::one();
    for pole in &ld.poles {
        s_poly = &s_poly * &Poly::linear_root(pole.location.clone());
    }
    let s_rf = RatFunc::from_poly(s_poly.clone());
    for n in [4u32, 6, 12] {
        let scaled: Vec<RadNum> = (-6..=6).map(|k| RadNum::from(rat(12 * k, n as i64))).collect();
        let e_inf = integer_members(6, s_inf.as_ref(), &scaled);
        let mut e_sets = finite_sets.clone();
        e_sets.push(PointESet { point: Point::Infinity, order: o, e: e_inf.clone() });
        let mut sets = vec![e_inf];
        sets.extend(finite_sets.iter().map(|s| s.e.clone()));
        let mut d = Vec::new();
        for fam in families(&sets) {
            let diff = fam[0] - fam[1..].iter().sum::<i64>();
            let num = n as i64 * diff;
            if num >= 0 && num % 12 == 0 {
                d.push(ECandidate { m: (num / 12) as u64, family: fam });
            }
        }
        d.sort_by_key(|c| c.m);
        let nn = RadNum::from(rat(n as i64, 12));
        for cand in &d {
            if cand.m > MAX_DEGREE {
                continue;
            }
            let mut theta = RatFunc::zero();
            for (pole, &e) in ld.poles.iter().zip(&cand.family[1..]) {
                theta = &theta + &RatFunc::pole_term(nn.clone() * RadNum::from(e), pole.location.clone(), 1);
            }
            let op = |p: &Poly<RadNum>| chain(p, n, &s_rf, &theta, r)[0].clone();
            let Some((p, _)) = solve_monic(cand.m as usize, op) else {
                continue;
            };
            let ps = chain(&p, n, &s_rf, &theta, r);
            let omega_polynomial: Vec<RatFunc<RadNum>> = (0..=n)
                .map(|i| {
                    let si = s_rf.powi(i as i32).expect("nonzero");
                    (&si * &ps[i as usize + 1]).try_div(&RatFunc::constant(factorial(n - i))).expect("nonzero")
                })
                .collect();
            if !riccati_invariant(&omega_polynomial, r) {
                continue;
            }
            data.witness = Some(Case3Witness {
                n,
                m: cand.m,
                family: cand.family.clone(),
                theta,
                s: s_poly.clone(),
                p,
                omega_polynomial,
            });
            break;
        }
        data.attempts.push(Case3Attempt { n, e_sets, d });
        if data.witness.is_some() {
            break;
        }
    }
    Ok(data)
}

/// Third Kovacic case; returns the witness for the first `n ∈ {4, 6, 12}` that succeeds.
pub fn case3(e: &Rlde) -> Result<Option<Case3Witness>> {
    if e.r.is_zero() {
        return Ok(None);
    }
    Ok(run(&LocalData::new(&e.r)?)?.witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetrahedral_r() -> RatFunc<RadNum> {
        // −3/(16x²) − 2/(9(x−1)²) + 3/(16x(x−1))
        let q = |n, d| RadNum::from(rat(n, d));
        let a = RatFunc::pole_term(q(-3, 16), RadNum::zero(), 2);
        let b = RatFunc::pole_term(q(-2, 9), RadNum::one(), 2);
        let c = RatFunc::new(Poly::constant(q(3, 16)), Poly::from_ints(&[0, -1, 1])).unwrap();
        &(&a + &b) + &c
    }

    #[test]
    fn tetrahedral_example() {
        let r = tetrahedral_r();
        let data = run(&LocalData::new(&r).unwrap()).unwrap();
        let w = data.witness.expect("case 3 succeeds");
        assert_eq!(w.n, 4);
        assert!(riccati_invariant(&w.omega_polynomial, &r));
    }

    #[test]
    fn airy_is_skipped() {
        let data = run(&LocalData::new(&RatFunc::x()).unwrap()).unwrap();
        assert!(data.obstruction.is_some());
        assert!(case3(&Rlde::new(RatFunc::from_poly(Poly::from_ints(&[2, 0, 1])))).unwrap().is_none());
    }
}
