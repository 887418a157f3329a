use serde::Serialize;

use super::{solve_monic, sqrt_one_plus_4b, LocalData};
use crate::exactnum::RadNum;
use crate::ode::{Point, Rlde};
use crate::polyrat::{laurent_at, laurent_at_infinity, Poly, RatFunc};
use crate::Result;

const MAX_DEGREE: u64 = 400;

/// Integer candidate set `E_p` at one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointESet {
    pub point: Point,
    pub order: i64,
    pub e: Vec<i64>,
}

/// An element of `D` with its family `(e_∞, e_c1, ...)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ECandidate {
    pub m: u64,
    pub family: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case2Witness {
    pub m: u64,
    pub family: Vec<i64>,
    pub theta: RatFunc<RadNum>,
    pub p: Poly<RadNum>,
    /// `φ = θ + P'/P`.
    pub phi: RatFunc<RadNum>,
    /// Coefficients (ascending) of `ω² − φω + ½(φ' + φ² − 2r)`; `φ` is the sum
    /// of the two conjugate roots.
    pub omega_quadratic: Vec<RatFunc<RadNum>>,
    /// `4r − φ² − 2φ'`.
    pub discriminant: RatFunc<RadNum>,
    pub distinct_roots: usize,
    /// Outcome of the one-solution criterion `r = (2φ' + 2φ − φ²)/4`,
    /// kept for reference only.
    pub literal_single_solution_test: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case2Data {
    /// Finite poles in order, then infinity.
    pub e_sets: Vec<PointESet>,
    pub d: Vec<ECandidate>,
    pub witness: Option<Case2Witness>,
}

impl Case2Data {
    pub fn e_at(&self, point: &Point) -> Option<&[i64]> {
        self.e_sets.iter().find(|s| s.point == *point).map(|s| s.e.as_slice())
    }
}

/// Integer members of `{base + k·s : k ∈ ks}`.
pub(crate) fn integer_members(base: i64, s: Option<&RadNum>, ks: &[RadNum]) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::new();
    for k in ks {
        let v = match s {
            Some(s) => RadNum::from(base) + k.clone() * s.clone(),
            None if k.is_zero() => RadNum::from(base),
            None => continue,
        };
        if let Some(n) = v.is_integer().and_then(|n| i64::try_from(n).ok()) {
            out.push(n);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn ints(ks: &[i64]) -> Vec<RadNum> {
    ks.iter().map(|&k| RadNum::from(k)).collect()
}

/// Cartesian product of candidate sets, first set varying slowest.
pub(crate) fn families(sets: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for set in sets {
        let mut next = Vec::with_capacity(out.len() * set.len());
        for prefix in &out {
            for &e in set {
                let mut f = prefix.clone();
                f.push(e);
                next.push(f);
            }
        }
        out = next;
    }
    out
}

fn third_order_operator(
    theta: &RatFunc<RadNum>,
    r: &RatFunc<RadNum>,
) -> impl Fn(&Poly<RadNum>) -> RatFunc<RadNum> {
    let k = |n: i64| RadNum::from(n);
    let t1 = theta.derivative();
    let t2 = t1.derivative();
    let th2 = theta * theta;
    let c2 = theta.scale(&k(3));
    let c1 = &(&t1.scale(&k(3)) + &th2.scale(&k(3))) - &r.scale(&k(4));
    let c0 = &(&(&(&t2 + &(theta * &t1).scale(&k(3))) + &(&th2 * theta)) - &(r * theta).scale(&k(4)))
        - &r.derivative().scale(&k(2));
    move |p| {
        let d1 = p.derivative();
        let d2 = d1.derivative();
        let d3 = d2.derivative();
        let f = |q: Poly<RadNum>| RatFunc::from_poly(q);
        &(&(&f(d3) + &(&c2 * &f(d2))) + &(&c1 * &f(d1))) + &(&c0 * &f(p.clone()))
    }
}

pub(crate) fn run(ld: &LocalData) -> Result<Case2Data> {
    let r = &ld.r;
    let mut e_sets = Vec::new();
    for pole in &ld.poles {
        let c = &pole.location;
        let o = pole.order as i64;
        let e = match o {
            1 => vec![4],
            2 => {
                let b = laurent_at(r, c, -2);
                integer_members(2, sqrt_one_plus_4b(&b).as_ref(), &ints(&[0, 2, -2]))
            }
            v => vec![v],
        };
        e_sets.push(PointESet { point: Point::Finite(c.clone()), order: o, e });
    }
    let o = ld.order_inf.expect("nonzero r");
    let e_inf = if o > 2 {
        vec![0, 2, 4]
    } else if o == 2 {
        let b = laurent_at_infinity(r, -2);
        integer_members(2, sqrt_one_plus_4b(&b).as_ref(), &ints(&[0, 2, -2]))
    } else {
        vec![o]
    };
    e_sets.push(PointESet { point: Point::Infinity, order: o, e: e_inf });

    let mut sets: Vec<Vec<i64>> = vec![e_sets.last().expect("infinity").e.clone()];
    sets.extend(e_sets[..e_sets.len() - 1].iter().map(|s| s.e.clone()));
    let mut d = Vec::new();
    for fam in families(&sets) {
        let twice_m = fam[0] - fam[1..].iter().sum::<i64>();
        if twice_m >= 0 && twice_m % 2 == 0 {
            d.push(ECandidate { m: (twice_m / 2) as u64, family: fam });
        }
    }
    d.sort_by_key(|c| c.m);
    let mut data = Case2Data { e_sets, d, witness: None };
    for cand in &data.d {
        if cand.m > MAX_DEGREE {
            continue;
        }
        let mut theta = RatFunc::zero();
        for (pole, &e) in ld.poles.iter().zip(&cand.family[1..]) {
            let h = RadNum::from(crate::exactnum::rat(e, 2));
            theta = &theta + &RatFunc::pole_term(h, pole.location.clone(), 1);
        }
        let Some((p, _)) = solve_monic(cand.m as usize, third_order_operator(&theta, r)) else {
            continue;
        };
        let phi = &theta + &RatFunc::new(p.derivative(), p.clone())?;
        let half = RadNum::from(crate::exactnum::rat(1, 2));
        let c0 = (&(&phi.derivative() + &(&phi * &phi)) - &r.scale(&RadNum::from(2i64))).scale(&half);
        let omega_quadratic = vec![c0, -phi.clone(), RatFunc::one()];
        debug_assert!(super::riccati_invariant(&omega_quadratic, r), "case-2 quadratic not invariant");
        let discriminant = &(&r.scale(&RadNum::from(4i64)) - &(&phi * &phi)) - &phi.derivative().scale(&RadNum::from(2i64));
        let literal = {
            let two = RadNum::from(2i64);
            let rhs = &(&phi.derivative().scale(&two) + &phi.scale(&two)) - &(&phi * &phi);
            *r == rhs.scale(&RadNum::from(crate::exactnum::rat(1, 4)))
        };
        data.witness = Some(Case2Witness {
            m: cand.m,
            family: cand.family.clone(),
            theta,
            p,
            phi,
            distinct_roots: if discriminant.is_zero() { 1 } else { 2 },
            omega_quadratic,
            discriminant,
            literal_single_solution_test: literal,
        });
        break;
    }
    Ok(data)
}

/// Second Kovacic case; returns the witness when the group is dihedral-type.
pub fn case2(e: &Rlde) -> Result<Option<Case2Witness>> {
    if e.r.is_zero() {
        return Ok(None);
    }
    Ok(run(&LocalData::new(&e.r)?)?.witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn dihedral_example() {
        // r = 1/x − 3/(16x²)
        let r = &RatFunc::<RadNum>::pole_term(RadNum::one(), RadNum::zero(), 1)
            - &RatFunc::pole_term(RadNum::from(rat(3, 16)), RadNum::zero(), 2);
        let data = run(&LocalData::new(&r).unwrap()).unwrap();
        assert_eq!(data.e_at(&Point::Finite(RadNum::zero())).unwrap(), &[1, 2, 3]);
        assert_eq!(data.e_at(&Point::Infinity).unwrap(), &[1]);
        assert_eq!(data.d.iter().map(|c| c.m).collect::<Vec<_>>(), vec![0]);
        let w = data.witness.unwrap();
        assert_eq!(w.p, Poly::one());
        assert!(super::super::riccati_invariant(&w.omega_quadratic, &r));
        assert_eq!(w.distinct_roots, 2);
    }

    #[test]
    fn integer_filter() {
        let s = RadNum::from(rat(1, 2));
        assert_eq!(integer_members(2, Some(&s), &ints(&[0, 2, -2])), vec![1, 2, 3]);
        let s = crate::exactnum::sqrt_rational(&rat(2, 1));
        assert_eq!(integer_members(2, Some(&s), &ints(&[0, 2, -2])), vec![2]);
        assert_eq!(integer_members(2, None, &ints(&[0, 2, -2])), vec![2]);
    }
}
