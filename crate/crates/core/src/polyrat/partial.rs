use serde::Serialize;

use super::laurent::laurent_series_at;
use super::roots::roots;
use super::{Poly, RatFunc};
use crate::exactnum::{Field, RadNum};
use crate::Result;

/// Principal part `Σ_j coeffs[j-1]/(x - location)^j` of a rational function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolePart {
    pub location: RadNum,
    pub coeffs: Vec<RadNum>,
}

impl PolePart {
    pub fn residue(&self) -> RadNum {
        self.coeffs.first().cloned().unwrap_or_else(RadNum::zero)
    }

    /// Whether only the simple-pole term is present.
    pub fn is_simple(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn to_ratfunc(&self) -> RatFunc<RadNum> {
        let mut acc = RatFunc::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &RatFunc::pole_term(c.clone(), self.location.clone(), j as u32 + 1);
            }
        }
        acc
    }
}

/// Full partial-fraction decomposition over [`RadNum`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialFractions {
    pub polynomial: Poly<RadNum>,
    pub parts: Vec<PolePart>,
}

impl PartialFractions {
    pub fn to_ratfunc(&self) -> RatFunc<RadNum> {
        self.parts
            .iter()
            .fold(RatFunc::from_poly(self.polynomial.clone()), |acc, p| &acc + &p.to_ratfunc())
    }
}

pub fn partial_fractions<F: Field>(r: &RatFunc<F>) -> Result<PartialFractions> {
    let r = r.map(|c| c.to_radnum());
    let (polynomial, _) = r.num().div_rem(r.den())?;
    let mut parts = Vec::new();
    for (c, mult) in roots(r.den())? {
        let m = mult as i64;
        let ser = laurent_series_at(&r, &c, -1);
        let coeffs = (1..=m).map(|j| ser.coeff(-j)).collect();
        parts.push(PolePart { location: c, coeffs });
    }
    Ok(PartialFractions { polynomial, parts })
}

/// Result of Hermite reduction: `∫ r = rational + ∫ remainder`, where the
/// remainder is proper with squarefree denominator. The integral is rational
/// exactly when the remainder vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteReduction<F> {
    pub rational: RatFunc<F>,
    pub remainder: RatFunc<F>,
}

impl<F: Field> HermiteReduction<F> {
    pub fn is_log_free(&self) -> bool {
        self.remainder.is_zero()
    }
}

/// Hermite reduction of `∫ r dx` (quadratic version).
pub fn hermite_reduce<F: Field>(r: &RatFunc<F>) -> HermiteReduction<F> {
    let (poly, mut a) = r.num().div_rem(r.den()).expect("monic denominator");
    let d = r.den().clone();
    let mut g = RatFunc::from_poly(poly.integral());
    let mut dm = d.gcd(&d.derivative());
    let ds = d.exact_div(&dm);
    while dm.degree().unwrap_or(0) > 0 {
        let dm2 = dm.gcd(&dm.derivative());
        let dms = dm.exact_div(&dm2);
        let lhs = -(&ds * &dm.derivative()).exact_div(&dm);
        let (b, c) = solve_bezout(&lhs, &dms, &a);
        a = &c - &(&b.derivative() * &ds).exact_div(&dms);
        g = &g + &RatFunc::new(b, dm.clone()).expect("nonzero");
        dm = dm2;
    }
    let (q, rem) = a.div_rem(&ds).expect("nonzero");
    g = &g + &RatFunc::from_poly(q.integral());
    HermiteReduction { rational: g, remainder: RatFunc::new(rem, ds).expect("nonzero") }
}

/// `(s, t)` with `s·a + t·b = c` and `deg s < deg b`, assuming `gcd(a, b) = 1`.
fn solve_bezout<F: Field>(a: &Poly<F>, b: &Poly<F>, c: &Poly<F>) -> (Poly<F>, Poly<F>) {
    let (_, s, t) = Poly::ext_gcd(a, b);
    let (q, s2) = (&s * c).div_rem(b).expect("nonzero");
    let t2 = &(&t * c) + &(&q * a);
    (s2, t2)
}
