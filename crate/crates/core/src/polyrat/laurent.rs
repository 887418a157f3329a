use serde::Serialize;

use super::{Poly, RatFunc};
use crate::exactnum::{Field, Rat};
use crate::{Error, Result};

/// Truncated Laurent expansion `Σ_j coeffs[j]·z^(valuation + j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent<F> {
    pub valuation: i64,
    pub coeffs: Vec<F>,
}

impl<F: Field> Laurent<F> {
    /// Coefficient of `z^k` (zero outside the stored window).
    pub fn coeff(&self, k: i64) -> F {
        let j = k - self.valuation;
        if j < 0 {
            return F::zero();
        }
        self.coeffs.get(j as usize).cloned().unwrap_or_else(F::zero)
    }
}

/// Expansion of `r` in `u = x - c`, through the term `u^upto`.
pub fn laurent_series_at<F: Field>(r: &RatFunc<F>, c: &F, upto: i64) -> Laurent<F> {
    series_at_zero(&r.num().shift(c), &r.den().shift(c), upto)
}

/// Expansion of `r(1/t)` in `t`, through the term `t^upto`. The coefficient of
/// `t^k` is the coefficient of `x^(-k)` at infinity.
pub fn laurent_series_at_infinity<F: Field>(r: &RatFunc<F>, upto: i64) -> Laurent<F> {
    let s = r.invert_variable();
    series_at_zero(s.num(), s.den(), upto)
}

fn series_at_zero<F: Field>(num: &Poly<F>, den: &Poly<F>, upto: i64) -> Laurent<F> {
    let (Some(vn), Some(vd)) = (num.valuation(), den.valuation()) else {
        return Laurent { valuation: i64::MAX, coeffs: Vec::new() };
    };
    let valuation = vn as i64 - vd as i64;
    let n1 = &num.coeffs()[vn..];
    let d1 = &den.coeffs()[vd..];
    let count = (upto - valuation + 1).max(0) as usize;
    let d0i = d1[0].inv().expect("nonzero constant term");
    let mut q: Vec<F> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = n1.get(k).cloned().unwrap_or_else(F::zero);
        for i in 1..=k.min(d1.len() - 1) {
            acc = acc - d1[i].clone() * q[k - i].clone();
        }
        q.push(acc * d0i.clone());
    }
    Laurent { valuation, coeffs: q }
}

/// Coefficient of `(x - c)^k` in the Laurent expansion of `r` at `c`.
pub fn laurent_at<F: Field>(r: &RatFunc<F>, c: &F, k: i64) -> F {
    laurent_series_at(r, c, k).coeff(k)
}

/// Coefficient of `x^k` in the expansion of `r` at infinity.
pub fn laurent_at_infinity<F: Field>(r: &RatFunc<F>, k: i64) -> F {
    laurent_series_at_infinity(r, -k).coeff(-k)
}

/// Order of vanishing of `r` at `c` (negative at poles); `None` for `r = 0`.
pub fn order_at<F: Field>(r: &RatFunc<F>, c: &F) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let vn = r.num().root_multiplicity(c) as i64;
    let vd = r.den().root_multiplicity(c) as i64;
    Some(vn - vd)
}

/// Order of `r` at infinity; see [`RatFunc::order_at_infinity`].
pub fn order_at_infinity<F: Field>(r: &RatFunc<F>) -> Option<i64> {
    r.order_at_infinity()
}

/// The "square-root part" of `r` at a point of even order.
///
/// `principal` is the truncated square root `s` of `r` and `b` the next
/// coefficient of `r - s^2`, which with `leading` fixes the exponents
/// used by the first Kovacic case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SqrtPart<F: Field> {
    pub principal: RatFunc<F>,
    pub leading: F,
    pub b: F,
    pub v: i64,
}

/// Match the top `count` coefficients `r_0, r_1, ...` (in decreasing powers of
/// an auxiliary variable `z`) by `s = Σ_{j<count} s_j z^(top - j)` with
/// `s^2` agreeing; returns `s_j` and the first unmatched coefficient of
/// `r - s^2`.
fn match_square<F: Field>(r: &[F], count: usize) -> Result<(Vec<F>, F)> {
    let s0 = r[0].to_radnum().sqrt().map_err(|_| Error::NonSquareLeading(r[0].to_string()))?;
    let s0 = F::from_radnum(&s0).ok_or_else(|| Error::NonSquareLeading(r[0].to_string()))?;
    let two_s0_inv = (s0.clone() + s0.clone()).inv()?;
    let mut s = vec![s0];
    let square_coeff = |s: &[F], k: usize| -> F {
        let mut acc = F::zero();
        for i in 0..=k {
            if i < s.len() && k - i < s.len() {
                acc = acc + s[i].clone() * s[k - i].clone();
            }
        }
        acc
    };
    for k in 1..count {
        // coefficient k of s^2 is 2 s_0 s_k + (terms in s_1..s_{k-1})
        let rest = square_coeff(&s, k);
        s.push((r[k].clone() - rest) * two_s0_inv.clone());
    }
    let b = r[count].clone() - square_coeff(&s, count);
    Ok((s, b))
}

/// Square-root part of `r` at a finite pole `c` of even order `2v >= 4`.
pub fn sqrt_part_at<F: Field>(r: &RatFunc<F>, c: &F) -> Result<SqrtPart<F>> {
    let o = order_at(r, c).ok_or(Error::InvalidOrder(0))?;
    if o > -4 {
        return Err(Error::InvalidOrder(o));
    }
    if o % 2 != 0 {
        return Err(Error::OddOrder(o));
    }
    let v = -o / 2;
    let ser = laurent_series_at(r, c, -(v + 1));
    let coeffs: Vec<F> = (0..v).map(|j| ser.coeff(-2 * v + j)).collect();
    let (s, b) = match_square(&coeffs, (v - 1) as usize)?;
    let mut principal = RatFunc::zero();
    for (j, sj) in s.iter().enumerate() {
        principal = &principal + &RatFunc::pole_term(sj.clone(), c.clone(), (v - j as i64) as u32);
    }
    Ok(SqrtPart { principal, leading: s[0].clone(), b, v })
}

/// Square-root part of `r` at infinity where the order is `-2v <= 0`.
pub fn sqrt_part_at_infinity<F: Field>(r: &RatFunc<F>) -> Result<SqrtPart<F>> {
    let o = r.order_at_infinity().ok_or(Error::InvalidOrder(0))?;
    if o > 0 {
        return Err(Error::InvalidOrder(o));
    }
    if o % 2 != 0 {
        return Err(Error::OddOrder(o));
    }
    let v = -o / 2;
    let ser = laurent_series_at_infinity(r, 1 - v);
    let coeffs: Vec<F> = (0..=v + 1).map(|j| ser.coeff(-2 * v + j)).collect();
    let (s, b) = match_square(&coeffs, (v + 1) as usize)?;
    let mut pc = vec![F::zero(); (v + 1) as usize];
    for (j, sj) in s.iter().enumerate() {
        pc[(v as usize) - j] = sj.clone();
    }
    Ok(SqrtPart { principal: RatFunc::from_poly(Poly::new(pc)), leading: s[0].clone(), b, v })
}

/// Residue of `r` at `c`.
pub fn residue<F: Field>(r: &RatFunc<F>, c: &F) -> F {
    laurent_at(r, c, -1)
}

/// `n/2` as a field element.
pub(crate) fn half<F: Field>(n: i64) -> F {
    F::from_rat(Rat::new(n.into(), 2.into()))
}
