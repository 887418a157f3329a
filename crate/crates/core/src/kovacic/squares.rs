use num_bigint::BigInt;
use num_traits::Signed;

use super::{kovacic, second_solution, GroupLabel, Hyperexponential, KovacicReport, Omega, Solution};
use crate::exactnum::{sqrt_rational, Field, RadNum, Rat};
use crate::ode::Rlde;
use crate::polyrat::{Poly, RatFunc};
use crate::{Error, Result};

/// `Q = A² + B` with `A` monic of degree `n` and `deg B < n`, for `Q` monic of
/// degree `2n`.
pub fn complete_squares<F: Field>(q: &Poly<F>) -> Result<(Poly<F>, Poly<F>)> {
    let d = q.degree().ok_or_else(|| Error::Precondition("zero polynomial".into()))?;
    if d % 2 == 1 {
        return Err(Error::OddDegree(d));
    }
    if !q.is_monic() {
        return Err(Error::Precondition(format!("{q} is not monic")));
    }
    let n = d / 2;
    let two_inv = F::from_int(2).inv()?;
    // a[j] is the coefficient of x^j in A, a[n] = 1
    let mut a = vec![F::zero(); n + 1];
    a[n] = F::one();
    for j in (0..n).rev() {
        // x^(n+j) in A²: 2 a_j + Σ_{i+k=n+j, j<i,k<n} a_i a_k
        let mut acc = q.coeff(n + j);
        for i in j + 1..n {
            let k = n + j - i;
            if k > j && k < n {
                acc = acc - a[i].clone() * a[k].clone();
            }
        }
        a[j] = acc * two_inv.clone();
    }
    let a = Poly::new(a);
    let b = q - &(&a * &a);
    debug_assert!(b.degree().map_or(true, |db| db < n.max(1)));
    Ok((a, b))
}

/// Exact `k`-th root of a rational, when it exists.
fn rational_root(q: &Rat, k: u32) -> Option<Rat> {
    if q.is_negative() && k % 2 == 0 {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.abs().nth_root(k);
        (r.pow(k) == n.abs()).then(|| if n.is_negative() { -r } else { r })
    };
    Some(Rat::new(root(q.numer())?, root(q.denom())?))
}

/// `μ` with `μ^(deg+2) = lead`, when representable.
fn normalizing_scale(q: &Poly<RadNum>) -> Option<RadNum> {
    let lead = q.lead()?.as_rat()?;
    let d = q.degree()? as u32;
    // μ² = lead^(2/(d+2)) = root(lead, (d+2)/2)
    let half = (d + 2) / 2;
    let m2 = rational_root(&lead, half)?;
    let mu = sqrt_rational(&m2);
    (mu.pow(d + 2) == RadNum::from(lead)).then_some(mu)
}

/// The completing-squares route for `ξ'' = Q ξ` with `Q` a nonconstant polynomial.
pub fn polynomial_potential_group(q: &Poly<RadNum>) -> Result<KovacicReport> {
    let d = q.degree().unwrap_or(0);
    if d == 0 {
        return Err(Error::Precondition("potential must be a nonconstant polynomial".into()));
    }
    let r = RatFunc::from_poly(q.clone());
    if d % 2 == 1 {
        let mut rep = KovacicReport::new(r, 4, GroupLabel::SL2);
        rep.notes.push(format!("odd degree {d}: no Liouvillian solutions"));
        return Ok(rep);
    }
    if q.is_monic() {
        return monic_route(q);
    }
    let Some(mu) = normalizing_scale(q) else {
        let mut rep = kovacic(&Rlde::new(r))?;
        rep.notes.push("leading coefficient has no usable root; generic algorithm used".into());
        return Ok(rep);
    };
    // X = μx turns ξ'' = Q(x)ξ into ξ_XX = Q(X/μ)/μ² ξ, which is monic
    let mu_inv = mu.inv()?;
    let scaled = q.compose(&Poly::monomial(mu_inv.clone(), 1)).scale(&(mu_inv.clone() * mu_inv));
    let mut rep = monic_route(&scaled)?;
    let back = Poly::monomial(mu.clone(), 1);
    let back_rf = RatFunc::from_poly(back.clone());
    rep.r = r;
    if let Some(p) = rep.p_m.take() {
        let pm = p.compose(&back);
        let lead = pm.lead().cloned().expect("nonzero");
        rep.p_m = Some(pm.monic());
        if let Some(Omega::Rational { omega }) = rep.omega.take() {
            let w = omega.compose(&back_rf)?.scale(&mu);
            let xi = Hyperexponential::from_omega(&rep.p_m.clone().expect("set"), &w)?;
            debug_assert!(lead.inv().is_ok());
            rep.omega = Some(Omega::Rational { omega: w });
            rep.solutions = vec![
                Solution::Hyperexponential { value: xi.clone() },
                Solution::Quadrature { value: second_solution(&xi)? },
            ];
        }
    }
    rep.notes.push(format!("normalized by x = {mu}*t"));
    Ok(rep)
}

fn monic_route(q: &Poly<RadNum>) -> Result<KovacicReport> {
    let r = RatFunc::from_poly(q.clone());
    let (a, b) = complete_squares(q)?;
    let n = a.degree().expect("nonzero") as i64;
    let b_top = b.coeff(n as usize - 1);
    let mut notes = vec![format!("completed squares: Q = ({a})^2 + ({b})")];
    for sign in [true, false] {
        let eps = if sign { RadNum::one() } else { -RadNum::one() };
        let twice_m_plus_n = b_top.clone() * eps.clone();
        let Some(t) = (twice_m_plus_n - RadNum::from(n)).is_integer() else {
            continue;
        };
        let two_m = i64::try_from(t).unwrap_or(-1);
        if two_m < 0 || two_m % 2 != 0 {
            continue;
        }
        let m = (two_m / 2) as usize;
        // P'' + 2εA P' + (εA' − B) P = 0
        let ea = a.scale(&eps);
        let coef = &ea.derivative() - &b;
        let op = |p: &Poly<RadNum>| {
            let d1 = p.derivative();
            RatFunc::from_poly(&(&d1.derivative() + &(&ea.scale(&RadNum::from(2i64)) * &d1)) + &(&coef * p))
        };
        let Some((p, _)) = super::solve_monic(m, op) else {
            notes.push(format!("sign {}: m = {m} but no polynomial solution", if sign { '+' } else { '-' }));
            continue;
        };
        let omega = RatFunc::from_poly(ea.clone());
        let xi = Hyperexponential::from_omega(&p, &omega)?;
        let mut rep = KovacicReport::new(r, 1, GroupLabel::BorelCstarSemidirectCplus);
        rep.m = Some(m as u64);
        rep.omega = Some(Omega::Rational { omega });
        rep.p_m = Some(p);
        rep.solutions = vec![
            Solution::Hyperexponential { value: xi.clone() },
            Solution::Quadrature { value: second_solution(&xi)? },
        ];
        rep.notes = notes;
        return Ok(rep);
    }
    let mut rep = KovacicReport::new(r, 4, GroupLabel::SL2);
    notes.push("no sign gives a polynomial solution: no Liouvillian solutions".into());
    rep.notes = notes;
    Ok(rep)
}
