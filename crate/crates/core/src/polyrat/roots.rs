use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, RatFunc};
use crate::exactnum::{Field, RadNum, Rat};
use crate::{Error, Result};

/// A pole of a rational function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pole {
    pub location: RadNum,
    pub order: usize,
}

/// All roots of `p` in [`RadNum`] with multiplicities, in a deterministic order.
///
/// Rational-coefficient factors are split by the rational root theorem; any
/// leftover factor must have degree at most two. Anything else is reported as
/// [`Error::UnsupportedPoleField`].
pub fn roots<F: Field>(p: &Poly<F>) -> Result<Vec<(RadNum, usize)>> {
    let p = p.map(|c| c.to_radnum());
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree() {
        for r in squarefree_roots(&factor)? {
            out.push((r, mult));
        }
    }
    Ok(out)
}

/// Poles of `r` (roots of its denominator).
pub fn poles<F: Field>(r: &RatFunc<F>) -> Result<Vec<Pole>> {
    Ok(roots(r.den())?
        .into_iter()
        .map(|(location, order)| Pole { location, order })
        .collect())
}

fn squarefree_roots(f: &Poly<RadNum>) -> Result<Vec<RadNum>> {
    let mut f = f.monic();
    let mut out = Vec::new();
    if f.coeffs().iter().all(|c| c.as_rat().is_some()) {
        let q = f.map(|c| c.as_rat().expect("rational"));
        for r in rational_roots(&q) {
            out.push(RadNum::from(r.clone()));
            f = f.exact_div(&Poly::linear_root(RadNum::from(r)));
        }
    } else if let Some(v) = f.valuation().filter(|&v| v > 0) {
        out.push(RadNum::zero());
        f = Poly::new(f.coeffs()[v..].to_vec());
    }
    match f.degree().unwrap_or(0) {
        0 => {}
        1 => out.push(-f.coeff(0)),
        2 => {
            let (b, c) = (f.coeff(1), f.coeff(0));
            let disc = b.clone() * b.clone() - c * RadNum::from_int(4);
            let s = disc.sqrt().map_err(|_| Error::UnsupportedPoleField(f.to_string()))?;
            let half = RadNum::from(Rat::new(1.into(), 2.into()));
            out.push((s.clone() - b.clone()) * half.clone());
            out.push((-s - b) * half);
        }
        _ => return Err(Error::UnsupportedPoleField(f.to_string())),
    }
    Ok(out)
}

/// Distinct rational roots, ascending.
pub fn rational_roots(p: &Poly<Rat>) -> Vec<Rat> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut coeffs: Vec<Rat> = p.coeffs().to_vec();
    if let Some(v) = p.valuation().filter(|&v| v > 0) {
        out.push(<Rat as Zero>::zero());
        coeffs.drain(..v);
    }
    let l = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    if ints.len() > 1 {
        let a0 = ints[0].abs().to_biguint().expect("nonnegative");
        let an = ints[ints.len() - 1].abs().to_biguint().expect("nonnegative");
        let ps = divisors(&a0);
        let qs = divisors(&an);
        let eval = |x: &Rat| {
            ints.iter()
                .rev()
                .fold(<Rat as Zero>::zero(), |acc, c| acc * x + Rat::from_integer(c.clone()))
        };
        let mut seen = std::collections::BTreeSet::new();
        for pn in &ps {
            for qd in &qs {
                let base = Rat::new(BigInt::from(pn.clone()), BigInt::from(qd.clone()));
                for cand in [base.clone(), -base] {
                    if seen.insert(cand.clone()) && Zero::is_zero(&eval(&cand)) {
                        out.push(cand);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Positive divisors by trial factorisation; large prime cofactors are kept whole.
fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut primes: Vec<(BigUint, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = 2u64;
    while p < (1 << 20) && BigUint::from(p * p) <= m {
        let bp = BigUint::from(p);
        let mut e = 0;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            primes.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > BigUint::one() {
        primes.push((m, 1));
    }
    let mut out = vec![BigUint::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        out = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, sqrt_rational, GaussRat};

    #[test]
    fn rational_root_theorem() {
        // 6x^3 - 11x^2 + 6x - 1 = (x-1)(2x-1)(3x-1)
        let p = Poly::<Rat>::from_ints(&[-1, 6, -11, 6]);
        assert_eq!(rational_roots(&p), vec![rat(1, 3), rat(1, 2), int(1)]);
        assert_eq!(divisors(&BigUint::from(12u32)).len(), 6);
    }

    #[test]
    fn quadratic_and_repeated_roots() {
        // x^2 (x^2 - 2)
        let p = Poly::<Rat>::from_ints(&[0, 0, -2, 0, 1]);
        let rs = roots(&p).unwrap();
        assert!(rs.contains(&(RadNum::zero(), 2)));
        assert!(rs.contains(&(sqrt_rational(&int(2)), 1)));
        assert!(rs.contains(&(-sqrt_rational(&int(2)), 1)));
        // x^2 + 1
        let rs = roots(&Poly::<Rat>::from_ints(&[1, 0, 1])).unwrap();
        assert!(rs.contains(&(RadNum::from(GaussRat::i()), 1)));
    }

    #[test]
    fn irreducible_cubic_is_unsupported() {
        let p = Poly::<Rat>::from_ints(&[-2, 0, 0, 1]);
        assert!(matches!(roots(&p), Err(Error::UnsupportedPoleField(_))));
    }
}
