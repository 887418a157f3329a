use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1 << 18;

/// Splits `n = f²·s` with `s` squarefree.
///
/// Trial division runs up to 2^18; a cofactor that is not a perfect square is
/// taken to be squarefree, which is exact for cofactors below 2^54.
pub fn square_part(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    if let Some(small) = n.to_u128() {
        let (f, s) = square_part_u128(small);
        return (BigUint::from(f), BigUint::from(s));
    }
    let mut rest = n.clone();
    let mut f = BigUint::one();
    let mut s = BigUint::one();
    let mut p: u64 = 2;
    while p < TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            f *= bp.pow(e / 2);
            if e % 2 == 1 {
                s *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    finish_cofactor(rest, &mut f, &mut s);
    (f, s)
}

fn finish_cofactor(rest: BigUint, f: &mut BigUint, s: &mut BigUint) {
    if rest.is_one() {
        return;
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        *f *= r;
    } else {
        *s *= rest;
    }
}

fn square_part_u128(mut n: u128) -> (u128, u128) {
    let mut f: u128 = 1;
    let mut s: u128 = 1;
    let mut p: u128 = 2;
    while p < TRIAL_LIMIT as u128 && p * p <= n {
        let mut e = 0u32;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            f *= p.pow(e / 2);
            if e % 2 == 1 {
                s *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let r = n.sqrt();
        if r * r == n {
            f *= r;
        } else {
            s *= n;
        }
    }
    (f, s)
}

/// Pairwise coprime refinement of a list of integers greater than one.
///
/// Every input is a product of elements of the returned base.
pub(crate) fn coprime_base(xs: impl IntoIterator<Item = BigUint>) -> Vec<BigUint> {
    let mut base: Vec<BigUint> = Vec::new();
    let mut work: Vec<BigUint> = xs.into_iter().filter(|x| *x > BigUint::one()).collect();
    while let Some(y) = work.pop() {
        if y.is_one() {
            continue;
        }
        match base.iter().position(|b| !b.gcd(&y).is_one()) {
            None => base.push(y),
            Some(idx) => {
                let b = base.swap_remove(idx);
                let g = b.gcd(&y);
                for part in [&b / &g, &y / &g, g] {
                    if !part.is_one() {
                        work.push(part);
                    }
                }
            }
        }
    }
    base.sort();
    base
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: u64) -> (u64, u64) {
        let (f, s) = square_part(&BigUint::from(n));
        (f.to_u64().unwrap(), s.to_u64().unwrap())
    }

    #[test]
    fn squarefree_extraction() {
        assert_eq!(sp(1), (1, 1));
        assert_eq!(sp(8), (2, 2));
        assert_eq!(sp(9), (3, 1));
        assert_eq!(sp(12), (2, 3));
        assert_eq!(sp(30), (1, 30));
        assert_eq!(sp(1_000_003 * 1_000_003), (1_000_003, 1));
    }

    #[test]
    fn large_values_go_through_bigint_path() {
        let n = BigUint::from(u128::MAX) * BigUint::from(4u32);
        let (f, s) = square_part(&n);
        assert_eq!(&f * &f * &s, n);
        assert!((&f % BigUint::from(2u32)).is_zero());
    }

    #[test]
    fn coprime_base_refines() {
        let base = coprime_base([6u32, 10, 15].map(BigUint::from));
        assert_eq!(base, [2u32, 3, 5].map(BigUint::from).to_vec());
        let base = coprime_base([6u32, 6].map(BigUint::from));
        assert_eq!(base, vec![BigUint::from(6u32)]);
    }
}
