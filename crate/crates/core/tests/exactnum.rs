use liouville::exactnum::{rat, sqrt_rational, GaussRat};
use liouville::RadNum;
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn radnum() -> impl Strategy<Value = RadNum> {
    let term = (-9i64..=9, -9i64..=9, 1i64..=4, prop::sample::select(vec![1u32, 2, 3, 5, 6, 7]));
    proptest::collection::vec(term, 1..=3).prop_map(|ts| {
        ts.into_iter().fold(RadNum::zero(), |acc, (re, im, d, s)| {
            acc + RadNum::radical(GaussRat::new(rat(re, d), rat(im, d)), &BigUint::from(s))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sqrt_rational_squares_back(n in -1_000_000i64..=1_000_000, d in 1i64..=10_000) {
        let q = rat(n, d);
        let s = sqrt_rational(&q);
        prop_assert_eq!(&s * &s, RadNum::from(q));
    }
}

proptest! {
    #[test]
    fn ring_axioms(a in radnum(), b in radnum(), c in radnum()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
        prop_assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn inverse_is_exact(a in radnum()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(a.clone() * a.inv().unwrap(), RadNum::one());
    }

    #[test]
    fn is_integer_matches_embedding(n in -10_000i64..=10_000, d in 1i64..=7, b in -3i64..=3) {
        let z = RadNum::from(n);
        prop_assert_eq!(z.is_integer(), Some(BigInt::from(n)));
        let q = RadNum::from(rat(n, d));
        let expect = (n % d == 0).then(|| BigInt::from(n / d));
        prop_assert_eq!(q.is_integer(), expect);
        let w = q + RadNum::radical(GaussRat::from(b), &BigUint::from(2u32));
        if b != 0 {
            prop_assert_eq!(w.is_integer(), None);
        }
    }
}
