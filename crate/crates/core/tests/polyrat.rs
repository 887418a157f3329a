mod common;

use common::{rad, rat_func, small_rat};
use liouville::exactnum::{rat, Rat};
use liouville::polyrat::{
    laurent_at, laurent_at_infinity, order_at, partial_fractions, poles, sqrt_part_at, sqrt_part_at_infinity,
};
use liouville::{Field, Poly, RadNum, RatFunc};
use proptest::prelude::*;

/// `r` plus a pole of order `2v` at `c` with a square leading coefficient.
fn with_even_pole() -> impl Strategy<Value = (RatFunc<Rat>, Rat, i64)> {
    (rat_func(), -3i64..=3, 2i64..=3, 1i64..=4, proptest::collection::vec(small_rat(), 4))
        .prop_map(|(r, c, v, s0, tail)| {
            let c = rat(c + 10, 1);
            let u = Poly::new(vec![-c.clone(), Rat::one()]);
            let mut num = vec![rat(s0 * s0, 1)];
            num.extend(tail);
            let pole = RatFunc::new(Poly::new(num), u.pow(2 * v as u32)).unwrap();
            (&r + &pole, c, v)
        })
}

proptest! {
    #[test]
    fn partial_fractions_recombine(r in rat_func(), q in 1i64..=5) {
        let quad = RatFunc::new(Poly::one(), Poly::new(vec![rat(q, 1), Rat::zero(), Rat::one()])).unwrap();
        let r = &r + &quad;
        let pf = partial_fractions(&r).unwrap();
        prop_assert_eq!(pf.to_ratfunc(), rad(&r));
    }

    #[test]
    fn pole_orders_account_for_denominator(r in rat_func()) {
        prop_assume!(!r.is_zero());
        let total: usize = poles(&r).unwrap().iter().map(|p| p.order).sum();
        prop_assert_eq!(total, r.den().degree().unwrap());
        let inf = r.order_at_infinity().unwrap();
        prop_assert_eq!(inf, r.den().degree_i64() - r.num().degree_i64());
    }

    #[test]
    fn sqrt_part_at_finite_pole((r, c, v) in with_even_pole()) {
        let r = rad(&r);
        let c = RadNum::from(c);
        let sp = sqrt_part_at(&r, &c).unwrap();
        prop_assert_eq!(sp.v, v);
        let rest = &r - &(&sp.principal * &sp.principal);
        if let Some(o) = order_at(&rest, &c) {
            prop_assert!(o >= -(v + 1));
        }
        prop_assert_eq!(sp.b, laurent_at(&rest, &c, -(v + 1)));
    }

    #[test]
    fn sqrt_part_at_infinity_of_polynomial(v in 1usize..=3, s0 in 1i64..=4, tail in proptest::collection::vec(small_rat(), 6)) {
        let mut cs: Vec<Rat> = tail.into_iter().take(2 * v).collect();
        cs.push(rat(s0 * s0, 1));
        let r = rad(&RatFunc::from_poly(Poly::new(cs)));
        let sp = sqrt_part_at_infinity(&r).unwrap();
        let rest = &r - &(&sp.principal * &sp.principal);
        if let Some(o) = rest.order_at_infinity() {
            prop_assert!(o >= 1 - v as i64);
        }
        prop_assert_eq!(sp.b, laurent_at_infinity(&rest, v as i64 - 1));
    }
}
