#![allow(dead_code)]

use liouville::exactnum::{rat, Rat};
use liouville::{Field, Poly, RadNum, RatFunc};
use proptest::prelude::*;

pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |q| !Field::is_zero(q))
}

/// Polynomial of degree exactly `deg`.
pub fn poly_of_degree(deg: usize) -> impl Strategy<Value = Poly<Rat>> {
    (proptest::collection::vec(small_rat(), deg), nonzero_rat()).prop_map(|(mut cs, lead)| {
        cs.push(lead);
        Poly::new(cs)
    })
}

pub fn monic_of_degree(deg: usize) -> impl Strategy<Value = Poly<Rat>> {
    proptest::collection::vec(small_rat(), deg).prop_map(|mut cs| {
        cs.push(Rat::one());
        Poly::new(cs)
    })
}

pub fn nonconstant_poly(max_deg: usize) -> impl Strategy<Value = Poly<Rat>> {
    (1..=max_deg).prop_flat_map(poly_of_degree)
}

/// A rational function with rational poles of bounded order.
pub fn rat_func() -> impl Strategy<Value = RatFunc<Rat>> {
    let poles = proptest::collection::vec((-4i64..=4, 1usize..=3), 0..=3);
    (proptest::collection::vec(small_rat(), 1..=5), poles).prop_map(|(num, poles)| {
        let mut den = Poly::one();
        for (c, k) in poles {
            den = &den * &Poly::new(vec![rat(-c, 1), Rat::one()]).pow(k as u32);
        }
        RatFunc::new(Poly::new(num), den).expect("nonzero denominator")
    })
}

pub fn rad_poly(p: &Poly<Rat>) -> Poly<RadNum> {
    p.map(|c| RadNum::from(c.clone()))
}

pub fn rad(r: &RatFunc<Rat>) -> RatFunc<RadNum> {
    r.map(|c| RadNum::from(c.clone()))
}
