mod common;

use common::{monic_of_degree, nonconstant_poly, rad, rad_poly, small_rat};
use liouville::exactnum::{int, rat, Rat};
use liouville::kovacic::{complete_squares, kovacic, polynomial_potential_group, riccati_invariant, GroupLabel, KovacicReport, Omega, Solution};
use liouville::ode::Rlde;
use liouville::{Field, Poly, RadNum, RatFunc};
use proptest::prelude::*;

fn x_minus(c: i64) -> Poly<Rat> {
    Poly::new(vec![int(-c), Rat::one()])
}

fn rf(num: Poly<Rat>, den: Poly<Rat>) -> RatFunc<Rat> {
    RatFunc::new(num, den).unwrap()
}

fn run(r: &RatFunc<Rat>) -> KovacicReport {
    kovacic(&Rlde::new(rad(r))).unwrap()
}

/// `r = ω' + ω²` for `ω = A + k/(x − c)`, which always has a hyperexponential solution.
fn riccati_image() -> impl Strategy<Value = RatFunc<Rat>> {
    (proptest::collection::vec(small_rat(), 1..=3), -2i64..=2, -2i64..=2).prop_map(|(mut a, k, c)| {
        a.push(Rat::one());
        let omega = &RatFunc::from_poly(Poly::new(a)) + &rf(Poly::constant(int(k)), x_minus(c));
        &omega.derivative() + &(&omega * &omega)
    })
}

fn check_hyperexponential_solutions(rep: &KovacicReport) -> Result<(), TestCaseError> {
    for s in &rep.solutions {
        if let Solution::Hyperexponential { value } = s {
            let w = value.log_derivative();
            prop_assert_eq!(&(&w.derivative() + &(&w * &w)), &rep.r, "w = {}", w);
        }
    }
    Ok(())
}

fn check_case1_candidates(rep: &KovacicReport) -> Result<(), TestCaseError> {
    let Some(data) = &rep.case1 else { return Ok(()) };
    let Some((inf, finite)) = data.points.split_last() else { return Ok(()) };
    for cand in &data.d {
        let signs: Vec<bool> = cand.signs.chars().map(|c| c == '+').collect();
        let pick = |p: &liouville::kovacic::Case1Point, s: bool| if s { p.alpha_plus.clone() } else { p.alpha_minus.clone() };
        let mut m = pick(inf, signs[0]);
        for (p, &s) in finite.iter().zip(&signs[1..]) {
            m = m - pick(p, s);
        }
        prop_assert_eq!(m, RadNum::from(cand.m as i64));
    }
    Ok(())
}

fn check_case2_candidates(rep: &KovacicReport) -> Result<(), TestCaseError> {
    let Some(data) = &rep.case2 else { return Ok(()) };
    let (inf, finite) = data.e_sets.split_last().unwrap();
    for cand in &data.d {
        prop_assert!(inf.e.contains(&cand.family[0]));
        for (set, e) in finite.iter().zip(&cand.family[1..]) {
            prop_assert!(set.e.contains(e));
        }
        let twice = cand.family[0] - cand.family[1..].iter().sum::<i64>();
        prop_assert_eq!(twice, 2 * cand.m as i64);
    }
    if let Some(w) = &data.witness {
        let phi = &w.phi;
        let two_r = rep.r.scale(&RadNum::from(2i64));
        let c0 = (&(&phi.derivative() + &(phi * phi)) - &two_r).scale(&RadNum::from(rat(1, 2)));
        prop_assert_eq!(&w.omega_quadratic[0], &c0);
        prop_assert_eq!(&w.omega_quadratic[1], &-phi);
        let c1 = &w.omega_quadratic[1];
        let disc = &(c1 * c1) - &w.omega_quadratic[0].scale(&RadNum::from(4i64));
        prop_assert_eq!(&disc, &w.discriminant);
        prop_assert!(riccati_invariant(&w.omega_quadratic, &rep.r));
    }
    Ok(())
}

#[test]
fn case1_corpus_solutions_verify() {
    let x2 = || Poly::monomial(Rat::one(), 2);
    let corpus: Vec<RatFunc<Rat>> = vec![
        RatFunc::zero(),
        RatFunc::from_poly(Poly::new(vec![int(1), Rat::zero(), Rat::one()])),
        RatFunc::from_poly(Poly::new(vec![int(3), Rat::zero(), Rat::one()])),
        RatFunc::from_poly(Poly::new(vec![int(5), Rat::zero(), Rat::one()])),
        RatFunc::from_poly(Poly::new(vec![int(-1), Rat::zero(), Rat::one()])),
        rf(Poly::constant(int(2)), x2()),
        rf(Poly::constant(rat(-1, 4)), x2()),
        rf(Poly::constant(int(6)), x2()),
        RatFunc::from_poly(Poly::constant(int(4))),
        &RatFunc::from_poly(Poly::new(vec![int(5), Rat::zero(), Rat::one()])) + &rf(Poly::constant(int(2)), x2()),
    ];
    for r in &corpus {
        let rep = run(r);
        assert_eq!(rep.case, 1, "r = {r}");
        check_hyperexponential_solutions(&rep).unwrap();
        check_case1_candidates(&rep).unwrap();
    }
}

#[test]
fn case2_dihedral_witness_verifies() {
    let x2 = Poly::monomial(Rat::one(), 2);
    let r = &rf(Poly::one(), Poly::x()) + &rf(Poly::constant(rat(-3, 16)), x2);
    let rep = run(&r);
    assert_eq!(rep.case, 2);
    assert_eq!(rep.group, GroupLabel::InfiniteDihedralCase2);
    check_case2_candidates(&rep).unwrap();
    assert!(rep.case2.unwrap().witness.is_some());
}

#[test]
fn case3_witness_is_riccati_invariant() {
    let x2 = Poly::monomial(Rat::one(), 2);
    let xm1 = x_minus(1);
    let r = &(&rf(Poly::constant(rat(-3, 16)), x2) + &rf(Poly::constant(rat(-2, 9)), xm1.pow(2)))
        + &rf(Poly::constant(rat(3, 16)), &Poly::x() * &xm1);
    let rep = run(&r);
    assert_eq!(rep.case, 3);
    let Some(Omega::AlgebraicRoot { coefficients, .. }) = &rep.omega else { panic!("no ω-polynomial") };
    assert!(riccati_invariant(coefficients, &rep.r));
}

#[test]
fn abelian_identity_component_flags() {
    use GroupLabel::*;
    for g in [IdentityE, FiniteBorelGk(3), TorusCstar, AdditiveCplus, InfiniteDihedralCase2, Tetrahedral, Octahedral, Icosahedral] {
        assert!(g.identity_component_abelian(), "{g}");
    }
    for g in [BorelCstarSemidirectCplus, SL2] {
        assert!(!g.identity_component_abelian(), "{g}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn riccati_images_have_verified_solutions(r in riccati_image()) {
        let rep = run(&r);
        prop_assert!(rep.liouvillian);
        prop_assert_eq!(rep.case, 1);
        let found = rep.solutions.iter().any(|s| matches!(s, Solution::Hyperexponential { .. }));
        prop_assert!(found);
        check_hyperexponential_solutions(&rep)?;
        check_case1_candidates(&rep)?;
    }

    #[test]
    fn candidate_sets_replay(num in proptest::collection::vec(small_rat(), 1..=3), c in -2i64..=2, k in 1u32..=2) {
        let r = rf(Poly::new(num), x_minus(c).pow(k));
        match kovacic(&Rlde::new(rad(&r))) {
            Ok(rep) => {
                check_hyperexponential_solutions(&rep)?;
                check_case1_candidates(&rep)?;
                check_case2_candidates(&rep)?;
            }
            Err(liouville::Error::UnsupportedAlgebraicDegree(_)) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }
}

/// Half plain random polynomials, half `A² ± A' + c` which are often integrable.
fn potential() -> impl Strategy<Value = Poly<Rat>> {
    let constructed = ((1usize..=3).prop_flat_map(monic_of_degree), any::<bool>(), -2i64..=2)
        .prop_map(|(a, plus, c)| {
            let da = a.derivative();
            let sq = &a * &a;
            let q = if plus { &sq + &da } else { &sq - &da };
            &q + &Poly::constant(int(c))
        });
    prop_oneof![nonconstant_poly(6), constructed]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn completing_squares_route_agrees_with_kovacic(q in potential()) {
        let qr = rad_poly(&q);
        let fast = polynomial_potential_group(&qr).unwrap();
        let full = kovacic(&Rlde::new(RatFunc::from_poly(qr))).unwrap();
        prop_assert_eq!(fast.group, full.group, "Q = {}", q);
        prop_assert_eq!(fast.liouvillian, full.liouvillian);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn completing_squares_roundtrip(q in (1usize..=5).prop_flat_map(|n| monic_of_degree(2 * n))) {
        let (a, b) = complete_squares(&q).unwrap();
        let n = q.degree().unwrap() / 2;
        prop_assert!(a.is_monic());
        prop_assert_eq!(a.degree(), Some(n));
        prop_assert!(b.degree().map_or(true, |d| d < n));
        prop_assert_eq!(&(&a * &a) + &b, q);
    }
}
