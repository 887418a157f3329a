//! Morales-Ramis verdicts for the Hamiltonian families of [`crate::nve`].
//!
//! Each verdict recomputes the hypotheses of the theorem on concrete sample
//! curves: the NVE must have an irregular singularity at infinity and the
//! identity component of its Galois group must be non-abelian. Only then is
//! the absence of an additional rational first integral concluded.

use std::fmt;

use serde::Serialize;

use crate::algebrize::{algebrize_and_solve, TrigExpExpr};
use crate::exactnum::{sqrt_rational, Field, GaussRat, RadNum, Rat};
use crate::kovacic::{polynomial_potential_group, GroupLabel};
use crate::nve::{lie_derivatives, qho_profile, EnergyProfile, Family, PlaneHamiltonian, YPoly};
use crate::ode::{classify_singularity, Lode2, Point, SingularityClass};
use crate::polyrat::{Poly, RatFunc};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisName {
    NveIrregularAtInfinity,
    IdentityComponentNonabelian,
    Genericity,
}

impl fmt::Display for HypothesisName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypothesisName::NveIrregularAtInfinity => "nve_irregular_at_infinity",
            HypothesisName::IdentityComponentNonabelian => "identity_component_nonabelian",
            HypothesisName::Genericity => "genericity",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not be carried out (e.g. an unsupported algebraic number).
    Unknown,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn and(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Unknown, _) | (_, Status::Unknown) => Status::Unknown,
            _ => Status::Pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: HypothesisName,
    pub status: Status,
    pub detail: String,
}

impl Hypothesis {
    pub fn new(name: HypothesisName, status: Status, detail: impl Into<String>) -> Self {
        Self { name, status, detail: detail.into() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    NoAdditionalRationalFirstIntegral,
    Inconclusive,
    DegenerateParameters,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::NoAdditionalRationalFirstIntegral => "no_additional_rational_first_integral",
            Conclusion::Inconclusive => "inconclusive",
            Conclusion::DegenerateParameters => "degenerate_parameters",
        })
    }
}

/// One integral curve on which the hypotheses were checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveSample {
    pub curve: String,
    /// `a(t)` of the NVE `ξ̈ = a(t)ξ`.
    pub nve: String,
    pub group: Option<GroupLabel>,
    pub irregular_at_infinity: Option<bool>,
    /// Liouvillian solvability of this particular NVE.
    pub picard_vessiot_integrable: Option<bool>,
    /// `E` with `a` brought to `τ² − E` (quadratic `a` only).
    pub e: Option<RadNum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonIntegrabilityVerdict {
    pub family: String,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Conclusion,
    pub citations: Vec<String>,
    pub samples: Vec<CurveSample>,
    pub energy_profile: Option<EnergyProfile>,
    /// `Some(true)` when `E` is the same for every curve of the family.
    pub degenerate_locus: Option<bool>,
    pub notes: Vec<String>,
}

/// Conclusion rule: every hypothesis must pass. A failed or unknown
/// theorem hypothesis makes the verdict inconclusive; with those passing, a
/// failed genericity condition reports degenerate parameters.
pub fn conclude(hypotheses: &[Hypothesis]) -> Conclusion {
    let theorem_ok = hypotheses
        .iter()
        .filter(|h| h.name != HypothesisName::Genericity)
        .all(|h| h.status == Status::Pass);
    let generic = hypotheses
        .iter()
        .filter(|h| h.name == HypothesisName::Genericity)
        .all(|h| h.status == Status::Pass);
    let complete = [HypothesisName::NveIrregularAtInfinity, HypothesisName::IdentityComponentNonabelian]
        .iter()
        .all(|n| hypotheses.iter().any(|h| h.name == *n));
    match (theorem_ok && complete, generic) {
        (true, true) => Conclusion::NoAdditionalRationalFirstIntegral,
        (true, false) => Conclusion::DegenerateParameters,
        (false, _) => Conclusion::Inconclusive,
    }
}

impl NonIntegrabilityVerdict {
    /// Builds a verdict whose conclusion is derived from `hypotheses`.
    pub fn from_hypotheses(family: impl Into<String>, hypotheses: Vec<Hypothesis>, citations: Vec<String>) -> Self {
        let conclusion = conclude(&hypotheses);
        Self {
            family: family.into(),
            hypotheses,
            conclusion,
            citations,
            samples: Vec::new(),
            energy_profile: None,
            degenerate_locus: None,
            notes: Vec::new(),
        }
    }

    pub fn hypothesis(&self, name: HypothesisName) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.name == name)
    }
}

const MORALES_RAMIS: &str =
    "Morales-Ramis theorem: a rational first integral independent of H forces an abelian identity component of the NVE Galois group";
const POLYNOMIAL_GROUPS: &str =
    "Galois groups of xi'' = P(t) xi for nonconstant polynomial P: Borel (C* semidirect C) or SL(2,C), both connected and non-abelian";
const IRREGULAR_POLY: &str = "nonconstant polynomial coefficient: infinity is an irregular singular point";
const ALGEBRIZATION: &str =
    "Hamiltonian change of variable x = exp(i*omega*t) preserves the identity component of the Galois group";

fn irregular_status(a: &RatFunc<RadNum>) -> (Status, Option<bool>) {
    let e = Lode2 { a: RatFunc::zero(), b: -a.clone() };
    match classify_singularity(&e, &Point::Infinity) {
        Ok(c) => {
            let irr = c == SingularityClass::IrregularSingular;
            (Status::of(irr), Some(irr))
        }
        Err(_) => (Status::Unknown, None),
    }
}

/// Group of `ξ̈ = p(t)ξ` for a polynomial `p`.
fn polynomial_group(p: &Poly<RadNum>) -> Option<(GroupLabel, bool)> {
    polynomial_potential_group(p).ok().map(|r| (r.group, r.liouvillian))
}

fn nonabelian_status(group: Option<&GroupLabel>) -> Status {
    match group {
        Some(g) => Status::of(!g.identity_component_abelian()),
        None => Status::Unknown,
    }
}

fn eval_ypoly(p: &YPoly<RatFunc<Rat>>, x0: &Rat, y0: &RadNum) -> Result<RadNum> {
    let mut total = RadNum::zero();
    let mut ypow = RadNum::one();
    for c in p.coeffs() {
        total = total + &RadNum::from(c.eval(x0)?) * &ypow;
        ypow = &ypow * y0;
    }
    Ok(total)
}

/// Taylor polynomial of `a(t)` along the curve through `(x₀, y₀)`, exact when
/// `X_hⁿα` vanishes identically.
pub fn polynomial_nve(h: &PlaneHamiltonian, n: usize, x0: &Rat, y0: &RadNum) -> Result<Poly<RadNum>> {
    let lie = lie_derivatives(&h.alpha, &h.phi, n);
    if !lie[n].is_zero() {
        return Err(Error::Precondition(format!("X_h^{n} alpha does not vanish")));
    }
    let mut coeffs = Vec::with_capacity(n);
    let mut fact = Rat::one();
    for (k, l) in lie[..n].iter().enumerate() {
        if k > 0 {
            fact = fact * Rat::from_integer((k as i64).into());
        }
        coeffs.push(eval_ypoly(l, x0, y0)?.try_div(&RadNum::from(fact.clone()))?);
    }
    Ok(Poly::new(coeffs))
}

/// Potential `Q(x₁)x₂² + β(x₁,x₂)x₂³` with `Q` a nonconstant polynomial.
pub fn verdict_polynomial(q: &Poly<Rat>) -> Result<NonIntegrabilityVerdict> {
    if q.degree().unwrap_or(0) < 1 {
        return Err(Error::Precondition("Q must be nonconstant".into()));
    }
    let h = PlaneHamiltonian::polynomial_potential(q.clone())?;
    let n = q.degree().unwrap() + 1;
    // φ = 0: the curves are x₁ = x₀ + y₀t; take x₀ = 0, y₀ = 1.
    let a = polynomial_nve(&h, n, &Rat::zero(), &RadNum::one())?;
    let (irr, irr_flag) = irregular_status(&RatFunc::from_poly(a.clone()));
    let group = polynomial_group(&a);
    let nonab = nonabelian_status(group.as_ref().map(|g| &g.0));
    let hypotheses = vec![
        Hypothesis::new(HypothesisName::NveIrregularAtInfinity, irr, format!("a(t) = {}", a.display_in("t"))),
        Hypothesis::new(
            HypothesisName::IdentityComponentNonabelian,
            nonab,
            group.as_ref().map_or("group not computed".to_string(), |g| format!("group {}", g.0)),
        ),
        Hypothesis::new(HypothesisName::Genericity, Status::Pass, "Q nonconstant"),
    ];
    let mut v = NonIntegrabilityVerdict::from_hypotheses(
        h.family.tag(),
        hypotheses,
        vec![MORALES_RAMIS.into(), POLYNOMIAL_GROUPS.into(), IRREGULAR_POLY.into()],
    );
    v.samples.push(CurveSample {
        curve: "x1 = t, y1 = 1".into(),
        nve: a.display_in("t").to_string(),
        group: group.as_ref().map(|g| g.0.clone()),
        irregular_at_infinity: irr_flag,
        picard_vessiot_integrable: group.as_ref().map(|g| g.1),
        e: None,
    });
    v.notes.push("potential read as Q(x1)*x2^2 + beta(x1,x2)*x2^3".into());
    v.notes.push(
        "every polynomial potential with invariant plane x2 = y2 = 0 admitting an additional rational first integral has the form V = Q1(x1,x2)*x2^3 + lambda1*x2^2 + lambda0".into(),
    );
    Ok(v)
}

/// `(c₁² − 4c₀c₂)/(4√c₂³)` for `a = c₀ + c₁t + c₂t²`.
fn reduced_energy(a: &Poly<RadNum>) -> Result<RadNum> {
    let (c0, c1, c2) = (a.coeff(0), a.coeff(1), a.coeff(2));
    let c2g = c2.as_gauss().and_then(|g| g.as_rat()).ok_or_else(|| Error::UnsupportedAlgebraicDegree(c2.to_string()))?;
    let den = &RadNum::from(4i64) * &sqrt_rational(&(&c2g * &c2g * &c2g));
    (&c1 * &c1 - &(&RadNum::from(4i64) * &c0) * &c2).try_div(&den)
}

fn is_odd_integer(e: &RadNum) -> bool {
    e.as_gauss()
        .and_then(|g| g.as_rat())
        .is_some_and(|q| q.is_integer() && q.numer() % 2 != 0.into())
}

/// Sample energies used for energy-parameterized families.
pub const SAMPLE_ENERGIES: [i64; 3] = [1, 2, 3];

/// Quantum-harmonic-oscillator family, parameters `λ₀…λ₄` with `λ₃ ≠ 0`.
pub fn verdict_qho(lambda: [Rat; 5]) -> Result<NonIntegrabilityVerdict> {
    let h = PlaneHamiltonian::qho(lambda.clone())?;
    let [l0, _, l2, _, _] = &lambda;
    // base point where φ is regular
    let x0 = if l2.is_zero() { Rat::one() } else { Rat::zero() };
    let phi0 = h.phi.eval(&x0)? - l0.clone();
    let mut samples = Vec::new();
    let mut irr_all = Status::Pass;
    let mut nonab_all = Status::Pass;
    let mut mismatch = Vec::new();
    for e in SAMPLE_ENERGIES {
        let energy = Rat::from_integer(e.into());
        let y0 = sqrt_rational(&((&energy - &phi0) * Rat::from_integer(2.into())));
        let a = polynomial_nve(&h, 3, &x0, &y0)?;
        let (irr, irr_flag) = irregular_status(&RatFunc::from_poly(a.clone()));
        let group = polynomial_group(&a);
        irr_all = irr_all.and(irr);
        nonab_all = nonab_all.and(nonabelian_status(group.as_ref().map(|g| &g.0)));
        let e_val = reduced_energy(&a).ok();
        let by_e = e_val.as_ref().map(is_odd_integer);
        let by_kovacic = group.as_ref().map(|g| g.1);
        if let (Some(x), Some(y)) = (by_e, by_kovacic) {
            if x != y {
                mismatch.push(format!("h = {energy}"));
            }
        }
        samples.push(CurveSample {
            curve: format!("h = {energy}, x1(0) = {x0}"),
            nve: a.display_in("t").to_string(),
            group: group.map(|g| g.0),
            irregular_at_infinity: irr_flag,
            picard_vessiot_integrable: by_kovacic.or(by_e),
            e: e_val,
        });
    }
    let profile = qho_profile(&lambda)?;
    let degenerate = profile.is_constant();
    let hypotheses = vec![
        Hypothesis::new(HypothesisName::NveIrregularAtInfinity, irr_all, "checked on every sampled energy"),
        Hypothesis::new(HypothesisName::IdentityComponentNonabelian, nonab_all, "checked on every sampled energy"),
        Hypothesis::new(HypothesisName::Genericity, Status::Pass, "lambda3 != 0"),
    ];
    let mut v = NonIntegrabilityVerdict::from_hypotheses(
        h.family.tag(),
        hypotheses,
        vec![MORALES_RAMIS.into(), POLYNOMIAL_GROUPS.into(), IRREGULAR_POLY.into()],
    );
    v.samples = samples;
    v.energy_profile = Some(profile);
    v.degenerate_locus = Some(degenerate);
    if degenerate {
        v.notes.push("lambda4 = 0 and lambda2^2 = 4*lambda1*lambda3: E is the same for every curve".into());
    } else {
        v.notes.push("E is a non-constant function of the energy: generic NVEs are not Picard-Vessiot integrable".into());
    }
    v.notes.push("a curve's NVE is Picard-Vessiot integrable iff its E is an odd integer".into());
    if !mismatch.is_empty() {
        v.notes.push(format!("E test and Kovacic disagree at {}", mismatch.join(", ")));
    }
    Ok(v)
}

fn g(q: &Rat) -> GaussRat {
    GaussRat::from(q.clone())
}

fn trig_const(q: &Rat) -> TrigExpExpr {
    TrigExpExpr::constant(g(q))
}

/// `(label, x₁(t) or (λ₁+2λ₂x₁)², a(t))` for sample curves; each curve is
/// checked against the equations of motion before use.
fn mathieu_curves(h: &PlaneHamiltonian) -> Result<Vec<(String, TrigExpExpr)>> {
    let two = Rat::from_integer(2.into());
    let mut out = Vec::new();
    match &h.family {
        Family::MathieuFlat { mu0: _, mu1, omega, lambda0, lambda1 } => {
            let w2 = omega * omega;
            for amp in [1i64, 2] {
                let amp = Rat::from_integer(amp.into());
                let x1 = &trig_const(&(-(mu1 / &w2))) + &TrigExpExpr::cos(g(omega)).scale(&g(&amp));
                // ẍ₁ = −φ'(x₁) = −μ₁ − ω²x₁
                let lhs = &(&x1.derivative().derivative() + &trig_const(mu1)) + &x1.scale(&g(&w2));
                assert!(lhs.is_zero(), "flat Mathieu sample curve");
                let a = &trig_const(&(&two * lambda0)) + &x1.scale(&g(&(&two * lambda1)));
                out.push((format!("x1(t) = {x1}"), a));
            }
        }
        Family::MathieuCurved { mu1, omega, lambda0, lambda1, lambda2, .. } => {
            let w2 = omega * omega;
            let k = Rat::from_integer(32.into()) * lambda2 * lambda2 * mu1 / &w2;
            for d in [1i64, 2, 3] {
                let d = Rat::from_integer(d.into());
                let p = (&d + &k / &d) / &two;
                let q = (&k / &d - &d) / &two;
                if Field::is_zero(&q) {
                    continue;
                }
                // s = (λ₁+2λ₂x₁)² satisfies s·s̈ − ṡ²/2 + ω²s²/2 = 16λ₂²μ₁
                let s = &trig_const(&p) + &TrigExpExpr::cos(g(omega)).scale(&g(&q));
                let sd = s.derivative();
                let pinney = &(&(&s * &sd.derivative()) - &(&sd * &sd).scale(&g(&(Rat::one() / &two))))
                    + &(&s * &s).scale(&g(&(&w2 / &two)));
                let rhs = trig_const(&(Rat::from_integer(16.into()) * lambda2 * lambda2 * mu1));
                assert_eq!(pinney, rhs, "curved Mathieu sample curve");
                // a = 2λ₀ + 2λ₁x₁ + 2λ₂x₁² = 2λ₀ − λ₁²/(2λ₂) + s/(2λ₂)
                let c0 = &two * lambda0 - lambda1 * lambda1 / (&two * lambda2);
                let a = &trig_const(&c0) + &s.scale(&g(&(Rat::one() / (&two * lambda2))));
                out.push((format!("(lambda1+2*lambda2*x1(t))^2 = {s}"), a));
                if out.len() == 2 {
                    break;
                }
            }
        }
        _ => return Err(Error::Precondition("verdict_mathieu needs a Mathieu family".into())),
    }
    Ok(out)
}

/// Flat or curved Mathieu family.
pub fn verdict_mathieu(h: &PlaneHamiltonian) -> Result<NonIntegrabilityVerdict> {
    let (generic, generic_text) = match &h.family {
        Family::MathieuFlat { lambda1, .. } => (!Field::is_zero(lambda1), "lambda1 != 0"),
        Family::MathieuCurved { lambda1, lambda2, .. } => {
            (!(Field::is_zero(lambda1) && Field::is_zero(lambda2)), "(lambda1, lambda2) != (0, 0)")
        }
        _ => return Err(Error::Precondition("verdict_mathieu needs a Mathieu family".into())),
    };
    let mut samples = Vec::new();
    let mut irr_all = Status::Pass;
    let mut nonab_all = Status::Pass;
    for (label, a) in mathieu_curves(h)? {
        let rep = algebrize_and_solve(&a)?;
        let irr = rep.infinity == SingularityClass::IrregularSingular;
        irr_all = irr_all.and(Status::of(irr));
        nonab_all = nonab_all.and(Status::of(!rep.identity_component_abelian));
        samples.push(CurveSample {
            curve: label,
            nve: a.to_string(),
            group: Some(rep.kovacic.group.clone()),
            irregular_at_infinity: Some(irr),
            picard_vessiot_integrable: Some(rep.kovacic.liouvillian),
            e: None,
        });
    }
    let hypotheses = vec![
        Hypothesis::new(
            HypothesisName::NveIrregularAtInfinity,
            irr_all,
            "infinity of the algebraic form, checked on every sample curve",
        ),
        Hypothesis::new(HypothesisName::IdentityComponentNonabelian, nonab_all, "checked on every sample curve"),
        Hypothesis::new(HypothesisName::Genericity, Status::of(generic), generic_text),
    ];
    let mut v =
        NonIntegrabilityVerdict::from_hypotheses(h.family.tag(), hypotheses, vec![MORALES_RAMIS.into(), ALGEBRIZATION.into()]);
    v.samples = samples;
    v.notes.push("coefficient field C(exp(i*omega*t))".into());
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn polynomial_examples() {
        for q in [Poly::from_ints(&[0, 1]), Poly::from_ints(&[3, 0, 1]), Poly::from_ints(&[1, -2, 0, 5])] {
            let v = verdict_polynomial(&q).unwrap();
            assert_eq!(v.conclusion, Conclusion::NoAdditionalRationalFirstIntegral, "{q}");
        }
        assert!(verdict_polynomial(&Poly::from_ints(&[4])).is_err());
    }

    #[test]
    fn qho_examples() {
        let v = verdict_qho([int(1), int(2), int(3), int(5), int(7)]).unwrap();
        assert_eq!(v.conclusion, Conclusion::NoAdditionalRationalFirstIntegral);
        assert_eq!(v.degenerate_locus, Some(false));
        assert_eq!(v.samples.len(), 3);
        let v = verdict_qho([int(0), int(1), int(2), int(1), int(0)]).unwrap();
        assert_eq!(v.degenerate_locus, Some(true));
        for s in &v.samples {
            assert!(s.e.as_ref().unwrap().is_zero());
            assert_eq!(s.picard_vessiot_integrable, Some(false));
        }
        assert!(matches!(verdict_qho([int(1), int(1), int(1), int(0), int(1)]), Err(Error::GenericityViolation(_))));
        // actual α is four times the normalization behind qho_curve, so E doubles
        let lambda = [int(1), int(2), int(3), int(5), int(7)];
        let v = verdict_qho(lambda.clone()).unwrap();
        let h = PlaneHamiltonian::qho(lambda).unwrap();
        for (s, e) in v.samples.iter().zip(SAMPLE_ENERGIES) {
            let cv = crate::nve::qho_curve(&h, &int(e)).unwrap();
            assert_eq!(s.e.clone().unwrap(), &cv.e_corrected * &RadNum::from(2i64));
        }
        assert!(v.notes.iter().all(|n| !n.contains("disagree")));
        // E = 1 on the h = 1 curve only
        let v = verdict_qho([int(0), int(0), int(2), int(1), int(0)]).unwrap();
        let pv: Vec<_> = v.samples.iter().map(|s| s.picard_vessiot_integrable).collect();
        assert_eq!(pv, vec![Some(true), Some(false), Some(false)]);
        assert_eq!(v.samples[0].e, Some(RadNum::one()));
        assert!(v.notes.iter().all(|n| !n.contains("disagree")), "{:?}", v.notes);
    }

    #[test]
    fn mathieu_examples() {
        let flat = PlaneHamiltonian::mathieu_flat(int(0), int(1), int(2), int(1), int(3)).unwrap();
        assert_eq!(verdict_mathieu(&flat).unwrap().conclusion, Conclusion::NoAdditionalRationalFirstIntegral);
        let flat0 = PlaneHamiltonian::mathieu_flat(int(0), int(1), int(2), int(1), int(0)).unwrap();
        assert_eq!(verdict_mathieu(&flat0).unwrap().conclusion, Conclusion::Inconclusive);
        let curved = PlaneHamiltonian::mathieu_curved(int(0), int(1), int(1), int(1), int(2), rat(1, 2)).unwrap();
        let v = verdict_mathieu(&curved).unwrap();
        assert_eq!(v.conclusion, Conclusion::NoAdditionalRationalFirstIntegral);
        assert_eq!(v.samples.len(), 2);
    }

    #[test]
    fn conclusion_rule() {
        use HypothesisName::*;
        let all = |s: [Status; 3]| {
            vec![
                Hypothesis::new(NveIrregularAtInfinity, s[0], ""),
                Hypothesis::new(IdentityComponentNonabelian, s[1], ""),
                Hypothesis::new(Genericity, s[2], ""),
            ]
        };
        assert_eq!(conclude(&all([Status::Pass; 3])), Conclusion::NoAdditionalRationalFirstIntegral);
        assert_eq!(conclude(&all([Status::Pass, Status::Fail, Status::Pass])), Conclusion::Inconclusive);
        assert_eq!(conclude(&all([Status::Unknown, Status::Pass, Status::Pass])), Conclusion::Inconclusive);
        assert_eq!(conclude(&all([Status::Pass, Status::Pass, Status::Fail])), Conclusion::DegenerateParameters);
        assert_eq!(conclude(&all([Status::Pass; 3])[..2]), Conclusion::NoAdditionalRationalFirstIntegral);
        assert_eq!(conclude(&all([Status::Pass; 3])[1..]), Conclusion::Inconclusive);
    }
}
