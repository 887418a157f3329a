//! Kovacic's algorithm for `ξ'' = rξ`, Galois group labels, and the
//! completing-squares route for polynomial potentials.

mod case1;
mod case2;
mod case3;
mod group;
mod solution;
mod squares;

use std::fmt;

use serde::{Serialize, Serializer};

pub use case1::{case1, Case1Data, Case1Point, Case1Witness, SignedCandidate};
pub use case2::{case2, Case2Data, Case2Witness, ECandidate, PointESet};
pub use case3::{case3, Case3Attempt, Case3Data, Case3Witness};
pub use group::classify_case1_group;
pub use solution::{omega_polynomial_text, second_solution, Hyperexponential, SecondSolution, Solution};
pub use squares::{complete_squares, polynomial_potential_group};

use crate::exactnum::RadNum;
use crate::ode::Rlde;
use crate::polyrat::{poles, solve_affine, Pole, Poly, RatFunc};
use crate::{Error, Result};

/// Algebraic subgroups of `SL(2, C)` reported by the algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupLabel {
    IdentityE,
    FiniteBorelGk(u64),
    TorusCstar,
    AdditiveCplus,
    BorelCstarSemidirectCplus,
    InfiniteDihedralCase2,
    Tetrahedral,
    Octahedral,
    Icosahedral,
    SL2,
}

impl GroupLabel {
    pub fn identity_component_abelian(self) -> bool {
        !matches!(self, GroupLabel::BorelCstarSemidirectCplus | GroupLabel::SL2)
    }

    pub fn is_connected(self) -> bool {
        matches!(
            self,
            GroupLabel::IdentityE
                | GroupLabel::TorusCstar
                | GroupLabel::AdditiveCplus
                | GroupLabel::BorelCstarSemidirectCplus
                | GroupLabel::SL2
        )
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::IdentityE => write!(f, "Identity_e"),
            GroupLabel::FiniteBorelGk(k) => write!(f, "FiniteBorel_Gk({k})"),
            GroupLabel::TorusCstar => write!(f, "Torus_Cstar"),
            GroupLabel::AdditiveCplus => write!(f, "Additive_Cplus"),
            GroupLabel::BorelCstarSemidirectCplus => write!(f, "Borel_CstarSemidirectCplus"),
            GroupLabel::InfiniteDihedralCase2 => write!(f, "InfiniteDihedralCase2"),
            GroupLabel::Tetrahedral => write!(f, "Tetrahedral"),
            GroupLabel::Octahedral => write!(f, "Octahedral"),
            GroupLabel::Icosahedral => write!(f, "Icosahedral"),
            GroupLabel::SL2 => write!(f, "SL2"),
        }
    }
}

impl Serialize for GroupLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The logarithmic derivative found by the algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Omega {
    Rational { omega: RatFunc<RadNum> },
    /// A root of `Σ coefficients[i]·ω^i` (ascending powers).
    AlgebraicRoot { degree: usize, coefficients: Vec<RatFunc<RadNum>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KovacicReport {
    pub r: RatFunc<RadNum>,
    pub case: u8,
    pub liouvillian: bool,
    pub group: GroupLabel,
    pub group_identity_component_abelian: bool,
    pub m: Option<u64>,
    pub omega: Option<Omega>,
    pub p_m: Option<Poly<RadNum>>,
    pub solutions: Vec<Solution>,
    pub case1: Option<Case1Data>,
    pub case2: Option<Case2Data>,
    pub case3: Option<Case3Data>,
    pub notes: Vec<String>,
}

impl KovacicReport {
    fn new(r: RatFunc<RadNum>, case: u8, group: GroupLabel) -> Self {
        Self {
            r,
            case,
            liouvillian: case != 4,
            group,
            group_identity_component_abelian: group.identity_component_abelian(),
            m: None,
            omega: None,
            p_m: None,
            solutions: Vec::new(),
            case1: None,
            case2: None,
            case3: None,
            notes: Vec::new(),
        }
    }
}

/// Poles and order at infinity of `r`, computed once per run.
#[derive(Clone, Debug)]
pub(crate) struct LocalData {
    pub r: RatFunc<RadNum>,
    pub poles: Vec<Pole>,
    /// `None` for `r = 0`.
    pub order_inf: Option<i64>,
}

impl LocalData {
    pub fn new(r: &RatFunc<RadNum>) -> Result<Self> {
        Ok(Self { r: r.clone(), poles: poles(r)?, order_inf: r.order_at_infinity() })
    }
}

/// Monic polynomials `P` of degree `m` with `op(P) = 0`, for a linear `op`:
/// one solution together with a basis of differences (polynomials of degree
/// `< m`) spanning all others.
pub(crate) fn solve_monic(
    m: usize,
    op: impl Fn(&Poly<RadNum>) -> RatFunc<RadNum>,
) -> Option<(Poly<RadNum>, Vec<Poly<RadNum>>)> {
    let images: Vec<RatFunc<RadNum>> = (0..=m).map(|j| op(&Poly::monomial(RadNum::one(), j))).collect();
    let mut den = Poly::one();
    for im in &images {
        let g = den.gcd(im.den());
        den = &den * &im.den().exact_div(&g);
    }
    let nums: Vec<Poly<RadNum>> =
        images.iter().map(|im| &im.num().clone() * &den.exact_div(im.den())).collect();
    let rows = nums.iter().map(|n| n.coeffs().len()).max().unwrap_or(0);
    let a: Vec<Vec<RadNum>> = (0..rows).map(|d| (0..m).map(|j| nums[j].coeff(d)).collect()).collect();
    let b: Vec<RadNum> = (0..rows).map(|d| -nums[m].coeff(d)).collect();
    let (x, kernel) = solve_affine(&a, &b, m)?;
    let mut coeffs = x;
    coeffs.push(RadNum::one());
    let kernel = kernel.into_iter().map(Poly::new).collect();
    Some((Poly::new(coeffs), kernel))
}

/// Whether the ideal generated by `F(ω) = Σ coeffs[i] ω^i` is stable under the
/// Riccati derivation `ω' = r − ω²`, i.e. every root of `F` is a solution of
/// the Riccati equation once `F` is irreducible.
pub fn riccati_invariant(coeffs: &[RatFunc<RadNum>], r: &RatFunc<RadNum>) -> bool {
    let Some(n) = coeffs.iter().rposition(|c| !c.is_zero()) else {
        return false;
    };
    let lead = coeffs[n].clone();
    let f: Vec<RatFunc<RadNum>> = coeffs[..=n].iter().map(|c| c.try_div(&lead).expect("nonzero")).collect();
    // D(F) = Σ f_i' ω^i + Σ i f_i ω^(i-1) (r − ω²)
    let mut d = vec![RatFunc::zero(); n + 2];
    for (i, fi) in f.iter().enumerate() {
        d[i] = &d[i] + &fi.derivative();
        if i > 0 {
            let k = RadNum::from(i as i64);
            let t = fi.scale(&k);
            d[i - 1] = &d[i - 1] + &(&t * r);
            d[i + 1] = &d[i + 1] - &t;
        }
    }
    // reduce modulo the monic F
    for top in (n..=n + 1).rev() {
        let c = d[top].clone();
        if c.is_zero() {
            continue;
        }
        for (i, fi) in f.iter().enumerate() {
            let j = top - n + i;
            d[j] = &d[j] - &(&c * fi);
        }
    }
    d.iter().all(|c| c.is_zero())
}

/// Run the algorithm on `ξ'' = rξ`.
pub fn kovacic(e: &Rlde) -> Result<KovacicReport> {
    kovacic_inner(e).map_err(|err| match err {
        Error::NonSquareLeading(s) => Error::UnsupportedAlgebraicDegree(s),
        other => other,
    })
}

fn kovacic_inner(e: &Rlde) -> Result<KovacicReport> {
    let r = &e.r;
    if r.is_zero() {
        let mut rep = KovacicReport::new(r.clone(), 1, GroupLabel::IdentityE);
        rep.m = Some(0);
        rep.omega = Some(Omega::Rational { omega: RatFunc::zero() });
        rep.p_m = Some(Poly::one());
        rep.solutions = vec![
            Solution::Hyperexponential { value: Hyperexponential::rational(RatFunc::one()) },
            Solution::Hyperexponential { value: Hyperexponential::rational(RatFunc::x()) },
        ];
        rep.notes.push("r = 0: solutions 1 and x".into());
        return Ok(rep);
    }
    let ld = LocalData::new(r)?;
    let c1 = case1::run(&ld)?;
    if let Some(first) = c1.witnesses.first().cloned() {
        let xis = c1
            .witnesses
            .iter()
            .map(|w| Hyperexponential::from_omega(&w.p, &w.omega))
            .collect::<Result<Vec<_>>>()?;
        let group = group::classify_solutions(&xis)?;
        let mut rep = KovacicReport::new(r.clone(), 1, group);
        rep.m = Some(first.m);
        rep.omega = Some(Omega::Rational { omega: first.omega.clone() });
        rep.p_m = Some(first.p.clone());
        rep.solutions.push(Solution::Hyperexponential { value: xis[0].clone() });
        if xis.len() > 1 {
            rep.solutions.push(Solution::Hyperexponential { value: xis[1].clone() });
        } else {
            rep.solutions.push(Solution::Quadrature { value: second_solution(&xis[0])? });
        }
        rep.case1 = Some(c1);
        return Ok(rep);
    }
    let c2 = case2::run(&ld)?;
    if let Some(w) = c2.witness.clone() {
        let mut rep = KovacicReport::new(r.clone(), 2, GroupLabel::InfiniteDihedralCase2);
        rep.m = Some(w.m);
        rep.p_m = Some(w.p.clone());
        rep.omega = Some(Omega::AlgebraicRoot { degree: 2, coefficients: w.omega_quadratic.clone() });
        rep.solutions.push(Solution::RiccatiRoot {
            expr: format!("exp(integral(omega, x)) where {}", solution::omega_polynomial_text(&w.omega_quadratic)),
            coefficients: w.omega_quadratic.clone(),
            distinct_roots: w.distinct_roots,
        });
        rep.case1 = Some(c1);
        rep.case2 = Some(c2);
        return Ok(rep);
    }
    let c3 = case3::run(&ld)?;
    if let Some(w) = c3.witness.clone() {
        let group = match w.n {
            4 => GroupLabel::Tetrahedral,
            6 => GroupLabel::Octahedral,
            _ => GroupLabel::Icosahedral,
        };
        let mut rep = KovacicReport::new(r.clone(), 3, group);
        rep.m = Some(w.m);
        rep.p_m = Some(w.p.clone());
        rep.omega = Some(Omega::AlgebraicRoot { degree: w.n as usize, coefficients: w.omega_polynomial.clone() });
        rep.solutions.push(Solution::RiccatiRoot {
            expr: format!(
                "exp(integral(omega, x)) where {}",
                solution::omega_polynomial_text(&w.omega_polynomial)
            ),
            coefficients: w.omega_polynomial.clone(),
            distinct_roots: w.n as usize,
        });
        rep.case1 = Some(c1);
        rep.case2 = Some(c2);
        rep.case3 = Some(c3);
        return Ok(rep);
    }
    let mut rep = KovacicReport::new(r.clone(), 4, GroupLabel::SL2);
    rep.notes.push("no Liouvillian solutions".into());
    rep.case1 = Some(c1);
    rep.case2 = Some(c2);
    rep.case3 = Some(c3);
    Ok(rep)
}

/// `√(1 + 4b)`, or `None` when it is not representable.
pub(crate) fn sqrt_one_plus_4b(b: &RadNum) -> Option<RadNum> {
    (RadNum::one() + b.clone() * RadNum::from(4i64)).sqrt().ok()
}

/// Sign tuple text, `+`/`-` per point with infinity first.
pub(crate) fn sign_text(signs: &[bool]) -> String {
    signs.iter().map(|&s| if s { '+' } else { '-' }).collect()
}
