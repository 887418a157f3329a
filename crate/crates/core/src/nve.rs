//! Normal variational equations along the invariant plane `x₂ = y₂ = 0` of
//! `H = (y₁² + y₂²)/2 + φ(x₁) − α(x₁)x₂²/2 + O(x₂³)`.
//!
//! Along a curve of the restricted flow `h = y₁²/2 + φ(x₁)` the NVE is
//! `ξ̈ = a(t)ξ` with `a = α(x₁(t))`, and `dᵏa/dtᵏ` is the pullback of
//! `X_hᵏα` where `X_h = y₁∂/∂x₁ − φ'∂/∂y₁`.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::exactnum::{sqrt_rational, Field, RadNum, Rat};
use crate::polyrat::{Poly, RatFunc};
use crate::{Error, Result};

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// A jet coordinate: `φ⁽ʲ⁾` or `α⁽ʲ⁾` (derivatives in `x₁`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JetVar {
    Phi(u32),
    Alpha(u32),
}

impl JetVar {
    pub fn derive(self) -> Self {
        match self {
            JetVar::Phi(j) => JetVar::Phi(j + 1),
            JetVar::Alpha(j) => JetVar::Alpha(j + 1),
        }
    }
}

impl fmt::Display for JetVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, j) = match *self {
            JetVar::Phi(j) => ("φ", j),
            JetVar::Alpha(j) => ("α", j),
        };
        if j == 0 {
            write!(f, "{name}")
        } else {
            write!(f, "{name}⁽{}⁾", superscript(j))
        }
    }
}

type Monomial = BTreeMap<JetVar, u32>;

/// Polynomial over `Q` in the jet variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct JetPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl JetPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(), c);
        p
    }

    pub fn var(v: JetVar) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::from([(v, 1)]), Rat::one());
        p
    }

    pub fn alpha(j: u32) -> Self {
        Self::var(JetVar::Alpha(j))
    }

    pub fn phi(j: u32) -> Self {
        Self::var(JetVar::Phi(j))
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.remove(&m).map_or(c.clone(), |old| old + c);
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(monomial as (variable, exponent) list, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<(JetVar, u32)>, &Rat)> {
        self.terms.iter().map(|(m, c)| (m.iter().map(|(v, e)| (*v, *e)).collect(), c))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rat::one()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let mut m = m1.clone();
                for (v, e) in m2 {
                    *m.entry(*v).or_insert(0) += e;
                }
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    /// Total derivative `d/dx₁` (Leibniz rule, `α⁽ʲ⁾ ↦ α⁽ʲ⁺¹⁾`, `φ⁽ʲ⁾ ↦ φ⁽ʲ⁺¹⁾`).
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (v, e) in m {
                let mut dm = m.clone();
                if *e == 1 {
                    dm.remove(v);
                } else {
                    dm.insert(*v, e - 1);
                }
                *dm.entry(v.derive()).or_insert(0) += 1;
                out.add_term(dm, c * Rat::from_integer((*e).into()));
            }
        }
        out
    }

    fn max_order(&self, alpha: bool) -> Option<u32> {
        self.terms
            .keys()
            .flat_map(|m| m.keys())
            .filter_map(|v| match (*v, alpha) {
                (JetVar::Alpha(j), true) | (JetVar::Phi(j), false) => Some(j),
                _ => None,
            })
            .max()
    }

    /// Substitute concrete `α(x₁)` and `φ(x₁)`.
    pub fn eval(&self, alpha: &RatFunc<Rat>, phi: &RatFunc<Rat>) -> RatFunc<Rat> {
        let ders = |f: &RatFunc<Rat>, top: Option<u32>| {
            let mut out = vec![f.clone()];
            for _ in 0..top.unwrap_or(0) {
                let d = out.last().unwrap().derivative();
                out.push(d);
            }
            out
        };
        let da = ders(alpha, self.max_order(true));
        let dp = ders(phi, self.max_order(false));
        let mut total = RatFunc::zero();
        for (m, c) in &self.terms {
            let mut t = RatFunc::constant(c.clone());
            for (v, e) in m {
                let base = match *v {
                    JetVar::Alpha(j) => &da[j as usize],
                    JetVar::Phi(j) => &dp[j as usize],
                };
                for _ in 0..*e {
                    t = &t * base;
                }
            }
            total = &total + &t;
        }
        total
    }
}

impl fmt::Display for JetPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if neg {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            if m.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            for (v, e) in m {
                if *e == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for JetPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Coefficient ring of a [`YPoly`] together with its `d/dx₁`.
pub trait YCoeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale_int(&self, k: i64) -> Self;
    fn d(&self) -> Self;
}

impl YCoeff for JetPoly {
    fn zero() -> Self {
        JetPoly::zero()
    }
    fn is_zero(&self) -> bool {
        JetPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        JetPoly::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        JetPoly::mul(self, o)
    }
    fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rat::from_integer(k.into()))
    }
    fn d(&self) -> Self {
        self.derivative()
    }
}

impl YCoeff for RatFunc<Rat> {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rat::from_integer(k.into()))
    }
    fn d(&self) -> Self {
        self.derivative()
    }
}

/// Polynomial in `y₁`; coefficient `k` multiplies `y₁ᵏ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YPoly<C> {
    coeffs: Vec<C>,
}

impl<C: YCoeff> YPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(vec![]);
        }
        let mut out = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// `X_h p = y₁∂p/∂x₁ − φ'∂p/∂y₁` given `φ'`.
    pub fn lie(&self, dphi: &C) -> Self {
        let n = self.coeffs.len() + 1;
        let out = (0..n)
            .map(|k| {
                let from_x = if k == 0 { C::zero() } else { self.coeff(k - 1).d() };
                let from_y = self.coeff(k + 1).scale_int(k as i64 + 1).mul(dphi).scale_int(-1);
                from_x.add(&from_y)
            })
            .collect();
        Self::new(out)
    }
}

impl<C: YCoeff + fmt::Display> fmt::Display for YPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*y1")?,
                _ => write!(f, "({c})*y1^{k}")?,
            }
        }
        Ok(())
    }
}

/// `X_h p` for concrete rational `φ`.
pub fn xh_apply(p: &YPoly<RatFunc<Rat>>, phi: &RatFunc<Rat>) -> YPoly<RatFunc<Rat>> {
    p.lie(&phi.derivative())
}

/// `[α, X_hα, …, X_hⁿα]`.
pub fn lie_derivatives(alpha: &RatFunc<Rat>, phi: &RatFunc<Rat>, n: usize) -> Vec<YPoly<RatFunc<Rat>>> {
    let dphi = phi.derivative();
    let mut out = vec![YPoly::constant(alpha.clone())];
    for _ in 0..n {
        let next = out.last().unwrap().lie(&dphi);
        out.push(next);
    }
    out
}

/// `E_{n,k}` for `0 ≤ k ≤ n`, from the recurrence
/// `E_{n+1,k} = d/dx₁ E_{n,k−1} − (k+1)φ'E_{n,k+1}`, `E_{1,1} = α'`.
/// `enk(0)` is `[α]`.
pub fn enk(n: usize) -> Vec<JetPoly> {
    let mut e = vec![JetPoly::alpha(0)];
    if n == 0 {
        return e;
    }
    e = vec![JetPoly::zero(), JetPoly::alpha(1)];
    let dphi = JetPoly::phi(1);
    for m in 1..n {
        let get = |k: i64| -> JetPoly {
            if k < 0 || k as usize > m {
                JetPoly::zero()
            } else {
                e[k as usize].clone()
            }
        };
        let next: Vec<JetPoly> = (0..=m as i64 + 1)
            .map(|k| {
                get(k - 1)
                    .derivative()
                    .sub(&get(k + 1).mul(&dphi).scale(&Rat::from_integer((k + 1).into())))
            })
            .collect();
        e = next;
    }
    e
}

/// Differential polynomial `Q(a, ȧ, ä, …)` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffConstraint {
    /// Monomial `Π (a⁽ᵏ⁾)^e` as a map `k ↦ e`.
    terms: BTreeMap<BTreeMap<u32, u32>, Rat>,
}

impl DiffConstraint {
    pub fn new(terms: impl IntoIterator<Item = (Vec<(u32, u32)>, Rat)>) -> Result<Self> {
        let mut map: BTreeMap<BTreeMap<u32, u32>, Rat> = BTreeMap::new();
        for (m, c) in terms {
            let mut mono = BTreeMap::new();
            for (k, e) in m {
                if e > 0 {
                    *mono.entry(k).or_insert(0) += e;
                }
            }
            let v = map.remove(&mono).map_or(c.clone(), |old| old + c);
            if !v.is_zero() {
                map.insert(mono, v);
            }
        }
        if map.is_empty() {
            return Err(Error::Precondition("differential constraint has no nonzero term".into()));
        }
        Ok(Self { terms: map })
    }

    /// `Σ c_k a⁽ᵏ⁾`.
    pub fn linear(coeffs: &[(u32, Rat)]) -> Result<Self> {
        Self::new(coeffs.iter().map(|(k, c)| (vec![(*k, 1)], c.clone())))
    }

    /// `dᵐa/dtᵐ`.
    pub fn derivative(m: u32) -> Self {
        Self::linear(&[(m, Rat::one())]).expect("nonzero")
    }

    /// `a''' + ω²a'`.
    pub fn mathieu(omega: &Rat) -> Self {
        Self::linear(&[(3, Rat::one()), (1, omega * omega)]).expect("nonzero")
    }

    pub fn order(&self) -> u32 {
        self.terms.keys().flat_map(|m| m.keys().copied()).max().unwrap_or(0)
    }
}

impl fmt::Display for DiffConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            if m.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
                if !m.is_empty() {
                    write!(f, "*")?;
                }
            }
            for (j, (k, e)) in m.iter().enumerate() {
                if j > 0 {
                    write!(f, "*")?;
                }
                let v = if *k == 0 { "a".to_string() } else { format!("a^({k})") };
                if *e == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "({v})^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for DiffConstraint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Family tag with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `V = φ(x₁) + λ₀x₂²`.
    Harmonic { lambda0: Rat },
    /// `V = λ₀ + λ₁x₂² + λ₂x₁x₂²`.
    Airy { lambda0: Rat, lambda1: Rat, lambda2: Rat },
    /// `V = λ₄/(λ₂+2λ₃x₁)² + λ₀ − λ₁x₂² − λ₂x₁x₂² − λ₃x₁²x₂²`.
    Qho { lambda: [Rat; 5] },
    /// `V = λ₀ − P(x₁)x₂²`, `deg P` odd.
    OddPoly { p: Poly<Rat>, lambda0: Rat },
    /// `V = Q(x₁)x₂²`.
    PolynomialPotential { q: Poly<Rat> },
    /// `V = μ₀ + μ₁x₁ + ω²x₁²/2 − λ₀x₂² − λ₁x₁x₂²`.
    MathieuFlat { mu0: Rat, mu1: Rat, omega: Rat, lambda0: Rat, lambda1: Rat },
    /// `V = μ₀ + μ₁/(λ₁+2λ₂x₁)² + λ₁ω²x₁/(8λ₂) + ω²x₁²/8 − λ₀x₂² − λ₁x₁x₂² − λ₂x₁²x₂²`.
    MathieuCurved { mu0: Rat, mu1: Rat, omega: Rat, lambda0: Rat, lambda1: Rat, lambda2: Rat },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Harmonic { .. } => "harmonic",
            Family::Airy { .. } => "airy",
            Family::Qho { .. } => "qho",
            Family::OddPoly { .. } => "odd_poly",
            Family::PolynomialPotential { .. } => "polynomial",
            Family::MathieuFlat { .. } => "mathieu_flat",
            Family::MathieuCurved { .. } => "mathieu_curved",
        }
    }

    pub fn params(&self) -> Vec<(String, String)> {
        let r = |name: &str, v: &Rat| (name.to_string(), v.to_string());
        match self {
            Family::Harmonic { lambda0 } => vec![r("lambda0", lambda0)],
            Family::Airy { lambda0, lambda1, lambda2 } => {
                vec![r("lambda0", lambda0), r("lambda1", lambda1), r("lambda2", lambda2)]
            }
            Family::Qho { lambda } => {
                lambda.iter().enumerate().map(|(i, l)| r(&format!("lambda{i}"), l)).collect()
            }
            Family::OddPoly { p, lambda0 } => vec![("p".into(), p.to_string()), r("lambda0", lambda0)],
            Family::PolynomialPotential { q } => vec![("q".into(), q.to_string())],
            Family::MathieuFlat { mu0, mu1, omega, lambda0, lambda1 } => vec![
                r("mu0", mu0),
                r("mu1", mu1),
                r("omega", omega),
                r("lambda0", lambda0),
                r("lambda1", lambda1),
            ],
            Family::MathieuCurved { mu0, mu1, omega, lambda0, lambda1, lambda2 } => vec![
                r("mu0", mu0),
                r("mu1", mu1),
                r("omega", omega),
                r("lambda0", lambda0),
                r("lambda1", lambda1),
                r("lambda2", lambda2),
            ],
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let params = self.params();
        let mut m = s.serialize_map(Some(1 + params.len()))?;
        m.serialize_entry("tag", self.tag())?;
        for (k, v) in &params {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

/// `(α, φ)` of a Hamiltonian with invariant plane; the cubic remainder in
/// `x₂` does not enter the NVE and is not represented.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneHamiltonian {
    pub family: Family,
    /// `−∂²V/∂x₂²` on the plane.
    pub alpha: RatFunc<Rat>,
    /// `V(x₁, 0)`.
    pub phi: RatFunc<Rat>,
}

fn c(q: &Rat) -> RatFunc<Rat> {
    RatFunc::constant(q.clone())
}

fn poly(cs: Vec<Rat>) -> RatFunc<Rat> {
    RatFunc::from_poly(Poly::new(cs))
}

fn genericity(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::GenericityViolation(what.into()))
    }
}

fn two() -> Rat {
    Rat::from_integer(2.into())
}

/// `λ/(u)²` with `u = a + b·x₁`.
fn inverse_square(lambda: &Rat, a: &Rat, b: &Rat) -> Result<RatFunc<Rat>> {
    let u = Poly::new(vec![a.clone(), b.clone()]);
    RatFunc::new(Poly::constant(lambda.clone()), &u * &u)
}

impl PlaneHamiltonian {
    /// `α = −2λ₀`, `φ = 0`.
    pub fn harmonic(lambda0: Rat) -> Self {
        Self::harmonic_with(lambda0, RatFunc::zero())
    }

    /// Harmonic NVE with an arbitrary planar potential `φ`.
    pub fn harmonic_with(lambda0: Rat, phi: RatFunc<Rat>) -> Self {
        let alpha = c(&(-two() * &lambda0));
        Self { family: Family::Harmonic { lambda0 }, alpha, phi }
    }

    /// `α = −2λ₁ − 2λ₂x₁`, `φ = λ₀`.
    pub fn airy(lambda0: Rat, lambda1: Rat, lambda2: Rat) -> Result<Self> {
        genericity(!lambda2.is_zero(), "lambda2 != 0")?;
        let alpha = poly(vec![-two() * &lambda1, -two() * &lambda2]);
        let phi = c(&lambda0);
        Ok(Self { family: Family::Airy { lambda0, lambda1, lambda2 }, alpha, phi })
    }

    /// `α = 2λ₁ + 2λ₂x₁ + 2λ₃x₁²`, `φ = λ₄/(λ₂+2λ₃x₁)² + λ₀`.
    pub fn qho(lambda: [Rat; 5]) -> Result<Self> {
        let [l0, l1, l2, l3, l4] = &lambda;
        genericity(!l3.is_zero(), "lambda3 != 0")?;
        let alpha = poly(vec![two() * l1, two() * l2, two() * l3]);
        let phi = &inverse_square(l4, l2, &(two() * l3))? + &c(l0);
        Ok(Self { family: Family::Qho { lambda }, alpha, phi })
    }

    /// `α = 2P`, `φ = λ₀`.
    pub fn odd_poly(p: Poly<Rat>, lambda0: Rat) -> Result<Self> {
        genericity(p.degree().is_some_and(|d| d % 2 == 1), "degree of P odd")?;
        let alpha = RatFunc::from_poly(p.scale(&two()));
        let phi = c(&lambda0);
        Ok(Self { family: Family::OddPoly { p, lambda0 }, alpha, phi })
    }

    /// `α = −2Q`, `φ = 0`.
    pub fn polynomial_potential(q: Poly<Rat>) -> Result<Self> {
        genericity(q.degree().is_some_and(|d| d >= 1), "Q nonconstant")?;
        let alpha = RatFunc::from_poly(q.scale(&-two()));
        Ok(Self { family: Family::PolynomialPotential { q }, alpha, phi: RatFunc::zero() })
    }

    /// `α = 2λ₀ + 2λ₁x₁`, `φ = μ₀ + μ₁x₁ + ω²x₁²/2`.
    pub fn mathieu_flat(mu0: Rat, mu1: Rat, omega: Rat, lambda0: Rat, lambda1: Rat) -> Result<Self> {
        genericity(!omega.is_zero(), "omega != 0")?;
        let alpha = poly(vec![two() * &lambda0, two() * &lambda1]);
        let phi = poly(vec![mu0.clone(), mu1.clone(), &omega * &omega / two()]);
        Ok(Self { family: Family::MathieuFlat { mu0, mu1, omega, lambda0, lambda1 }, alpha, phi })
    }

    /// `α = 2λ₀ + 2λ₁x₁ + 2λ₂x₁²`,
    /// `φ = μ₀ + μ₁/(λ₁+2λ₂x₁)² + λ₁ω²x₁/(8λ₂) + ω²x₁²/8`.
    pub fn mathieu_curved(
        mu0: Rat,
        mu1: Rat,
        omega: Rat,
        lambda0: Rat,
        lambda1: Rat,
        lambda2: Rat,
    ) -> Result<Self> {
        genericity(!omega.is_zero(), "omega != 0")?;
        genericity(!lambda2.is_zero(), "lambda2 != 0")?;
        let alpha = poly(vec![two() * &lambda0, two() * &lambda1, two() * &lambda2]);
        let w2 = &omega * &omega;
        let eight = Rat::from_integer(8.into());
        let smooth = poly(vec![mu0.clone(), &lambda1 * &w2 / (&eight * &lambda2), &w2 / &eight]);
        let phi = &smooth + &inverse_square(&mu1, &lambda1, &(two() * &lambda2))?;
        Ok(Self { family: Family::MathieuCurved { mu0, mu1, omega, lambda0, lambda1, lambda2 }, alpha, phi })
    }

    /// The constraint on `a(t)` that characterizes the family.
    pub fn defining_constraint(&self) -> DiffConstraint {
        match &self.family {
            Family::Harmonic { .. } => DiffConstraint::derivative(1),
            Family::Airy { .. } => DiffConstraint::derivative(2),
            Family::Qho { .. } => DiffConstraint::derivative(3),
            Family::OddPoly { p, .. } => DiffConstraint::derivative(p.degree().unwrap_or(0) as u32 + 1),
            Family::PolynomialPotential { q } => DiffConstraint::derivative(q.degree().unwrap_or(0) as u32 + 1),
            Family::MathieuFlat { omega, .. } | Family::MathieuCurved { omega, .. } => DiffConstraint::mathieu(omega),
        }
    }

    /// A weaker constraint the generic member violates.
    pub fn lower_constraint(&self) -> Option<DiffConstraint> {
        match &self.family {
            Family::Harmonic { .. } => None,
            Family::Airy { .. } => Some(DiffConstraint::derivative(1)),
            Family::Qho { .. } => Some(DiffConstraint::derivative(2)),
            Family::OddPoly { p, .. } => Some(DiffConstraint::derivative(p.degree().unwrap_or(0) as u32)),
            Family::PolynomialPotential { q } => Some(DiffConstraint::derivative(q.degree().unwrap_or(0) as u32)),
            Family::MathieuFlat { .. } | Family::MathieuCurved { .. } => Some(DiffConstraint::derivative(1)),
        }
    }
}

/// `Q̂(x₁, y₁) = Q(α, X_hα, X_h²α, …)`.
pub fn q_pullback(q: &DiffConstraint, h: &PlaneHamiltonian) -> YPoly<RatFunc<Rat>> {
    let lie = lie_derivatives(&h.alpha, &h.phi, q.order() as usize);
    let mut total = YPoly::new(vec![]);
    for (m, coef) in &q.terms {
        let mut t = YPoly::constant(RatFunc::constant(coef.clone()));
        for (k, e) in m {
            for _ in 0..*e {
                t = t.mul(&lie[*k as usize]);
            }
        }
        total = total.add(&t);
    }
    total
}

/// Whether `Q` vanishes on every curve in the plane: every `y₁`-coefficient of
/// `Q̂` is the zero rational function.
pub fn q_pullback_vanishes(q: &DiffConstraint, h: &PlaneHamiltonian) -> bool {
    q_pullback(q, h).is_zero()
}

/// For the curved Mathieu family, whether `y = φ'` solves
/// `y' + 6λ₂y/(λ₁+2λ₂x₁) = ω²`.
pub fn mathieu_phi_check(h: &PlaneHamiltonian) -> Result<bool> {
    let Family::MathieuCurved { omega, lambda1, lambda2, .. } = &h.family else {
        return Err(Error::Precondition("mathieu_phi_check needs the curved Mathieu family".into()));
    };
    if lambda2.is_zero() {
        return Err(Error::Precondition("lambda2 != 0".into()));
    }
    let y = h.phi.derivative();
    let six = Rat::from_integer(6.into());
    let coef = RatFunc::new(
        Poly::constant(six * lambda2),
        Poly::new(vec![lambda1.clone(), two() * lambda2]),
    )?;
    let lhs = &y.derivative() + &(&coef * &y);
    Ok(lhs == c(&(omega * omega)))
}

/// `E(h) = A/√h − B/√h³`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnergyProfile {
    /// `A = (λ₂² − 4λ₁λ₃)/(8√λ₃³)`.
    pub inv_sqrt_h: RadNum,
    /// `B = λ₄/(8√λ₃³)`.
    pub inv_sqrt_h3: RadNum,
}

impl EnergyProfile {
    pub fn is_constant(&self) -> bool {
        self.inv_sqrt_h.is_zero() && self.inv_sqrt_h3.is_zero()
    }

    pub fn at(&self, h: &Rat) -> Result<RadNum> {
        let sh = sqrt_rational(h);
        let sh3 = &sh * &RadNum::from(h.clone());
        Ok(self.inv_sqrt_h.clone().try_div(&sh)? - self.inv_sqrt_h3.clone().try_div(&sh3)?)
    }
}

/// Coefficients of `a(t) = c₀ + c₁t + c₂t²` along the energy-`h` curve through
/// `x₁ = 0`, with the normalization `α = λ₁/2 + λ₂x₁/2 + λ₃x₁²/2`, and the
/// parameter `E` of the reduced equation `ξ'' = (τ² − E)ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QhoCurve {
    #[serde(serialize_with = "crate::exactnum::serialize_rat")]
    pub h: Rat,
    pub c0: RadNum,
    pub c1: RadNum,
    pub c2: RadNum,
    /// `(c₁² − 4c₀c₁)/(4√c₂³)`; differs from `e_corrected` in the last factor.
    pub e_literal: RadNum,
    /// `(c₁² − 4c₀c₂)/(4√c₂³)`, the discriminant form.
    pub e_corrected: RadNum,
    pub profile: EnergyProfile,
    /// `E(h)` from the profile.
    pub e_profile: RadNum,
    /// Constancy read off the profile: `λ₂² = 4λ₁λ₃` and `λ₄ = 0`.
    pub e_constant_in_h: bool,
    /// The alternative condition `λ₂ = 4λ₁λ₃` and `λ₄ = 0`; kept for comparison only.
    pub prose_condition: bool,
}

pub fn qho_profile([_, l1, l2, l3, l4]: &[Rat; 5]) -> Result<EnergyProfile> {
    let eight = RadNum::from(8i64);
    let den = &eight * &sqrt_rational(&(l3 * l3 * l3));
    let a = RadNum::from(l2 * l2 - Rat::from_integer(4.into()) * l1 * l3).try_div(&den)?;
    let b = RadNum::from(l4.clone()).try_div(&den)?;
    Ok(EnergyProfile { inv_sqrt_h: a, inv_sqrt_h3: b })
}

pub fn qho_curve(h_ham: &PlaneHamiltonian, h: &Rat) -> Result<QhoCurve> {
    let Family::Qho { lambda } = &h_ham.family else {
        return Err(Error::Precondition("qho_curve needs the qho family".into()));
    };
    if h.is_zero() {
        return Err(Error::Precondition("h != 0".into()));
    }
    let [_, l1, l2, l3, l4] = lambda;
    let c0 = RadNum::from(l1 / two());
    let c1 = sqrt_rational(&((h * l2 * l2 - l4) / two()));
    let c2 = RadNum::from(l3 * h);
    let four = RadNum::from(4i64);
    let den = &four * &sqrt_rational(&(l3 * l3 * l3 * h * h * h));
    let c1sq = &c1 * &c1;
    let e_literal = (c1sq.clone() - &(&four * &c0) * &c1).try_div(&den)?;
    let e_corrected = (c1sq - &(&four * &c0) * &c2).try_div(&den)?;
    let profile = qho_profile(lambda)?;
    let e_profile = profile.at(h)?;
    let e_constant_in_h = profile.is_constant();
    let prose_condition = *l2 == Rat::from_integer(4.into()) * l1 * l3 && l4.is_zero();
    Ok(QhoCurve {
        h: h.clone(),
        c0,
        c1,
        c2,
        e_literal,
        e_corrected,
        profile,
        e_profile,
        e_constant_in_h,
        prose_condition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn x() -> RatFunc<Rat> {
        RatFunc::x()
    }

    #[test]
    fn lie_examples() {
        let alpha = poly(vec![int(1), int(2), int(3), int(1)]);
        let phi = poly(vec![int(0), int(1), rat(1, 2)]);
        let p0 = YPoly::constant(alpha.clone());
        let p1 = xh_apply(&p0, &phi);
        assert_eq!(p1, YPoly::new(vec![RatFunc::zero(), alpha.derivative()]));
        let p2 = xh_apply(&p1, &phi);
        let expected = YPoly::new(vec![
            -(&phi.derivative() * &alpha.derivative()),
            RatFunc::zero(),
            alpha.derivative().derivative(),
        ]);
        assert_eq!(p2, expected);
        assert!(xh_apply(&YPoly::constant(c(&int(5))), &phi).is_zero());
    }

    #[test]
    fn enk_structure() {
        for n in 1..=8usize {
            let e = enk(n);
            assert_eq!(e.len(), n + 1);
            assert_eq!(e[n], JetPoly::alpha(n as u32));
            for (k, ek) in e.iter().enumerate() {
                if (n - k) % 2 == 1 {
                    assert!(ek.is_zero(), "E_{n},{k}");
                }
            }
        }
        let e3 = enk(3);
        let pa = JetPoly::phi(1).mul(&JetPoly::alpha(1));
        let expected = pa.derivative().add(&JetPoly::phi(1).mul(&JetPoly::alpha(2)).scale(&int(2))).scale(&int(-1));
        assert_eq!(e3[1], expected);
        assert_eq!(enk(2)[0].to_string(), "-φ⁽¹⁾α⁽¹⁾");
        assert_eq!(enk(2)[2].to_string(), "α⁽²⁾");
    }

    #[test]
    fn symbolic_lie_matches_recurrence() {
        let dphi = JetPoly::phi(1);
        let mut p = YPoly::constant(JetPoly::alpha(0));
        for n in 1..=6 {
            p = p.lie(&dphi);
            let e = enk(n);
            for (k, ek) in e.iter().enumerate() {
                assert_eq!(&p.coeff(k), ek);
            }
        }
    }

    #[test]
    fn family_constraints() {
        let h = PlaneHamiltonian::harmonic_with(int(3), poly(vec![int(0), int(0), int(0), int(1)]));
        assert!(q_pullback_vanishes(&DiffConstraint::derivative(1), &h));

        let airy = PlaneHamiltonian::airy(int(1), int(2), int(3)).unwrap();
        assert!(q_pullback_vanishes(&DiffConstraint::derivative(2), &airy));
        assert!(!q_pullback_vanishes(&DiffConstraint::derivative(1), &airy));

        let qho = PlaneHamiltonian::qho([int(1), int(2), int(3), int(5), int(7)]).unwrap();
        assert!(q_pullback_vanishes(&DiffConstraint::derivative(3), &qho));
        assert!(!q_pullback_vanishes(&DiffConstraint::derivative(2), &qho));

        let p = Poly::new(vec![int(1), int(0), int(-2), rat(1, 3), int(0), int(4)]);
        let odd = PlaneHamiltonian::odd_poly(p, int(2)).unwrap();
        assert!(q_pullback_vanishes(&DiffConstraint::derivative(6), &odd));
        assert!(!q_pullback_vanishes(&DiffConstraint::derivative(5), &odd));

        let curved = PlaneHamiltonian::mathieu_curved(int(1), int(2), int(3), int(1), int(-2), rat(1, 2)).unwrap();
        assert!(q_pullback_vanishes(&curved.defining_constraint(), &curved));
        assert!(!q_pullback_vanishes(&DiffConstraint::derivative(1), &curved));
        assert!(mathieu_phi_check(&curved).unwrap());

        let flat = PlaneHamiltonian::mathieu_flat(int(1), int(2), rat(1, 2), int(3), int(4)).unwrap();
        assert!(q_pullback_vanishes(&flat.defining_constraint(), &flat));
    }

    #[test]
    fn genericity_errors() {
        assert!(matches!(PlaneHamiltonian::airy(int(1), int(1), int(0)), Err(Error::GenericityViolation(_))));
        assert!(matches!(
            PlaneHamiltonian::qho([int(1), int(1), int(1), int(0), int(1)]),
            Err(Error::GenericityViolation(_))
        ));
        assert!(PlaneHamiltonian::odd_poly(Poly::from_ints(&[1, 0, 1]), int(0)).is_err());
        assert!(PlaneHamiltonian::mathieu_flat(int(0), int(0), int(0), int(1), int(1)).is_err());
        assert!(PlaneHamiltonian::mathieu_curved(int(0), int(0), int(1), int(1), int(1), int(0)).is_err());
    }

    #[test]
    fn phi_check_detects_perturbation() {
        let mut h = PlaneHamiltonian::mathieu_curved(int(0), int(1), int(2), int(0), int(1), int(1)).unwrap();
        h.phi = &h.phi + &(&(&x() * &x()) * &x());
        assert!(!mathieu_phi_check(&h).unwrap());
        let flat = PlaneHamiltonian::mathieu_flat(int(0), int(0), int(1), int(1), int(1)).unwrap();
        assert!(mathieu_phi_check(&flat).is_err());
    }

    #[test]
    fn qho_curve_values() {
        let h = PlaneHamiltonian::qho([int(0), int(0), int(0), int(1), int(0)]).unwrap();
        let cv = qho_curve(&h, &int(1)).unwrap();
        assert!(cv.c0.is_zero());
        assert_eq!(cv.c2, RadNum::one());
        assert!(cv.e_constant_in_h);

        let gen = PlaneHamiltonian::qho([int(0), int(1), int(3), int(2), int(5)]).unwrap();
        for h in [int(1), int(2), int(3), rat(7, 2)] {
            let cv = qho_curve(&gen, &h).unwrap();
            assert_eq!(cv.e_corrected, cv.e_profile);
            assert!(!cv.e_constant_in_h);
        }
        // λ₂² = 4λ₁λ₃, λ₄ = 0
        let deg = PlaneHamiltonian::qho([int(1), int(2), int(4), int(2), int(0)]).unwrap();
        for h in [int(1), int(5)] {
            let cv = qho_curve(&deg, &h).unwrap();
            assert!(cv.e_constant_in_h);
            assert!(cv.e_corrected.is_zero());
            assert!(!cv.prose_condition);
        }
    }
}
