use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactnum::{Field, RadNum, Rat};
use crate::polyrat::{hermite_reduce, partial_fractions, Poly, RatFunc};
use crate::Result;

/// `prefactor · Π (x − c)^e · exp(exponent)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperexponential {
    pub prefactor: RatFunc<RadNum>,
    pub powers: Vec<(RadNum, RadNum)>,
    pub exponent: RatFunc<RadNum>,
}

impl Hyperexponential {
    pub fn rational(f: RatFunc<RadNum>) -> Self {
        Self { prefactor: f, powers: Vec::new(), exponent: RatFunc::zero() }
    }

    /// `P · exp(∫ω)`, with the residues of `ω` turned into powers and the
    /// rest integrated in closed form.
    pub fn from_omega(p: &Poly<RadNum>, omega: &RatFunc<RadNum>) -> Result<Self> {
        let pf = partial_fractions(omega)?;
        let mut exponent = RatFunc::from_poly(pf.polynomial.integral());
        let mut powers = Vec::new();
        for part in &pf.parts {
            let res = part.residue();
            if !res.is_zero() {
                powers.push((part.location.clone(), res));
            }
            for (j, c) in part.coeffs.iter().enumerate().skip(1) {
                if c.is_zero() {
                    continue;
                }
                // ∫ c (x-a)^-(j+1) = -c/j (x-a)^-j
                let k = RadNum::from(-(j as i64));
                let coef = c.try_div(&k)?;
                exponent = &exponent + &RatFunc::pole_term(coef, part.location.clone(), j as u32);
            }
        }
        Ok(Self { prefactor: RatFunc::from_poly(p.clone()), powers, exponent })
    }

    /// `ξ'/ξ`.
    pub fn log_derivative(&self) -> RatFunc<RadNum> {
        let mut w = self.exponent.derivative();
        if !self.prefactor.is_zero() {
            w = &w + &self.prefactor.derivative().try_div(&self.prefactor).expect("nonzero");
        }
        for (c, e) in &self.powers {
            w = &w + &RatFunc::pole_term(e.clone(), c.clone(), 1);
        }
        w
    }

    /// `ξ^k` for an integer `k`.
    pub fn powi(&self, k: i32) -> Result<Self> {
        let kk = RadNum::from(k as i64);
        Ok(Self {
            prefactor: self.prefactor.powi(k)?,
            powers: self.powers.iter().map(|(c, e)| (c.clone(), e.clone() * kk.clone())).collect(),
            exponent: self.exponent.scale(&kk),
        })
    }

    /// Smallest `k ≥ 1` with `ξ^k` rational, when `ξ` is algebraic of this form.
    pub fn algebraic_order(&self) -> Option<u64> {
        if !self.exponent.is_zero() {
            return None;
        }
        let mut k = BigInt::one();
        for (_, e) in &self.powers {
            let q: Rat = e.as_rat()?;
            k = k.lcm(q.denom());
        }
        u64::try_from(k).ok()
    }

    pub fn is_rational(&self) -> bool {
        self.algebraic_order() == Some(1)
    }

    /// The value as a rational function, when it is one.
    pub fn to_ratfunc(&self) -> Option<RatFunc<RadNum>> {
        if !self.is_rational() {
            return None;
        }
        let mut f = self.prefactor.clone();
        for (c, e) in &self.powers {
            let k: i32 = e.is_integer()?.try_into().ok()?;
            f = &f * &RatFunc::from_poly(Poly::linear_root(c.clone())).powi(k).ok()?;
        }
        Some(f)
    }

    /// Multiplication by a rational function.
    pub fn times(&self, f: &RatFunc<RadNum>) -> Self {
        Self { prefactor: &self.prefactor * f, ..self.clone() }
    }
}

fn base(c: &RadNum) -> String {
    if c.is_zero() {
        "x".to_string()
    } else {
        format!("({})", Poly::linear_root(c.clone()))
    }
}

impl fmt::Display for Hyperexponential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        if !self.prefactor.as_constant().is_some_and(|c| c.is_one()) {
            factors.push(self.prefactor.to_string());
        }
        for (c, e) in &self.powers {
            let b = base(c);
            factors.push(match e.is_integer() {
                Some(k) if k == BigInt::one() => b,
                Some(k) if k > BigInt::one() => format!("{b}^{k}"),
                _ => format!("{b}^({e})"),
            });
        }
        if !self.exponent.is_zero() {
            factors.push(format!("exp({})", self.exponent));
        }
        if factors.is_empty() {
            return write!(f, "1");
        }
        let n = factors.len();
        let parts: Vec<String> = factors
            .into_iter()
            .map(|s| if n > 1 && needs_parens(&s) { format!("({s})") } else { s })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Whether `s` has a top-level `+` or `-` (outside parentheses, not leading).
pub(crate) fn needs_parens(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            '/' if depth == 0 => return true,
            _ => {}
        }
    }
    false
}

impl Serialize for Hyperexponential {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Hyperexponential", 4)?;
        st.serialize_field("expr", &self.to_string())?;
        st.serialize_field("prefactor", &self.prefactor)?;
        let powers: Vec<(String, String)> =
            self.powers.iter().map(|(c, e)| (c.to_string(), e.to_string())).collect();
        st.serialize_field("powers", &powers)?;
        st.serialize_field("exponent", &self.exponent)?;
        st.end()
    }
}

/// `ξ₂ = ξ₁ ∫ dx/ξ₁²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondSolution {
    /// The quadrature written out formally.
    pub formal: String,
    pub integrand_rational: bool,
    /// Whether the quadrature is free of logarithms (only known for rational integrands).
    pub log_free: Option<bool>,
    pub closed_form: Option<Hyperexponential>,
}

pub fn second_solution(xi1: &Hyperexponential) -> Result<SecondSolution> {
    let integrand = xi1.powi(-2)?;
    let formal = format!("{}*integral({}, x)", wrap(&xi1.to_string()), integrand);
    let Some(rat) = integrand.to_ratfunc() else {
        return Ok(SecondSolution { formal, integrand_rational: false, log_free: None, closed_form: None });
    };
    let h = hermite_reduce(&rat);
    let log_free = h.is_log_free();
    let closed_form = log_free.then(|| xi1.times(&h.rational));
    Ok(SecondSolution { formal, integrand_rational: true, log_free: Some(log_free), closed_form })
}

fn wrap(s: &str) -> String {
    if needs_parens(s) {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// A solution of `ξ'' = rξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Solution {
    /// A closed-form hyperexponential solution.
    Hyperexponential {
        #[serde(flatten)]
        value: Hyperexponential,
    },
    /// `exp(∫ω)` where `ω` is a root of `Σ coefficients[i]·ω^i`.
    RiccatiRoot {
        expr: String,
        coefficients: Vec<RatFunc<RadNum>>,
        distinct_roots: usize,
    },
    /// The reduction-of-order quadrature.
    Quadrature {
        #[serde(flatten)]
        value: SecondSolution,
    },
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Solution::Hyperexponential { value } => write!(f, "{value}"),
            Solution::RiccatiRoot { expr, .. } => write!(f, "{expr}"),
            Solution::Quadrature { value } => match &value.closed_form {
                Some(c) => write!(f, "{c}"),
                None => write!(f, "{}", value.formal),
            },
        }
    }
}

/// `Σ c_i ω^i` printed as an equation in `omega`.
pub fn omega_polynomial_text(coeffs: &[RatFunc<RadNum>]) -> String {
    let mut terms = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "omega".to_string(),
            i => format!("omega^{i}"),
        };
        let cs = c.to_string();
        let term = match (mono.is_empty(), c.as_constant().is_some_and(|k| k.is_one())) {
            (true, _) => wrap(&cs),
            (false, true) => mono,
            (false, false) => format!("{}*{mono}", wrap(&cs)),
        };
        terms.push(term);
    }
    format!("{} = 0", terms.join(" + "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn rn(q: Rat) -> RadNum {
        RadNum::from(q)
    }

    #[test]
    fn display_and_log_derivative() {
        let x = RatFunc::<RadNum>::x();
        let xi = Hyperexponential::from_omega(&Poly::x(), &x).unwrap();
        assert_eq!(xi.to_string(), "x*exp(x^2/2)");
        assert_eq!(xi.log_derivative(), &x + &x.inv().unwrap());
        let half = RatFunc::pole_term(rn(rat(1, 2)), RadNum::zero(), 1);
        let xi = Hyperexponential::from_omega(&Poly::one(), &half).unwrap();
        assert_eq!(xi.to_string(), "x^(1/2)");
        assert_eq!(xi.algebraic_order(), Some(2));
        let e = Hyperexponential::from_omega(&Poly::one(), &RatFunc::one()).unwrap();
        assert_eq!(e.to_string(), "exp(x)");
        // higher pole parts integrate into the exponent: ω = -1/x^2 → exp(1/x)
        let w = x.powi(-2).unwrap().scale(&rn(int(-1)));
        let xi = Hyperexponential::from_omega(&Poly::one(), &w).unwrap();
        assert_eq!(xi.exponent, x.inv().unwrap());
        assert_eq!(xi.log_derivative(), w);
    }

    #[test]
    fn second_solutions() {
        let x = Hyperexponential::rational(RatFunc::x());
        let s = second_solution(&x).unwrap();
        assert_eq!(s.log_free, Some(true));
        assert_eq!(s.closed_form.unwrap().to_string(), "-1");
        let one = Hyperexponential::rational(RatFunc::one());
        assert_eq!(second_solution(&one).unwrap().closed_form.unwrap().to_string(), "x");
        let e = Hyperexponential::from_omega(&Poly::one(), &RatFunc::one()).unwrap();
        let s = second_solution(&e).unwrap();
        assert!(!s.integrand_rational);
        assert_eq!(s.formal, "exp(x)*integral(exp(-2*x), x)");
        // ξ = x^(1/2): ∫ 1/x has a logarithm
        let half = RatFunc::pole_term(rn(rat(1, 2)), RadNum::zero(), 1);
        let xi = Hyperexponential::from_omega(&Poly::one(), &half).unwrap();
        assert_eq!(second_solution(&xi).unwrap().log_free, Some(false));
    }
}
