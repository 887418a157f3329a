//! Subcommands. Each returns its rendered output, as text or JSON.

use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use liouville::algebrize::{algebraic_form, algebrize_and_solve, exp_change};
use liouville::kovacic::{kovacic, omega_polynomial_text, KovacicReport, Omega};
use liouville::nve::{enk, mathieu_phi_check, q_pullback_vanishes, Family, PlaneHamiltonian};
use liouville::ode::{reduce, singularities, Lode2, Rlde};
use liouville::verdict::{verdict_mathieu, verdict_polynomial, verdict_qho, NonIntegrabilityVerdict};
use liouville::{Poly, Rat};

use crate::convert::{to_poly_rat, to_rat, to_ratfunc, to_trigexp};
use crate::expr::parse;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "liouville", version, about = "Liouvillian solutions and differential Galois groups of second-order linear ODEs")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run Kovacic's algorithm on xi'' = r(x) xi.
    Solve {
        #[arg(allow_hyphen_values = true)]
        r: String,
    },
    /// Reduce y'' + a y' + b y = 0 to xi'' = r xi.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Classify the singular points of y'' + a y' + b y = 0, infinity included.
    Singularities {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Rewrite y'' = r(t) y with exponential/trigonometric r in rational form.
    Algebrize {
        #[arg(allow_hyphen_values = true)]
        r: String,
        /// Also reduce and run Kovacic's algorithm.
        #[arg(long)]
        solve: bool,
    },
    /// Build a Hamiltonian family and check its NVE constraints.
    Family {
        tag: FamilyTag,
        /// Comma-separated rational parameters.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<String>,
        /// Polynomial in x for odd_poly and polynomial.
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Tabulate E_{n,k}.
    Enk {
        #[arg(long)]
        n: usize,
    },
    /// Non-integrability verdict for a family.
    Verdict {
        tag: VerdictTag,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyTag {
    Harmonic,
    Airy,
    Qho,
    #[value(name = "odd_poly")]
    OddPoly,
    Polynomial,
    #[value(name = "mathieu_flat")]
    MathieuFlat,
    #[value(name = "mathieu_curved")]
    MathieuCurved,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VerdictTag {
    Polynomial,
    Qho,
    #[value(name = "mathieu_flat")]
    MathieuFlat,
    #[value(name = "mathieu_curved")]
    MathieuCurved,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn rat_params(raw: &[String], want: usize, names: &str) -> Result<Vec<Rat>, CliError> {
    if raw.len() != want {
        return Err(CliError::Input(format!("expected {want} parameters ({names}), got {}", raw.len())));
    }
    raw.iter().map(|s| to_rat(&parse(s)?)).collect()
}

fn poly_arg(p: &Option<String>) -> Result<Poly<Rat>, CliError> {
    let s = p.as_ref().ok_or_else(|| CliError::Input("--poly is required".into()))?;
    to_poly_rat(&parse(s)?)
}

fn lode2_text(e: &Lode2) -> String {
    format!("y'' + ({})*y' + ({})*y = 0", e.a, e.b)
}

fn rlde_text(e: &Rlde) -> String {
    format!("xi'' = ({})*xi", e.r)
}

fn omega_text(o: &Omega) -> String {
    match o {
        Omega::Rational { omega } => format!("omega = {omega}"),
        Omega::AlgebraicRoot { degree, coefficients } => {
            format!("omega of degree {degree}: {}", omega_polynomial_text(coefficients))
        }
    }
}

fn kovacic_text(rep: &KovacicReport, out: &mut String) {
    let _ = writeln!(out, "case: {}", rep.case);
    let _ = writeln!(out, "group: {}", rep.group);
    let _ = writeln!(out, "identity component abelian: {}", rep.group_identity_component_abelian);
    let _ = writeln!(out, "liouvillian: {}", rep.liouvillian);
    if let Some(m) = rep.m {
        let _ = writeln!(out, "m: {m}");
    }
    if let Some(p) = &rep.p_m {
        let _ = writeln!(out, "P: {p}");
    }
    if let Some(o) = &rep.omega {
        let _ = writeln!(out, "{}", omega_text(o));
    }
    for s in &rep.solutions {
        let _ = writeln!(out, "solution: {s}");
    }
    for n in &rep.notes {
        let _ = writeln!(out, "note: {n}");
    }
}

fn finish(mut s: String) -> String {
    while s.ends_with('\n') {
        s.pop();
    }
    s
}

fn solve(r: &str, json: bool) -> Result<String, CliError> {
    let r = to_ratfunc(&parse(r)?)?;
    let rep = kovacic(&Rlde::new(r))?;
    if json {
        return Ok(to_json(&rep));
    }
    let mut out = format!("r = {}\n", rep.r);
    kovacic_text(&rep, &mut out);
    Ok(finish(out))
}

fn lode2(a: &str, b: &str) -> Result<Lode2, CliError> {
    Ok(Lode2 { a: to_ratfunc(&parse(a)?)?, b: to_ratfunc(&parse(b)?)? })
}

fn reduce_cmd(a: &str, b: &str, json: bool) -> Result<String, CliError> {
    let e = lode2(a, b)?;
    let (rl, tr) = reduce(&e);
    if json {
        return Ok(to_json(&json!({ "equation": e, "reduced": rl, "transform": tr.to_string() })));
    }
    Ok(format!("{}\n{}\n{}", lode2_text(&e), rlde_text(&rl), tr))
}

fn singularities_cmd(a: &str, b: &str, json: bool) -> Result<String, CliError> {
    let e = lode2(a, b)?;
    let pts = singularities(&e)?;
    if json {
        let list: Vec<_> = pts.iter().map(|(p, c)| json!({ "point": p, "class": c })).collect();
        return Ok(to_json(&json!({ "equation": e, "points": list })));
    }
    let mut out = lode2_text(&e) + "\n";
    for (p, c) in &pts {
        let _ = writeln!(out, "x = {p}: {c}");
    }
    Ok(finish(out))
}

fn algebrize_cmd(r: &str, solve: bool, json: bool) -> Result<String, CliError> {
    let r = to_trigexp(&parse(r)?)?;
    if solve {
        let rep = algebrize_and_solve(&r)?;
        if json {
            return Ok(to_json(&rep));
        }
        let mut out = format!("r(t) = {}\nchange: {}\n", rep.r, rep.change.substitution);
        let _ = writeln!(out, "f(x) = {}\nalpha(x) = {}", rep.change.f, rep.change.alpha);
        let _ = writeln!(out, "algebraic form: {}", lode2_text(&rep.algebraic_form));
        let _ = writeln!(out, "reduced: {}", rlde_text(&rep.reduced));
        let _ = writeln!(out, "x = infinity: {}", rep.infinity);
        kovacic_text(&rep.kovacic, &mut out);
        for n in &rep.notes {
            let _ = writeln!(out, "note: {n}");
        }
        return Ok(finish(out));
    }
    let change = exp_change(&r)?;
    let form = algebraic_form(&change.f, &change.alpha)?;
    if json {
        return Ok(to_json(&json!({ "r": r, "change": change, "algebraic_form": form })));
    }
    Ok(format!(
        "r(t) = {r}\nchange: {}\nf(x) = {}\nalpha(x) = {}\nalgebraic form: {}",
        change.substitution,
        change.f,
        change.alpha,
        lode2_text(&form)
    ))
}

fn build_family(tag: FamilyTag, params: &[String], poly: &Option<String>) -> Result<PlaneHamiltonian, CliError> {
    let h = match tag {
        FamilyTag::Harmonic => {
            let p = rat_params(params, 1, "lambda0")?;
            PlaneHamiltonian::harmonic(p[0].clone())
        }
        FamilyTag::Airy => {
            let p = rat_params(params, 3, "lambda0,lambda1,lambda2")?;
            PlaneHamiltonian::airy(p[0].clone(), p[1].clone(), p[2].clone())?
        }
        FamilyTag::Qho => {
            let p = rat_params(params, 5, "lambda0..lambda4")?;
            PlaneHamiltonian::qho(p.try_into().expect("five"))?
        }
        FamilyTag::OddPoly => {
            let p = rat_params(params, 1, "lambda0")?;
            PlaneHamiltonian::odd_poly(poly_arg(poly)?, p[0].clone())?
        }
        FamilyTag::Polynomial => {
            rat_params(params, 0, "none")?;
            PlaneHamiltonian::polynomial_potential(poly_arg(poly)?)?
        }
        FamilyTag::MathieuFlat => {
            let p = rat_params(params, 5, "mu0,mu1,omega,lambda0,lambda1")?;
            PlaneHamiltonian::mathieu_flat(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone(), p[4].clone())?
        }
        FamilyTag::MathieuCurved => {
            let p = rat_params(params, 6, "mu0,mu1,omega,lambda0,lambda1,lambda2")?;
            PlaneHamiltonian::mathieu_curved(
                p[0].clone(),
                p[1].clone(),
                p[2].clone(),
                p[3].clone(),
                p[4].clone(),
                p[5].clone(),
            )?
        }
    };
    Ok(h)
}

fn family_cmd(tag: FamilyTag, params: &[String], poly: &Option<String>, json: bool) -> Result<String, CliError> {
    let h = build_family(tag, params, poly)?;
    let def = h.defining_constraint();
    let def_ok = q_pullback_vanishes(&def, &h);
    let lower = h.lower_constraint();
    let lower_ok = lower.as_ref().map(|q| q_pullback_vanishes(q, &h));
    let phi_check = matches!(h.family, Family::MathieuCurved { .. }).then(|| mathieu_phi_check(&h)).transpose()?;
    let nve = "xi'' = a(t)*xi, a(t) = alpha(x1(t)), x1'' = -phi'(x1)";
    if json {
        return Ok(to_json(&json!({
            "hamiltonian": h,
            "nve": nve,
            "defining_constraint": def,
            "defining_constraint_holds": def_ok,
            "lower_constraint": lower,
            "lower_constraint_holds": lower_ok,
            "mathieu_phi_check": phi_check,
        })));
    }
    let mut out = format!("family: {}\n", h.family.tag());
    for (k, v) in h.family.params() {
        let _ = writeln!(out, "  {k} = {v}");
    }
    let _ = writeln!(out, "alpha(x1) = {}", h.alpha.display_in("x1"));
    let _ = writeln!(out, "phi(x1) = {}", h.phi.display_in("x1"));
    let _ = writeln!(out, "nve: {nve}");
    let _ = writeln!(out, "{def} = 0: {def_ok}");
    if let (Some(q), Some(ok)) = (&lower, lower_ok) {
        let _ = writeln!(out, "{q} = 0: {ok}");
    }
    if let Some(ok) = phi_check {
        let _ = writeln!(out, "phi' solves the Mathieu phi equation: {ok}");
    }
    Ok(finish(out))
}

fn enk_cmd(n: usize, json: bool) -> Result<String, CliError> {
    if n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    let table = enk(n);
    if json {
        let rows: Vec<_> =
            table.iter().enumerate().map(|(k, e)| json!({ "k": k, "value": e.to_string() })).collect();
        return Ok(to_json(&json!({ "n": n, "coefficients": rows })));
    }
    let mut out = String::new();
    for (k, e) in table.iter().enumerate().rev() {
        let _ = writeln!(out, "E_{{{n},{k}}} = {e}");
    }
    Ok(finish(out))
}

fn verdict_text(v: &NonIntegrabilityVerdict) -> String {
    let mut out = format!("family: {}\nconclusion: {}\n", v.family, v.conclusion);
    for h in &v.hypotheses {
        let _ = writeln!(out, "hypothesis {}: {:?} ({})", h.name, h.status, h.detail);
    }
    for s in &v.samples {
        let _ = write!(out, "curve {}: a(t) = {}", s.curve, s.nve);
        if let Some(g) = &s.group {
            let _ = write!(out, ", group {g}");
        }
        if let Some(e) = &s.e {
            let _ = write!(out, ", E = {e}");
        }
        if let Some(pv) = s.picard_vessiot_integrable {
            let _ = write!(out, ", integrable: {pv}");
        }
        out.push('\n');
    }
    if let Some(d) = v.degenerate_locus {
        let _ = writeln!(out, "degenerate locus: {d}");
    }
    for c in &v.citations {
        let _ = writeln!(out, "by: {c}");
    }
    for n in &v.notes {
        let _ = writeln!(out, "note: {n}");
    }
    finish(out)
}

fn verdict_cmd(tag: VerdictTag, params: &[String], poly: &Option<String>, json: bool) -> Result<String, CliError> {
    let v = match tag {
        VerdictTag::Polynomial => {
            rat_params(params, 0, "none")?;
            verdict_polynomial(&poly_arg(poly)?)?
        }
        VerdictTag::Qho => {
            let p = rat_params(params, 5, "lambda0..lambda4")?;
            verdict_qho(p.try_into().expect("five"))?
        }
        VerdictTag::MathieuFlat => verdict_mathieu(&build_family(FamilyTag::MathieuFlat, params, poly)?)?,
        VerdictTag::MathieuCurved => verdict_mathieu(&build_family(FamilyTag::MathieuCurved, params, poly)?)?,
    };
    Ok(if json { to_json(&v) } else { verdict_text(&v) })
}

/// Executes one subcommand.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::Solve { r } => solve(r, json),
        Command::Reduce { a, b } => reduce_cmd(a, b, json),
        Command::Singularities { a, b } => singularities_cmd(a, b, json),
        Command::Algebrize { r, solve } => algebrize_cmd(r, *solve, json),
        Command::Family { tag, params, poly } => family_cmd(*tag, params, poly, json),
        Command::Enk { n } => enk_cmd(*n, json),
        Command::Verdict { tag, params, poly } => verdict_cmd(*tag, params, poly, json),
    }
}
