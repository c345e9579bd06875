//! Command-line front end.
//!
//! Exit codes: 0 success / proven, 1 verification failure, 2 invalid input,
//! 3 inconclusive. Results go to stdout, diagnostics to stderr.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::criteria::{
    certify_action, family_hom, is_nonbounding, linind_actions, verify_linear_independence,
    CoefficientKind, CriteriaError, SearchPolicy, Verdict,
};
use crate::gf2poly::{Gf2Polynomial, LinearForm, PolyContext};
use crate::linratfun::{
    lagrange_ii, lagrange_p, lagrange_p_over, lagrange_q, lagrange_q_over, FactoredDenominator,
    RationalFunction,
};
use crate::milnor::{eta_closed_formula, eta_fixed_point_sum, projective_class, MilnorAction};
use crate::repring::{GroupHom, RepElement};
use crate::tomdieck::{b_coefficient, check_integrality, IntegralityExpectation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Desk-scale guards, lifted by `--force`.
pub const MAX_RANK_GUARD: usize = 6;
pub const MAX_K_GUARD: u32 = 64;
pub const MAX_WEIGHT_SLACK: u32 = 10;
pub const MAX_LEMMA_N_GUARD: usize = 8;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
}

impl CliError {
    fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }
}

impl From<crate::milnor::MilnorError> for CliError {
    fn from(e: crate::milnor::MilnorError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<crate::repring::RepError> for CliError {
    fn from(e: crate::repring::RepError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<crate::tomdieck::TomDieckError> for CliError {
    fn from(e: crate::tomdieck::TomDieckError) -> Self {
        CliError::Criteria(e.into())
    }
}

impl From<crate::linratfun::RatError> for CliError {
    fn from(e: crate::linratfun::RatError) -> Self {
        CliError::Criteria(crate::tomdieck::TomDieckError::from(e).into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "eqcob", version, about = "Equivariant cobordism classes of Milnor manifolds over GF(2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build η of H(m,n) and report whether it bounds.
    Class(ClassArgs),
    /// Search for an indecomposability certificate.
    Certify(CertifyArgs),
    /// Run identity and consistency checks.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Tabulate certified indecomposables for a group rank.
    Table(TableArgs),
}

#[derive(Debug, Args, Clone)]
pub struct ClassSpec {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Images S_1..S_n, e.g. "1;2;3,4".
    #[arg(long)]
    pub hom: Option<String>,
    /// Rank of the acting group; defaults to n, or to the largest index in --hom.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Lift the desk-scale guards.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    #[command(flatten)]
    pub spec: ClassSpec,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub spec: ClassSpec,
    /// Try every k in [k-min, k-max] instead of the default N+m, N in {8,16,32}.
    #[arg(long)]
    pub k_min: Option<u32>,
    #[arg(long)]
    pub k_max: Option<u32>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// The three Lagrange-type identities and their recursions.
    Lemma41 {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Low coefficients vanish, higher ones are polynomials.
    Integrality {
        #[command(flatten)]
        spec: OptionalClassSpec,
        /// Check RP^k instead of a Milnor manifold.
        #[arg(long)]
        projective: Option<usize>,
        #[arg(long)]
        max_weight: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Re-derive the witness of a certificate written by `certify --output json`.
    Certificate {
        /// Path to the JSON document, or `-` for standard input.
        #[arg(long)]
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Closed formula against the fixed-point sum.
    Formula {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args, Clone)]
pub struct OptionalClassSpec {
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub hom: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum TableMode {
    /// One pulled-back class per (m, n) with S_1 = {1}.
    #[default]
    Ind2,
    /// i classes of one degree, each with its own S_1 = {j}.
    Linind,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum, default_value_t = TableMode::Ind2)]
    pub mode: TableMode,
    #[arg(long)]
    pub rank: usize,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Skip rows above this degree.
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(code, text)
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(o) => o,
        Err(CliError::Invalid(msg)) => Outcome {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(CliError::Criteria(CriteriaError::CandidateTooSmall { k, d })) => Outcome {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: k={k} must exceed the degree {d}\n"),
        },
        Err(CliError::Criteria(CriteriaError::Infeasible(msg))) => Outcome {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: infeasible parameters: {msg}\n"),
        },
        Err(e) => Outcome {
            code: EXIT_FAILED,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Class(a) => cmd_class(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Verify { check } => match check {
            VerifyCommand::Lemma41 { n_max, common } => verify_lemma41(*n_max, common),
            VerifyCommand::Integrality {
                spec,
                projective,
                max_weight,
                common,
            } => verify_integrality(spec, *projective, *max_weight, common),
            VerifyCommand::Certificate { input, common } => verify_certificate(input, common),
            VerifyCommand::Formula { n_max, common } => verify_formula(*n_max, common),
        },
        Command::Table(a) => cmd_table(a),
    }
}

/// Parses `"1;2;3,4"` into `[[1],[2],[3,4]]`. An empty segment is an empty
/// subset.
pub fn parse_hom(s: &str) -> Result<Vec<Vec<usize>>, CliError> {
    s.split(';')
        .map(|part| {
            let part = part.trim();
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&v| v > 0)
                        .ok_or_else(|| CliError::invalid(format!("bad subset element {x:?} in --hom")))
                })
                .collect()
        })
        .collect()
}

/// Builds the action described by `(m, n, hom, rank)`.
pub fn build_action(
    m: usize,
    n: usize,
    hom: Option<&[Vec<usize>]>,
    rank: Option<usize>,
) -> Result<MilnorAction, CliError> {
    match hom {
        None => {
            if let Some(r) = rank {
                if r != n {
                    return Err(CliError::invalid(format!(
                        "--rank {r} differs from n={n}; give --hom to pull back to another rank"
                    )));
                }
            }
            Ok(MilnorAction::standard(m, n)?)
        }
        Some(subsets) => {
            let top = subsets.iter().flatten().copied().max().unwrap_or(1);
            let r = rank.unwrap_or(top);
            if top > r {
                return Err(CliError::invalid(format!("--hom uses index {top} above rank {r}")));
            }
            if subsets.len() != n {
                return Err(CliError::invalid(format!(
                    "--hom lists {} subsets, expected n={n}",
                    subsets.len()
                )));
            }
            let h = GroupHom::from_subsets(r, subsets)?;
            Ok(MilnorAction::pulled_back(m, n, h)?)
        }
    }
}

fn action_from_spec(spec: &ClassSpec, force: bool) -> Result<MilnorAction, CliError> {
    let hom = spec.hom.as_deref().map(parse_hom).transpose()?;
    let action = build_action(spec.m, spec.n, hom.as_deref(), spec.rank)?;
    if !force && action.rank() > MAX_RANK_GUARD {
        return Err(CliError::invalid(format!(
            "rank {} exceeds the guard {MAX_RANK_GUARD}; pass --force",
            action.rank()
        )));
    }
    Ok(action)
}

/// The `class` object of the JSON schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub m: usize,
    pub n: usize,
    pub rank: usize,
    pub hom: Option<Vec<Vec<usize>>>,
    pub degree: usize,
    pub monomials: Vec<String>,
}

impl ClassJson {
    pub fn new(action: &MilnorAction, eta: &RepElement) -> Self {
        ClassJson {
            m: action.m(),
            n: action.n(),
            rank: action.rank(),
            hom: action.hom().map(GroupHom::image_indices),
            degree: action.dimension(),
            monomials: eta.monomials().map(|m| m.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub k: u32,
    pub kind: CoefficientKind,
    pub witness_numerator: String,
    pub witness_denominator: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictJson {
    Proven,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyJson {
    pub class: ClassJson,
    pub certificate: Option<CertificateJson>,
    pub verdict: VerdictJson,
}

impl CertifyJson {
    pub fn new(action: &MilnorAction, eta: &RepElement, verdict: &Verdict) -> Self {
        CertifyJson {
            class: ClassJson::new(action, eta),
            certificate: verdict.certificate().map(certificate_json),
            verdict: if verdict.is_proven() {
                VerdictJson::Proven
            } else {
                VerdictJson::Inconclusive
            },
        }
    }

    /// Pretty-printed document with a trailing newline, as `certify` prints it.
    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct ClassReportJson {
    class: ClassJson,
    monomial_count: usize,
    nonbounding: bool,
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_class(a: &ClassArgs) -> Result<Outcome, CliError> {
    let action = action_from_spec(&a.spec, a.common.force)?;
    let eta = eta_fixed_point_sum(&action)?;
    let report = ClassReportJson {
        class: ClassJson::new(&action, &eta),
        monomial_count: eta.len(),
        nonbounding: is_nonbounding(&eta),
    };
    let out = match a.common.output {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Text => {
            let mut s = String::new();
            writeln!(s, "class H({},{}) rank {} degree {}", action.m(), action.n(), action.rank(), action.dimension()).unwrap();
            writeln!(s, "hom: {}", action.hom().map_or("standard".to_string(), |h| h.to_string())).unwrap();
            writeln!(s, "monomials: {}", report.monomial_count).unwrap();
            writeln!(s, "nonbounding: {}", report.nonbounding).unwrap();
            writeln!(s, "eta: {eta}").unwrap();
            s
        }
    };
    Ok(Outcome::ok(EXIT_OK, out))
}

fn certificate_json(c: &crate::criteria::Certificate) -> CertificateJson {
    CertificateJson {
        k: c.k,
        kind: c.kind,
        witness_numerator: c.witness.numerator().to_string(),
        witness_denominator: c.witness.denominator().forms().map(|f| f.to_string()).collect(),
    }
}

fn cmd_certify(a: &CertifyArgs) -> Result<Outcome, CliError> {
    let action = action_from_spec(&a.spec, a.common.force)?;
    let d = action.dimension();
    let policy = match (a.k_min, a.k_max) {
        (None, None) => SearchPolicy::default_for(action.m(), d),
        (lo, hi) => {
            let lo = lo.unwrap_or(d as u32 + 1);
            let hi = hi.unwrap_or(MAX_K_GUARD);
            if lo > hi {
                return Err(CliError::invalid(format!("empty k range {lo}..={hi}")));
            }
            SearchPolicy::range(lo, hi)
        }
    };
    if let Some(&k) = policy.candidates().iter().find(|&&k| k as usize <= d) {
        return Err(CliError::invalid(format!("k={k} must exceed the degree {d}")));
    }
    if !a.common.force {
        if let Some(&k) = policy.candidates().iter().find(|&&k| k > MAX_K_GUARD) {
            return Err(CliError::invalid(format!(
                "k={k} exceeds the guard {MAX_K_GUARD}; pass --force"
            )));
        }
    }
    let eta = action.eta()?;
    let verdict = certify_action(&action, &policy)?;
    let report = CertifyJson::new(&action, &eta, &verdict);
    let code = if verdict.is_proven() { EXIT_OK } else { EXIT_INCONCLUSIVE };
    let out = match a.common.output {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Text => {
            let mut s = String::new();
            writeln!(s, "class H({},{}) rank {} degree {}", action.m(), action.n(), action.rank(), d).unwrap();
            match verdict.certificate() {
                Some(c) => {
                    writeln!(s, "verdict: proven").unwrap();
                    writeln!(s, "k: {}", c.k).unwrap();
                    writeln!(s, "coefficient: {}", c.kind.b_index(c.k)).unwrap();
                    writeln!(s, "witness: {}", c.witness).unwrap();
                }
                None => writeln!(s, "verdict: inconclusive (tried k in {:?})", policy.candidates()).unwrap(),
            }
            s
        }
    };
    Ok(Outcome::ok(code, out))
}

/// Re-derives the witness of a serialized certificate and compares it
/// string-for-string. `Ok(false)` means the document does not check out.
pub fn recheck_certificate_json(doc: &str) -> Result<bool, CliError> {
    let parsed: CertifyJson =
        serde_json::from_str(doc).map_err(|e| CliError::invalid(format!("bad certificate JSON: {e}")))?;
    let Some(cert) = parsed.certificate else {
        return Ok(false);
    };
    let c = &parsed.class;
    let action = build_action(c.m, c.n, c.hom.as_deref(), Some(c.rank))?;
    if cert.k as usize <= action.dimension() {
        return Ok(false);
    }
    let ctx = PolyContext::new(action.rank()).map_err(|e| CliError::invalid(e.to_string()))?;
    let numerator = Gf2Polynomial::parse(ctx, &cert.witness_numerator)
        .map_err(|e| CliError::invalid(e.to_string()))?;
    let forms = cert
        .witness_denominator
        .iter()
        .map(|f| LinearForm::parse(f))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::invalid(e.to_string()))?;
    let claimed = RationalFunction::new(numerator, FactoredDenominator::from_forms(forms))?;
    let fresh = b_coefficient(&action.eta()?, &cert.kind.b_index(cert.k))?;
    Ok(!fresh.is_zero()
        && fresh.numerator().to_string() == cert.witness_numerator
        && fresh.value_eq(&claimed)?)
}

fn verify_certificate(input: &str, common: &Common) -> Result<Outcome, CliError> {
    let doc = if input == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)
            .map_err(|e| CliError::invalid(format!("cannot read standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| CliError::invalid(format!("cannot read {input}: {e}")))?
    };
    let pass = recheck_certificate_json(&doc)?;
    Ok(render_checks(
        &[CheckLine {
            check: "certificate witness".to_string(),
            pass,
        }],
        common.output,
    ))
}

#[derive(Debug, Serialize)]
struct CheckLine {
    check: String,
    pass: bool,
}

fn render_checks(lines: &[CheckLine], format: OutputFormat) -> Outcome {
    let all = lines.iter().all(|l| l.pass);
    let out = match format {
        OutputFormat::Json => to_json(&serde_json::json!({ "checks": lines, "all_pass": all })),
        OutputFormat::Text => {
            let mut s = String::new();
            for l in lines {
                writeln!(s, "{} {}", if l.pass { "PASS" } else { "FAIL" }, l.check).unwrap();
            }
            writeln!(s, "{} of {} checks passed", lines.iter().filter(|l| l.pass).count(), lines.len()).unwrap();
            s
        }
    };
    Outcome::ok(if all { EXIT_OK } else { EXIT_FAILED }, out)
}

/// Value of `Σ_i y_i^k / Π_{j≠i}(y_i+y_j)` predicted for `n` variables:
/// the complete homogeneous symmetric polynomial of degree `k-n+1`, checked
/// here only up to degree 1.
fn expected_q(ctx: PolyContext, vars: &[usize], k: u32) -> Option<Gf2Polynomial> {
    let n = vars.len() as u32;
    if k + 1 < n {
        Some(ctx.zero())
    } else if k + 1 == n {
        Some(ctx.one())
    } else if k == n {
        let mut s = ctx.zero();
        for &v in vars {
            s = s.add(&ctx.var(v).ok()?).ok()?;
        }
        Some(s)
    } else {
        None
    }
}

pub fn lemma41_checks(n_max: usize) -> Result<Vec<(String, bool)>, CliError> {
    let mut lines = Vec::new();
    for n in 2..=n_max {
        lines.push((format!("lemma41.p n={n}"), lagrange_p(n)?.is_zero()));
    }
    for n in 1..=n_max {
        lines.push((format!("lemma41.ii n={n}"), lagrange_ii(n)?.is_zero()));
    }
    for n in 2..=n_max {
        let ctx = PolyContext::new(n).map_err(|e| CliError::invalid(e.to_string()))?;
        let vars: Vec<usize> = (1..=n).collect();
        for k in 0..=n as u32 {
            let got = lagrange_q(n, k)?;
            let want = expected_q(ctx, &vars, k).expect("k <= n");
            let pass = got.to_polynomial().map(|p| p == want).unwrap_or(false);
            lines.push((format!("lemma41.q n={n} k={k}"), pass));
        }
    }
    // (y_1 + y_{n+1}) · f(y_1..y_{n+1}) = f(y_1..y_n) + f(y_2..y_{n+1})
    for n in 2..n_max {
        let ctx = PolyContext::new(n + 1).map_err(|e| CliError::invalid(e.to_string()))?;
        let all: Vec<usize> = (1..=n + 1).collect();
        let head = &all[..n];
        let tail = &all[1..];
        let outer = ctx
            .linear_form_poly(LinearForm::from_vars(&[1, n + 1]).expect("nonempty"))
            .map_err(|e| CliError::invalid(e.to_string()))?;
        let lhs = lagrange_p_over(ctx, &all)?.mul_polynomial(&outer)?;
        let rhs = lagrange_p_over(ctx, head)?.add(&lagrange_p_over(ctx, tail)?)?;
        lines.push((format!("lemma41.p-recursion n={n}"), lhs.value_eq(&rhs)?));
        for k in 0..=(n as u32 + 1) {
            let lhs = lagrange_q_over(ctx, &all, k)?.mul_polynomial(&outer)?;
            let rhs = lagrange_q_over(ctx, head, k)?.add(&lagrange_q_over(ctx, tail, k)?)?;
            lines.push((format!("lemma41.q-recursion n={n} k={k}"), lhs.value_eq(&rhs)?));
        }
    }
    Ok(lines)
}

fn verify_lemma41(n_max: usize, common: &Common) -> Result<Outcome, CliError> {
    if n_max < 2 {
        return Err(CliError::invalid("--n-max must be at least 2"));
    }
    if !common.force && n_max > MAX_LEMMA_N_GUARD {
        return Err(CliError::invalid(format!(
            "--n-max {n_max} exceeds the guard {MAX_LEMMA_N_GUARD}; pass --force"
        )));
    }
    let lines: Vec<CheckLine> = lemma41_checks(n_max)?
        .into_iter()
        .map(|(check, pass)| CheckLine { check, pass })
        .collect();
    Ok(render_checks(&lines, common.output))
}

fn verify_integrality(
    spec: &OptionalClassSpec,
    projective: Option<usize>,
    max_weight: u32,
    common: &Common,
) -> Result<Outcome, CliError> {
    let (label, e, d) = match (projective, spec.m, spec.n) {
        (Some(k), None, None) => {
            if !common.force && k > MAX_RANK_GUARD {
                return Err(CliError::invalid(format!("rank {k} exceeds the guard; pass --force")));
            }
            (format!("RP^{k}"), projective_class(k)?, k)
        }
        (None, Some(m), Some(n)) => {
            let action = action_from_spec(
                &ClassSpec {
                    m,
                    n,
                    hom: spec.hom.clone(),
                    rank: spec.rank,
                },
                common.force,
            )?;
            (format!("H({m},{n})"), action.eta()?, action.dimension())
        }
        _ => {
            return Err(CliError::invalid(
                "give either --m and --n, or --projective",
            ))
        }
    };
    if !common.force && max_weight > d as u32 + MAX_WEIGHT_SLACK {
        return Err(CliError::invalid(format!(
            "--max-weight {max_weight} exceeds d+{MAX_WEIGHT_SLACK} = {}; pass --force",
            d as u32 + MAX_WEIGHT_SLACK
        )));
    }
    let report = check_integrality(&e, d, max_weight)?;
    let lines: Vec<CheckLine> = report
        .entries
        .iter()
        .map(|en| CheckLine {
            check: format!(
                "integrality {label} {} ({})",
                en.b,
                match en.expectation {
                    IntegralityExpectation::Zero => "zero",
                    IntegralityExpectation::Polynomial => "polynomial",
                }
            ),
            pass: en.passed,
        })
        .collect();
    Ok(render_checks(&lines, common.output))
}

fn verify_formula(n_max: usize, common: &Common) -> Result<Outcome, CliError> {
    if n_max == 0 {
        return Err(CliError::invalid("--n-max must be at least 1"));
    }
    if !common.force && n_max > MAX_RANK_GUARD {
        return Err(CliError::invalid(format!(
            "--n-max {n_max} exceeds the guard {MAX_RANK_GUARD}; pass --force"
        )));
    }
    let mut lines = Vec::new();
    for n in 1..=n_max {
        for m in 1..=n {
            let sum = eta_fixed_point_sum(&MilnorAction::standard(m, n)?)?;
            let closed = eta_closed_formula(m, n)?;
            lines.push(CheckLine {
                check: format!("formula H({m},{n})"),
                pass: sum == closed,
            });
        }
    }
    Ok(render_checks(&lines, common.output))
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub degree: usize,
    pub m: usize,
    pub n: usize,
    pub hom: Vec<Vec<usize>>,
    pub verdict: VerdictJson,
    pub k: Option<u32>,
    pub kind: Option<CoefficientKind>,
}

fn certify_row(action: &MilnorAction) -> Result<TableRow, CliError> {
    let policy = SearchPolicy::default_for(action.m(), action.dimension());
    let v = certify_action(action, &policy)?;
    Ok(TableRow {
        degree: action.dimension(),
        m: action.m(),
        n: action.n(),
        hom: action.hom().map(GroupHom::image_indices).unwrap_or_default(),
        verdict: if v.is_proven() {
            VerdictJson::Proven
        } else {
            VerdictJson::Inconclusive
        },
        k: v.certificate().map(|c| c.k),
        kind: v.certificate().map(|c| c.kind),
    })
}

/// Actions `H(m,n)` over `(Z_2)^rank` with `S_1 = {1}`, `S_2..S_n` drawn
/// from `{2..rank}`, for every `1 <= m <= n-2`.
pub fn ind2_actions(rank: usize, max_degree: Option<usize>) -> Result<Vec<MilnorAction>, CliError> {
    if rank == 0 {
        return Err(CliError::invalid("--rank must be positive"));
    }
    let max_n = (1usize << (rank - 1)) - 1;
    let mut out = Vec::new();
    for n in 3..=max_n {
        let hom = family_hom(rank, 1, n, 2)?;
        for m in 1..=n - 2 {
            if max_degree.is_some_and(|cap| m + n - 1 > cap) {
                continue;
            }
            out.push(MilnorAction::pulled_back(m, n, hom.clone())?);
        }
    }
    out.sort_by_key(|a| (a.dimension(), a.m()));
    Ok(out)
}

fn render_rows(rows: &[TableRow]) -> String {
    let mut s = String::new();
    writeln!(s, "{:>6} {:>3} {:>3}  {:<12} {:>4} {:<7} hom", "degree", "m", "n", "verdict", "k", "kind").unwrap();
    for r in rows {
        let hom: Vec<String> = r
            .hom
            .iter()
            .map(|s| s.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect();
        writeln!(
            s,
            "{:>6} {:>3} {:>3}  {:<12} {:>4} {:<7} {}",
            r.degree,
            r.m,
            r.n,
            format!("{:?}", r.verdict).to_lowercase(),
            r.k.map_or("-".into(), |k| k.to_string()),
            r.kind.map_or("-".into(), |k| k.to_string()),
            hom.join(";")
        )
        .unwrap();
    }
    s
}

fn cmd_table(a: &TableArgs) -> Result<Outcome, CliError> {
    if !a.common.force && a.rank > MAX_RANK_GUARD {
        return Err(CliError::invalid(format!(
            "rank {} exceeds the guard {MAX_RANK_GUARD}; pass --force",
            a.rank
        )));
    }
    match a.mode {
        TableMode::Ind2 => {
            let actions = ind2_actions(a.rank, a.max_degree)?;
            let rows = actions
                .par_iter()
                .map(certify_row)
                .collect::<Result<Vec<_>, _>>()?;
            let out = match a.common.output {
                OutputFormat::Json => to_json(&serde_json::json!({ "rank": a.rank, "rows": rows })),
                OutputFormat::Text => {
                    let mut s = format!("rank {}: {} rows\n", a.rank, rows.len());
                    s.push_str(&render_rows(&rows));
                    s
                }
            };
            Ok(Outcome::ok(EXIT_OK, out))
        }
        TableMode::Linind => {
            let (Some(i), Some(m), Some(n)) = (a.i, a.m, a.n) else {
                return Err(CliError::invalid("linind needs --i, --m and --n"));
            };
            let actions = linind_actions(a.rank, i, m, n)?;
            let rows = actions
                .par_iter()
                .map(certify_row)
                .collect::<Result<Vec<_>, _>>()?;
            let etas = actions
                .iter()
                .map(MilnorAction::eta)
                .collect::<Result<Vec<_>, _>>()?;
            let independent = verify_linear_independence(&etas)?;
            let out = match a.common.output {
                OutputFormat::Json => to_json(&serde_json::json!({
                    "rank": a.rank,
                    "family_size": rows.len(),
                    "independent": independent,
                    "rows": rows,
                })),
                OutputFormat::Text => {
                    let mut s = format!(
                        "rank {} family of {} classes, independent: {}\n",
                        a.rank,
                        rows.len(),
                        independent
                    );
                    s.push_str(&render_rows(&rows));
                    s
                }
            };
            Ok(Outcome::ok(EXIT_OK, out))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_syntax() {
        assert_eq!(parse_hom("1;2;3,4").unwrap(), vec![vec![1], vec![2], vec![3, 4]]);
        assert_eq!(parse_hom("1;;2").unwrap(), vec![vec![1], vec![], vec![2]]);
        assert!(parse_hom("1;x").is_err());
        assert!(parse_hom("0").is_err());
    }

    #[test]
    fn build_action_checks() {
        assert!(build_action(1, 3, None, Some(4)).is_err());
        assert!(build_action(1, 3, Some(&[vec![1], vec![2]]), None).is_err());
        assert!(build_action(1, 3, Some(&[vec![1], vec![5], vec![2]]), Some(4)).is_err());
        let a = build_action(1, 3, Some(&[vec![1], vec![2], vec![3, 4]]), None).unwrap();
        assert_eq!(a.rank(), 4);
    }

    #[test]
    fn ind2_rows_for_small_ranks() {
        assert!(ind2_actions(2, None).unwrap().is_empty());
        let acts = ind2_actions(4, None).unwrap();
        assert_eq!(acts.len(), 15);
        assert_eq!(acts.iter().map(|a| a.dimension()).max(), Some(11));
    }
}
