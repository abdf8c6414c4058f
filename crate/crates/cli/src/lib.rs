//! Command-line front end: build named operators, run verification suites
//! and exchange operators as JSON.

pub mod report;
pub mod target;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use cgybe::arith::{parse_coeff, RatFn, RingCtx};
use cgybe::check::{Mode, Outcome};
use cgybe::dybe::{
    cob_intertwine_outcome_with, det, dybe_outcome, from_homop, intertwine, perturbed_rho,
    standard_rho, standard_solution, BetaArgument, DynOp,
};
use cgybe::families::{eta_op, flip_op, id_op};
use cgybe::genfun::{classify, genfun, triple_expansion_outcome_mode, GenFnPair};
use cgybe::io::Operator;
use cgybe::randomized::{
    at_random_point, dybe_outcome_random, hecke_outcome_random, intertwine_random, ybe_outcome_random,
};
use cgybe::tensor::{hecke_outcome, ybe_coefficient_outcome, ybe_outcome, HomOp};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use report::{mode_label, Detail, VerifyReport};
use target::{homogeneous, load_file, parse_pair, FamilySpec};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Core(cgybe::Error),
}

impl From<cgybe::Error> for CliError {
    fn from(e: cgybe::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Core(e) => write!(f, "error: {e}"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    #[default]
    Exact,
    Random,
}

#[derive(Parser, Debug)]
#[command(name = "cgybe", version, about = "Exact verification of Yang-Baxter type identities")]
pub struct Cli {
    /// Decide identities symbolically or at a seeded random point.
    #[arg(long, global = true, value_enum, default_value_t)]
    pub mode: ModeArg,
    /// Seed for random mode.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write generated or exported operators here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Report wall time (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a named operator in the JSON operator format.
    Gen(FamilySpec),
    /// Run a verification check on a file or named operator.
    Verify(VerifyArgs),
    /// Print the generating function G_{i,j}(x) of a named operator.
    Genfun(GenfunArgs),
    /// Evaluate the generating-function criteria for a pair (alpha, beta).
    Classify(ClassifyArgs),
    /// Re-serialize an operator canonically; in random mode, with every
    /// generator replaced by its seeded value.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Ybe,
    Gfybe,
    Hecke,
    Dybe,
    Cob,
    TripleExpansion,
    EtaIdentities,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: CheckKind,
    /// Operator file in the JSON operator format.
    pub target: Option<PathBuf>,
    #[command(flatten)]
    pub spec: FamilySpec,
    /// alpha(x) for gfybe and triple-expansion, in q, p, a, b, c, x.
    #[arg(long)]
    pub alpha: Option<String>,
    /// beta(x) for gfybe and triple-expansion, in q, p, a, b, c, x.
    #[arg(long)]
    pub beta: Option<String>,
    /// First Hecke constant, in the target's generators.
    #[arg(long)]
    pub hecke_a: Option<String>,
    /// Second Hecke constant, in the target's generators.
    #[arg(long)]
    pub hecke_b: Option<String>,
    /// For cob: use the Cremmer-Gervais operator with q inverted.
    #[arg(long)]
    pub negative_control: bool,
}

#[derive(Args, Debug)]
pub struct GenfunArgs {
    #[command(flatten)]
    pub spec: FamilySpec,
    #[arg(long)]
    pub i: usize,
    #[arg(long)]
    pub j: usize,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub alpha: String,
    #[arg(long)]
    pub beta: String,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    /// Operator file; omit to export a named operator.
    pub target: Option<PathBuf>,
    #[command(flatten)]
    pub spec: FamilySpec,
}

fn mode_of(cli: &Cli) -> Result<Mode, CliError> {
    match cli.mode {
        ModeArg::Exact => Ok(Mode::Exact),
        ModeArg::Random => cli
            .seed
            .map(|seed| Mode::Random { seed })
            .ok_or_else(|| CliError::Usage("--seed is required in random mode".into())),
    }
}

fn emit(cli: &Cli, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string())),
    }
}

fn print(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

/// Runs a parsed command line, writing normal output to `out` and
/// diagnostics to `err`. Returns the process exit code: 0 when every
/// requested check passes, 1 when one fails, 2 on usage or input errors.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    let mode = mode_of(cli)?;
    match &cli.command {
        Command::Gen(spec) => {
            let r = spec.resolve()?;
            emit(cli, &r.op.to_json(), out)?;
            Ok(true)
        }
        Command::Export(args) => {
            let op = match &args.target {
                Some(p) => load_file(p)?,
                None => args.spec.resolve()?.op,
            };
            let op = match mode {
                Mode::Exact => op,
                Mode::Random { seed } => specialize(op, seed)?,
            };
            emit(cli, &op.to_json(), out)?;
            Ok(true)
        }
        Command::Genfun(args) => {
            let r = args.spec.resolve()?;
            let g = homogeneous(r.op, "genfun")?;
            let f = genfun(&g, args.i, args.j)?;
            if cli.json {
                print(out, &to_json(&serde_json::json!({
                    "target": r.label, "i": args.i, "j": args.j, "genfun": f.to_string()
                })))?;
            } else {
                print(out, &format!("{f}\n"))?;
            }
            Ok(true)
        }
        Command::Classify(args) => {
            let pair = parse_pair(&args.alpha, &args.beta)?;
            let c = classify(&pair, mode)?;
            if cli.json {
                let (m, seed) = mode_label(mode);
                print(out, &to_json(&serde_json::json!({
                    "alpha": args.alpha, "beta": args.beta, "mode": m, "seed": seed,
                    "beta_zero": c.beta_zero, "cond1": c.cond1, "cond2": c.cond2, "ybe": c.ybe
                })))?;
            } else {
                let v = |b: bool| if b { "pass" } else { "fail" };
                let mut s = format!("beta = 0: {}\n", if c.beta_zero { "yes" } else { "no" });
                s += &format!("cond1: {}\n", v(c.cond1.holds));
                if let Some(w) = &c.cond1.witness {
                    s += &format!("  {w}\n");
                }
                s += &format!("cond2: {}\n", v(c.cond2.holds));
                if let Some(w) = &c.cond2.witness {
                    s += &format!("  {w}\n");
                }
                s += &format!("gfybe: {}\n", v(c.ybe));
                print(out, &s)?;
            }
            Ok(c.ybe)
        }
        Command::Verify(args) => {
            let start = Instant::now();
            let mut report = verify(args, mode)?;
            if cli.timing {
                report.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            let text = if cli.json { to_json(&report) } else { report.to_string() };
            print(out, &text)?;
            Ok(report.passed())
        }
    }
}

fn specialize(op: Operator, seed: u64) -> Result<Operator, CliError> {
    Ok(match op {
        Operator::Homogeneous(g) => {
            let ctx = g.ctx().clone();
            Operator::Homogeneous(at_random_point(&ctx, seed, |p| g.specialize(p))?)
        }
        Operator::Dynamical(r) => {
            let ctx = r.ctx().clone();
            Operator::Dynamical(at_random_point(&ctx, seed, |p| r.specialize(p))?)
        }
    })
}

struct Target {
    op: Operator,
    label: String,
    hecke: Option<(RatFn, RatFn)>,
}

fn operator_target(args: &VerifyArgs) -> Result<Target, CliError> {
    match &args.target {
        Some(p) => Ok(Target { op: load_file(p)?, label: p.display().to_string(), hecke: None }),
        None => {
            let r = args.spec.resolve()?;
            Ok(Target { op: r.op, label: r.label, hecke: r.hecke })
        }
    }
}

fn pair_target(args: &VerifyArgs) -> Result<(GenFnPair, String), CliError> {
    match (&args.alpha, &args.beta) {
        (Some(a), Some(b)) => Ok((parse_pair(a, b)?, format!("alpha = {a}, beta = {b}"))),
        (None, None) => args.spec.pair(),
        _ => Err(CliError::Usage("--alpha and --beta go together".into())),
    }
}

/// A degree-two dynamical operator, lifting torus-free homogeneous ones.
fn dynamical(op: Operator) -> Result<DynOp, CliError> {
    match op {
        Operator::Dynamical(r) if r.degree() == 2 => Ok(r),
        Operator::Dynamical(r) => {
            Err(CliError::Usage(format!("dybe needs a degree-2 operator, got degree {}", r.degree())))
        }
        Operator::Homogeneous(g) => Ok(from_homop(&g)?),
    }
}

fn verify(args: &VerifyArgs, mode: Mode) -> Result<VerifyReport, CliError> {
    let name = args.check.to_possible_value().expect("named").get_name().to_string();
    match args.check {
        CheckKind::Ybe => {
            let t = operator_target(args)?;
            let g = homogeneous(t.op, &name)?;
            let outcome = match mode {
                Mode::Exact => {
                    let a = ybe_outcome(&g)?;
                    let b = ybe_coefficient_outcome(&g)?;
                    if a.holds != b.holds {
                        return Err(CliError::Core(cgybe::Error::InvalidOperator(
                            "composition and coefficient routes disagree".into(),
                        )));
                    }
                    a
                }
                Mode::Random { seed } => ybe_outcome_random(&g, seed)?,
            };
            Ok(VerifyReport::new(&name, t.label, mode, outcome))
        }
        CheckKind::Hecke => {
            let t = operator_target(args)?;
            let g = homogeneous(t.op, &name)?;
            let (a, b) = match (&args.hecke_a, &args.hecke_b, t.hecke) {
                (Some(a), Some(b), _) => (parse_coeff(a, g.ctx())?, parse_coeff(b, g.ctx())?),
                (None, None, Some(ab)) => ab,
                _ => {
                    return Err(CliError::Usage(
                        "hecke needs --hecke-a and --hecke-b for this target".into(),
                    ))
                }
            };
            let outcome = match mode {
                Mode::Exact => hecke_outcome(&g, &a, &b)?,
                Mode::Random { seed } => hecke_outcome_random(&g, &a, &b, seed)?,
            };
            let label = format!("{}; (g - {a})(g + ({a}) - ({b})) = 0", t.label);
            Ok(VerifyReport::new(&name, label, mode, outcome))
        }
        CheckKind::Gfybe => {
            let (pair, label) = pair_target(args)?;
            let c = classify(&pair, mode)?;
            let witness = if c.ybe { None } else { c.cond1.witness.clone().or(c.cond2.witness.clone()) };
            let mut r = VerifyReport::new(&name, label, mode, Outcome { holds: c.ybe, witness });
            r.details = vec![
                Detail { name: "beta = 0".into(), holds: c.beta_zero },
                Detail { name: "cond1".into(), holds: c.cond1.holds },
                Detail { name: "cond2".into(), holds: c.cond2.holds },
            ];
            Ok(r)
        }
        CheckKind::TripleExpansion => {
            let (pair, label) = pair_target(args)?;
            let n = args.spec.require_n()?;
            let outcome = triple_expansion_outcome_mode(&pair, n, mode)?;
            Ok(VerifyReport::new(&name, format!("{label}, n = {n}"), mode, outcome))
        }
        CheckKind::Dybe => {
            let t = operator_target(args)?;
            let r = dynamical(t.op)?;
            let outcome = match mode {
                Mode::Exact => dybe_outcome(&r)?,
                Mode::Random { seed } => dybe_outcome_random(&r, seed)?,
            };
            Ok(VerifyReport::new(&name, t.label, mode, outcome))
        }
        CheckKind::Cob => cob(args, mode),
        CheckKind::EtaIdentities => eta_identities(args, mode),
    }
}

fn cob(args: &VerifyArgs, mode: Mode) -> Result<VerifyReport, CliError> {
    let (rho, label) = match &args.target {
        Some(p) => (homogeneous(load_file(p)?, "cob")?, p.display().to_string()),
        None => {
            let n = args.spec.require_n()?;
            if args.negative_control {
                (perturbed_rho(n)?, format!("n = {n}, Cremmer-Gervais with q inverted"))
            } else {
                (standard_rho(n)?, format!("n = {n}, standard Cremmer-Gervais"))
            }
        }
    };
    let n = rho.n();
    let r = standard_solution(n, BetaArgument::Transposed)?;
    let outcome = match mode {
        Mode::Exact => {
            if args.target.is_some() {
                intertwine(&r, &rho)?
            } else {
                cob_intertwine_outcome_with(n, &rho)?
            }
        }
        Mode::Random { seed } => intertwine_random(&r, &rho, seed)?,
    };
    let det_nonzero = !det(&cgybe::dybe::cob_matrix(n)?)?.is_zero();
    let intertwines = outcome.holds;
    let outcome = if det_nonzero { outcome } else { Outcome { holds: false, ..outcome } };
    let mut rep = VerifyReport::new("cob", label, mode, outcome);
    rep.details = vec![
        Detail { name: "R A1 A2 = A1 A2 rho".into(), holds: intertwines },
        Detail { name: "det A != 0".into(), holds: det_nonzero },
    ];
    Ok(rep)
}

fn eta_identities(args: &VerifyArgs, mode: Mode) -> Result<VerifyReport, CliError> {
    let n = args.spec.require_n()?;
    let c = RingCtx::empty();
    let (eta, p, id) = (eta_op(n, &c)?, flip_op(n, &c)?, id_op(n, &c)?);
    let neg = |g: &HomOp| g.scale(&RatFn::integer(&c, -1));
    let checks: Vec<(&str, HomOp, HomOp)> = vec![
        ("eta*eta = eta", eta.compose(&eta)?, eta.clone()),
        ("eta*P = -eta", eta.compose(&p)?, neg(&eta)?),
        ("P*eta = eta + P - I", p.compose(&eta)?, eta.try_add(&p)?.try_sub(&id)?),
    ];
    let mut details = Vec::new();
    let mut witness = None;
    for (name, l, r) in &checks {
        let diff = l.first_difference(r)?;
        if let (None, Some(((i, j, k), a, b))) = (&witness, &diff) {
            witness = Some(cgybe::check::Witness::new(format!("{name} at (i,j,k) = ({i},{j},{k})"), a, b));
        }
        details.push(Detail { name: (*name).into(), holds: diff.is_none() });
    }
    let holds = witness.is_none();
    let plus = p.compose(&eta)?.op_eq(&eta.try_add(&p)?.try_add(&id)?)?;
    details.push(Detail { name: "P*eta = eta + P + I (opposite sign, expected to fail)".into(), holds: plus });
    // The operators are parameter-free, so random mode coincides with exact.
    let mut r = VerifyReport::new("eta-identities", format!("n = {n}"), mode, Outcome { holds, witness });
    r.details = details;
    Ok(r)
}

