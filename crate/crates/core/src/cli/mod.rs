//! The `lgorbit` command line: argument grammar, dispatch and exit codes.
//!
//! Exit codes: `0` pass, `1` verification failure, `2` usage or precondition
//! error, `3` Gröbner pair cap exceeded. Output is canonical JSON.

mod checks;
mod report;

pub use checks::{run_all, Check, CheckContext};
pub use report::{canonical_json, emit_report, strip_timing, VerificationReport};

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational};
use crate::lgfib::critical_points;
use crate::liecore::FormSpec;
use crate::orbit::{
    adjoint_point, default_sample_length, orbit_membership, orbit_polynomial, sample_sl_indexed,
    tensor_point, OrbitSpec,
};
use crate::polyideal::{orbit_ideal, GroebnerOptions, IdealFile, OrderKind, DEFAULT_PAIR_CAP};
use crate::segre::segre_coords;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "lgorbit", version, about = "Exact LG models on minimal adjoint orbits of sl(n+1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, clap::Args)]
struct CommonArgs {
    /// Rank: the orbit lives in sl(n+1).
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Diagonal of H, comma-separated rationals summing to zero.
    #[arg(long, global = true, allow_hyphen_values = true)]
    h: Option<String>,
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Scale::Trace)]
    scale: Scale,
    /// Maximum number of S-pairs per Gröbner computation.
    #[arg(long, global = true, default_value_t = DEFAULT_PAIR_CAP)]
    cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Scale {
    Trace,
    Killing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Lex,
    Grlex,
    Grevlex,
}

impl From<OrderArg> for OrderKind {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => OrderKind::Lex,
            OrderArg::Grlex => OrderKind::GradedLex,
            OrderArg::Grevlex => OrderKind::GradedRevLex,
        }
    }
}

fn order_name(kind: OrderKind) -> &'static str {
    match kind {
        OrderKind::Lex => "lex",
        OrderKind::GradedLex => "grlex",
        OrderKind::GradedRevLex => "grevlex",
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Describe or sample the orbit.
    Orbit {
        #[command(subcommand)]
        action: OrbitAction,
    },
    /// List the critical points of f_H with values and Hessians.
    Critical,
    /// Run one verification check.
    Verify {
        #[arg(value_enum)]
        check: CheckArg,
    },
    /// Reduced Gröbner basis of an ideal file.
    Groebner {
        file: PathBuf,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
    },
}

#[derive(Debug, Subcommand)]
enum OrbitAction {
    Info,
    Sample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Adjugate,
    TraceOne,
    Ratmap,
    Hessian,
    Symplectic,
    Lagrangian,
    Charts,
    Incidence,
    FiberSl2,
    Segre,
    All,
}

impl CheckArg {
    fn check(self) -> Option<Check> {
        Some(match self {
            CheckArg::Adjugate => Check::Adjugate,
            CheckArg::TraceOne => Check::TraceOne,
            CheckArg::Ratmap => Check::Ratmap,
            CheckArg::Hessian => Check::Hessian,
            CheckArg::Symplectic => Check::Symplectic,
            CheckArg::Lagrangian => Check::Lagrangian,
            CheckArg::Charts => Check::Charts,
            CheckArg::Incidence => Check::Incidence,
            CheckArg::FiberSl2 => Check::FiberSl2,
            CheckArg::Segre => Check::Segre,
            CheckArg::All => return None,
        })
    }
}

/// Parses `--h`; the list must have `n+1` entries summing to zero.
pub fn parse_h(text: &str, n: usize) -> Result<Vec<BigRational>> {
    let values: Vec<BigRational> = text
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<_>>()?;
    if values.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: values.len(),
        });
    }
    let sum: BigRational = values.iter().sum();
    if !sum.is_zero() {
        return Err(Error::NotTraceZero(format_rational(&sum)));
    }
    Ok(values)
}

fn build_spec(common: &CommonArgs) -> Result<OrbitSpec> {
    if common.n == 0 {
        return Err(Error::Invalid("--n must be at least 1".into()));
    }
    match &common.h {
        Some(text) => OrbitSpec::minimal(common.n, &parse_h(text, common.n)?),
        None => Ok(OrbitSpec::minimal_default(common.n)),
    }
}

fn build_context(common: &CommonArgs) -> Result<CheckContext> {
    let form = match common.scale {
        Scale::Trace => FormSpec::trace(),
        Scale::Killing => FormSpec::killing(common.n),
    };
    Ok(CheckContext {
        spec: build_spec(common)?,
        samples: common.samples,
        seed: common.seed,
        form,
        options: GroebnerOptions {
            pair_cap: common.cap,
        },
    })
}

fn lambdas_json(spec: &OrbitSpec) -> Value {
    Value::Array(
        spec.lambdas()
            .iter()
            .map(|l| Value::String(format_rational(l)))
            .collect(),
    )
}

fn scale_name(s: Scale) -> &'static str {
    match s {
        Scale::Trace => "trace",
        Scale::Killing => "killing",
    }
}

fn orbit_info(common: &CommonArgs) -> Result<Value> {
    let spec = build_spec(common)?;
    let ideal = orbit_ideal(&spec)?;
    let poly = orbit_polynomial(&spec);
    Ok(json!({
        "command": "orbit info",
        "n": spec.n(),
        "h0": spec.h0().mat().to_json_value(),
        "h": lambdas_json(&spec),
        "complex_dimension": 2 * spec.n(),
        "regular": spec.is_regular(),
        "repeated_eigenvalues": spec.repeated_eigenvalues(),
        "minimal_polynomial": poly.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "orbit_ideal": {
            "variables": ideal.variables(),
            "generators": ideal.to_strings(OrderKind::GradedRevLex),
        },
        "paper_anchor": "the minimal orbit is cut out by (A - n)(A + 1) = 0 in sl(n+1)",
    }))
}

fn orbit_sample(common: &CommonArgs) -> Result<Value> {
    let spec = build_spec(common)?;
    let n = spec.n();
    let mut points = Vec::with_capacity(common.samples);
    for k in 0..common.samples {
        let g = sample_sl_indexed(n, common.seed, k as u64, default_sample_length(n));
        let a = adjoint_point(&g, &spec)?;
        let t = tensor_point(&g);
        let v: Vec<String> = t.v().iter().map(|c| c.to_string()).collect();
        let eps: Vec<String> = t.eps().iter().map(|c| c.to_string()).collect();
        points.push(json!({
            "index": k,
            "g": g.mat().to_json_value(),
            "point": a.mat().to_json_value(),
            "v": v,
            "eps": eps,
            "segre": segre_coords(&g).to_string(),
            "on_orbit": orbit_membership(&a, &spec)?,
        }));
    }
    Ok(json!({
        "command": "orbit sample",
        "n": n,
        "seed": common.seed,
        "sample_count": common.samples,
        "points": points,
        "paper_anchor": "orbit points Ad(g) H0 and their tensor model g e1 (x) e1* g^-1",
    }))
}

fn critical(common: &CommonArgs) -> Result<Value> {
    let ctx = build_context(common)?;
    let data = critical_points(&ctx.spec, &ctx.form)?;
    let points: Vec<Value> = data
        .iter()
        .map(|c| {
            json!({
                "chart": c.index + 1,
                "point": c.point.mat().to_json_value(),
                "f_value": c.f_value.to_string(),
                "r_value": c.r_value.to_string(),
                "hessian": c.hessian.to_json_value(),
                "hessian_det": c.hessian.det().to_string(),
                "nondegenerate": c.nondegenerate,
            })
        })
        .collect();
    let f_values: Vec<String> = data.iter().map(|c| c.f_value.to_string()).collect();
    Ok(json!({
        "command": "critical",
        "n": ctx.n(),
        "h": lambdas_json(&ctx.spec),
        "scale": scale_name(common.scale),
        "critical_points": points,
        "f_values": f_values,
        "paper_anchor": "f_H has exactly n+1 critical points, the Weyl images of H0, all nondegenerate",
    }))
}

fn groebner(common: &CommonArgs, file: &PathBuf, order: Option<OrderArg>) -> Result<Value> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", file.display())))?;
    let parsed = IdealFile::from_json(&text)?;
    let kind = order.map(OrderKind::from).or(parsed.order).unwrap_or_default();
    let ideal = parsed.to_ideal()?;
    let basis = ideal.groebner(kind, GroebnerOptions { pair_cap: common.cap })?;
    let strings: Vec<String> = basis
        .iter()
        .map(|p| p.to_string_with(ideal.variables(), kind))
        .collect();
    Ok(json!({
        "variables": ideal.variables(),
        "order": order_name(kind),
        "basis": strings,
    }))
}

fn error_exit(e: &Error) -> (i32, String) {
    let (code, kind) = match e {
        Error::ResourceCap(_) => (EXIT_CAP, "resource-cap"),
        _ => (EXIT_USAGE, "precondition"),
    };
    (code, canonical_json(&json!({ "error": e.to_string(), "kind": kind })))
}

fn report_exit(r: Result<VerificationReport>) -> (i32, String) {
    match r {
        Ok(report) => {
            let code = if report.passed { EXIT_PASS } else { EXIT_FAIL };
            (code, emit_report(&report))
        }
        Err(e) => error_exit(&e),
    }
}

fn value_exit(v: Result<Value>) -> (i32, String) {
    match v {
        Ok(v) => (EXIT_PASS, canonical_json(&v)),
        Err(e) => error_exit(&e),
    }
}

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// code and the text for standard output.
pub fn run_command<S: AsRef<str>>(args: &[S]) -> (i32, String) {
    let argv = std::iter::once("lgorbit").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (EXIT_PASS, e.to_string()),
                _ => (
                    EXIT_USAGE,
                    canonical_json(&json!({ "error": e.to_string(), "kind": "usage" })),
                ),
            };
        }
    };
    let common = &cli.common;
    match &cli.command {
        Command::Orbit { action } => value_exit(match action {
            OrbitAction::Info => orbit_info(common),
            OrbitAction::Sample => orbit_sample(common),
        }),
        Command::Critical => value_exit(critical(common)),
        Command::Verify { check } => report_exit(build_context(common).and_then(|ctx| {
            match check.check() {
                Some(c) => c.run(&ctx),
                None => run_all(&ctx),
            }
        })),
        Command::Groebner { file, order } => value_exit(groebner(common, file, *order)),
    }
}
