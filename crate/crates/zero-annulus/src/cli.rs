//! Command-line front end: bound computation, oracle verification, exact
//! identity checking, parameter tuning, and benchmark sweeps.
//!
//! Machine-readable results go to standard output (one JSON record per line,
//! or CSV for `bench`); diagnostics go to standard error. Every f64 is
//! printed with 17 significant digits so downstream diffs are bit-stable.

use crate::bounds::{self, Annulus, Method, RadiusForm};
use crate::families::Family;
use crate::genfib::{self, ExactFibParams, FibParams};
use crate::oracle;
use crate::poly::Polynomial;
use crate::tuner::{self, TuneConfig, TunerError};
use crate::families;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BAD_PARAMS: i32 = 3;
pub const EXIT_CONTAINMENT: i32 = 4;
pub const EXIT_ORACLE: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "zero-annulus",
    version,
    about = "Annulus bounds for the zeros of complex polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute a zero-inclusion bound for one polynomial file
    Bound(BoundArgs),
    /// Compute a bound, find all roots, and check containment
    Verify(VerifyArgs),
    /// Check the F_{4n} binomial identity in exact rational arithmetic
    Identity(IdentityArgs),
    /// Tune the parameter triples to tighten the annulus of one polynomial
    Optimize(OptimizeArgs),
    /// Sweep seeded random polynomials and emit per-method tightness CSV
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    /// Polynomial file: JSON array of [re, im] pairs (or bare reals),
    /// ascending degree
    pub poly: PathBuf,
    /// One of: cauchy, db, tfib, general
    #[arg(long, default_value = "db")]
    pub method: String,
    /// Parameter for the tfib method; rationals like 3/8 are accepted
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub t: String,
    /// Outer triple a,b,c for the general method
    #[arg(long, default_value = "1,1,1", allow_hyphen_values = true)]
    pub outer: String,
    /// Inner triple u,v,w for the general method
    #[arg(long, default_value = "1,1,1", allow_hyphen_values = true)]
    pub inner: String,
    /// Fold the radius prefactors into every per-k candidate instead of
    /// applying them outside the k-th root (numerically equivalent)
    #[arg(long)]
    pub expanded: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub bound: BoundArgs,
    /// Root-iteration update tolerance
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Maximum root-iteration sweeps
    #[arg(long, default_value_t = 500)]
    pub max_iter: usize,
    /// Relative slack when comparing root moduli against the radii
    #[arg(long, default_value_t = 1e-8)]
    pub eps: f64,
    /// Self-test hook: halve r2 after computing it, which must trip the
    /// containment check
    #[arg(long, hide = true)]
    pub corrupt_r2: bool,
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    /// Parameter a as a rational string (e.g. 1/2 or 0.5)
    #[arg(allow_hyphen_values = true)]
    pub a: String,
    /// Parameter b
    #[arg(allow_hyphen_values = true)]
    pub b: String,
    /// Parameter c
    #[arg(allow_hyphen_values = true)]
    pub c: String,
    /// Check the identity for n = 1..=n_max
    pub n_max: usize,
}

#[derive(Args, Debug)]
pub struct OptimizeArgs {
    /// Polynomial file
    pub poly: PathBuf,
    /// Shared objective-evaluation budget per radius
    #[arg(long, default_value_t = 2000)]
    pub budget: usize,
    /// Echoed into the output; the search itself is deterministic
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// One of: uniform, unit-circle-roots, small-a0
    pub family: String,
    /// Number of polynomials
    pub count: usize,
    /// Degree range lo:hi (or a single degree)
    pub degrees: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fill the ms column with wall-clock stage times; off by default so the
    /// same seed always produces byte-identical CSV
    #[arg(long)]
    pub timings: bool,
}

/// 17 significant digits, enough to reproduce any f64 exactly.
pub fn fmt17(value: f64) -> String {
    format!("{value:.16e}")
}

struct SigDigits17;

impl serde_json::ser::Formatter for SigDigits17 {
    fn write_f64<W: ?Sized + std::io::Write>(
        &mut self,
        writer: &mut W,
        value: f64,
    ) -> std::io::Result<()> {
        write!(writer, "{}", fmt17(value))
    }
}

/// One-line JSON with 17-significant-digit floats.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigDigits17);
    value.serialize(&mut ser).expect("record serialization");
    String::from_utf8(out).expect("JSON is UTF-8")
}

/// Parses "p/q", integers, and plain decimals ("0.375") exactly.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let merged = format!("{int_part}{frac_part}");
        let n: BigInt = merged
            .parse()
            .map_err(|_| format!("not a decimal number: {s:?}"))?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        return Ok(BigRational::new(n, den));
    }
    s.parse::<BigInt>()
        .map(BigRational::from_integer)
        .map_err(|_| format!("not a number: {s:?}"))
}

/// Parses a comma-separated triple of positive rationals.
pub fn parse_triple(text: &str) -> Result<(ExactFibParams, FibParams), String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated values, got {text:?}"));
    }
    let a = parse_rational(parts[0])?;
    let b = parse_rational(parts[1])?;
    let c = parse_rational(parts[2])?;
    let exact = ExactFibParams::new(a, b, c).map_err(|e| e.to_string())?;
    let float = exact.to_float().map_err(|e| e.to_string())?;
    Ok((exact, float))
}

/// Parses "lo:hi" or a single degree.
pub fn parse_degree_range(text: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match text.split_once(':') {
        Some((lo, hi)) => (
            lo.trim().parse::<usize>().map_err(|_| bad_range(text))?,
            hi.trim().parse::<usize>().map_err(|_| bad_range(text))?,
        ),
        None => {
            let d = text.trim().parse::<usize>().map_err(|_| bad_range(text))?;
            (d, d)
        }
    };
    if lo < 1 || hi < lo {
        return Err(bad_range(text));
    }
    Ok((lo, hi))
}

fn bad_range(text: &str) -> String {
    format!("degree range must be lo:hi with 1 <= lo <= hi, got {text:?}")
}

#[derive(Serialize)]
pub struct RunRecord {
    pub polynomial: Vec<[f64; 2]>,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outer_params: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inner_params: Option<[f64; 3]>,
    /// (r1, r2) of the reported annulus.
    pub annulus: [f64; 2],
    /// Cauchy disk radius, always computed for reference.
    pub cauchy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub containment: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tuned: Option<TunedEcho>,
    pub timings_ms: BTreeMap<&'static str, f64>,
}

#[derive(Serialize)]
pub struct TunedEcho {
    pub baseline_r1: f64,
    pub baseline_r2: f64,
    pub tuned_r1: f64,
    pub tuned_r2: f64,
    pub outer_evaluations: usize,
    pub inner_evaluations: usize,
    pub inner_degenerate: bool,
    pub outer_trace: Vec<TracePoint>,
    pub inner_trace: Vec<TracePoint>,
}

#[derive(Serialize)]
pub struct TracePoint {
    pub params: [f64; 3],
    pub radius: f64,
}

#[derive(Serialize)]
struct IdentityRow {
    n: usize,
    lhs: String,
    rhs: String,
    residual: String,
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Bound(args) => cmd_bound(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Identity(args) => cmd_identity(&args),
        Command::Optimize(args) => cmd_optimize(&args),
        Command::Bench(args) => cmd_bench(&args),
    }
}

fn fail(code: i32, message: &str) -> i32 {
    eprintln!("error: {message}");
    code
}

fn load_polynomial(path: &Path) -> Result<Polynomial, i32> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, &format!("cannot read {}: {e}", path.display())))?;
    Polynomial::parse(&text).map_err(|e| fail(EXIT_PARSE, &e.to_string()))
}

fn echo_coeffs(poly: &Polynomial) -> Vec<[f64; 2]> {
    poly.coeffs().iter().map(|c| [c.re, c.im]).collect()
}

struct BoundOutcome {
    annulus: Annulus,
    method: String,
    t: Option<f64>,
    outer_params: Option<[f64; 3]>,
    inner_params: Option<[f64; 3]>,
}

/// Computes the requested bound; all parameter problems map to exit 3.
fn compute_bound(poly: &Polynomial, args: &BoundArgs) -> Result<BoundOutcome, i32> {
    let form = if args.expanded {
        RadiusForm::Expanded
    } else {
        RadiusForm::Factored
    };
    let bound_err = |e: bounds::BoundsError| fail(EXIT_BAD_PARAMS, &e.to_string());
    match args.method.as_str() {
        "cauchy" => {
            let result = bounds::cauchy_radius(poly).map_err(bound_err)?;
            Ok(BoundOutcome {
                annulus: Annulus {
                    r1: 0.0,
                    r2: result.radius,
                    method: Method::CauchyDisk,
                    outer_params: None,
                    inner_params: None,
                },
                method: "cauchy".into(),
                t: None,
                outer_params: None,
                inner_params: None,
            })
        }
        "db" => {
            let report = bounds::diaz_barrero_annulus(poly).map_err(bound_err)?;
            Ok(BoundOutcome {
                annulus: report.annulus,
                method: "db".into(),
                t: None,
                outer_params: Some([1.0, 1.0, 1.0]),
                inner_params: Some([1.0, 1.0, 1.0]),
            })
        }
        "tfib" => {
            let t = parse_rational(&args.t)
                .map_err(|e| fail(EXIT_BAD_PARAMS, &e))?
                .to_f64()
                .unwrap_or(f64::NAN);
            let report = bounds::t_fib_annulus(poly, t).map_err(bound_err)?;
            Ok(BoundOutcome {
                annulus: report.annulus,
                method: "tfib".into(),
                t: Some(t),
                outer_params: Some([t, t, 1.0]),
                inner_params: Some([t, t, 1.0]),
            })
        }
        "general" => {
            let (_, outer) = parse_triple(&args.outer).map_err(|e| fail(EXIT_BAD_PARAMS, &e))?;
            let (_, inner) = parse_triple(&args.inner).map_err(|e| fail(EXIT_BAD_PARAMS, &e))?;
            let report = bounds::general_annulus(poly, &outer, &inner, form).map_err(bound_err)?;
            Ok(BoundOutcome {
                annulus: report.annulus,
                method: "general".into(),
                t: None,
                outer_params: Some(outer.as_array()),
                inner_params: Some(inner.as_array()),
            })
        }
        other => Err(fail(
            EXIT_BAD_PARAMS,
            &format!("unknown method {other:?}; expected cauchy, db, tfib, or general"),
        )),
    }
}

fn cmd_bound(args: &BoundArgs) -> i32 {
    let started = Instant::now();
    let poly = match load_polynomial(&args.poly) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let parse_ms = started.elapsed().as_secs_f64() * 1e3;

    let bound_started = Instant::now();
    let outcome = match compute_bound(&poly, args) {
        Ok(o) => o,
        Err(code) => return code,
    };
    let bound_ms = bound_started.elapsed().as_secs_f64() * 1e3;

    let cauchy_started = Instant::now();
    let cauchy = match bounds::cauchy_radius(&poly) {
        Ok(c) => c.radius,
        Err(e) => return fail(EXIT_BAD_PARAMS, &e.to_string()),
    };
    let cauchy_ms = cauchy_started.elapsed().as_secs_f64() * 1e3;

    let record = RunRecord {
        polynomial: echo_coeffs(&poly),
        method: outcome.method,
        t: outcome.t,
        outer_params: outcome.outer_params,
        inner_params: outcome.inner_params,
        annulus: [outcome.annulus.r1, outcome.annulus.r2],
        cauchy,
        roots: None,
        containment: None,
        tuned: None,
        timings_ms: BTreeMap::from([("parse", parse_ms), ("bound", bound_ms), ("cauchy", cauchy_ms)]),
    };
    println!("{}", to_json_line(&record));
    EXIT_OK
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let poly = match load_polynomial(&args.bound.poly) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let bound_started = Instant::now();
    let mut outcome = match compute_bound(&poly, &args.bound) {
        Ok(o) => o,
        Err(code) => return code,
    };
    let bound_ms = bound_started.elapsed().as_secs_f64() * 1e3;
    if args.corrupt_r2 {
        outcome.annulus.r2 *= 0.5;
    }

    let cauchy = match bounds::cauchy_radius(&poly) {
        Ok(c) => c.radius,
        Err(e) => return fail(EXIT_BAD_PARAMS, &e.to_string()),
    };

    let roots_started = Instant::now();
    let roots = match oracle::find_roots(&poly, args.tol, args.max_iter) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_BAD_PARAMS, &e.to_string()),
    };
    let roots_ms = roots_started.elapsed().as_secs_f64() * 1e3;
    if !roots.converged {
        return fail(
            EXIT_ORACLE,
            &format!(
                "root iteration did not converge within {} sweeps (max residual {:.3e})",
                args.max_iter,
                roots.residuals.iter().cloned().fold(0.0f64, f64::max)
            ),
        );
    }

    let check = oracle::verify_containment(&roots, &outcome.annulus, args.eps)
        .expect("roots were checked for convergence");
    for v in &check.violations {
        eprintln!(
            "containment violation: |z| = {} outside [{}, {}] ({:?} side, relative excess {})",
            fmt17(v.modulus),
            fmt17(outcome.annulus.r1),
            fmt17(outcome.annulus.r2),
            v.side,
            fmt17(v.relative_excess)
        );
    }

    let mut moduli: Vec<f64> = roots.roots.iter().map(|z| z.norm()).collect();
    moduli.sort_by(|a, b| a.partial_cmp(b).expect("moduli are never NaN"));
    let record = RunRecord {
        polynomial: echo_coeffs(&poly),
        method: outcome.method,
        t: outcome.t,
        outer_params: outcome.outer_params,
        inner_params: outcome.inner_params,
        annulus: [outcome.annulus.r1, outcome.annulus.r2],
        cauchy,
        roots: Some(moduli),
        containment: Some(check.all_inside),
        tuned: None,
        timings_ms: BTreeMap::from([("bound", bound_ms), ("roots", roots_ms)]),
    };
    println!("{}", to_json_line(&record));
    if check.all_inside {
        EXIT_OK
    } else {
        EXIT_CONTAINMENT
    }
}

fn cmd_identity(args: &IdentityArgs) -> i32 {
    if args.n_max < 1 {
        return fail(EXIT_BAD_PARAMS, "n_max must be at least 1");
    }
    let parse = |text: &str, name: &str| -> Result<BigRational, i32> {
        let value = parse_rational(text).map_err(|e| fail(EXIT_BAD_PARAMS, &e))?;
        if !value.is_positive() {
            return Err(fail(
                EXIT_BAD_PARAMS,
                &format!("parameter {name} must be positive, got {text}"),
            ));
        }
        Ok(value)
    };
    let (a, b, c) = match (
        parse(&args.a, "a"),
        parse(&args.b, "b"),
        parse(&args.c, "c"),
    ) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        (Err(code), _, _) | (_, Err(code), _) | (_, _, Err(code)) => return code,
    };
    let params = ExactFibParams::new(a, b, c).expect("positivity was checked");

    let mut all_zero = true;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for n in 1..=args.n_max {
        let (lhs, rhs) = genfib::identity_sides_exact(&params, n);
        let residual = &lhs - &rhs;
        all_zero &= residual.is_zero();
        let row = IdentityRow {
            n,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            residual: residual.to_string(),
        };
        writeln!(out, "{}", to_json_line(&row)).expect("stdout");
    }
    if all_zero {
        EXIT_OK
    } else {
        EXIT_CONTAINMENT
    }
}

fn cmd_optimize(args: &OptimizeArgs) -> i32 {
    let poly = match load_polynomial(&args.poly) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let config = TuneConfig {
        budget: args.budget,
        seed: args.seed,
        ..TuneConfig::default()
    };
    let tune_started = Instant::now();
    let (outer, inner, annulus) = match tuner::tune_annulus(&poly, &config) {
        Ok(t) => t,
        Err(e @ TunerError::ConstantPolynomial) | Err(e @ TunerError::BudgetTooSmall { .. }) => {
            return fail(EXIT_BAD_PARAMS, &e.to_string())
        }
    };
    let tune_ms = tune_started.elapsed().as_secs_f64() * 1e3;

    let cauchy = match bounds::cauchy_radius(&poly) {
        Ok(c) => c.radius,
        Err(e) => return fail(EXIT_BAD_PARAMS, &e.to_string()),
    };
    let roots = match oracle::find_roots(&poly, 1e-12, 500) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_BAD_PARAMS, &e.to_string()),
    };
    if !roots.converged {
        return fail(EXIT_ORACLE, "root iteration did not converge");
    }
    let check = oracle::verify_containment(&roots, &annulus, 1e-8)
        .expect("roots were checked for convergence");
    if inner.degenerate {
        eprintln!("inner radius is degenerate: a_0 = 0 forces r1 = 0");
    }

    let trace_points = |trace: &[(FibParams, f64)]| -> Vec<TracePoint> {
        trace
            .iter()
            .map(|(p, r)| TracePoint {
                params: p.as_array(),
                radius: *r,
            })
            .collect()
    };
    let mut moduli: Vec<f64> = roots.roots.iter().map(|z| z.norm()).collect();
    moduli.sort_by(|a, b| a.partial_cmp(b).expect("moduli are never NaN"));
    let record = RunRecord {
        polynomial: echo_coeffs(&poly),
        method: "tuned".into(),
        t: None,
        outer_params: Some(outer.best_params.as_array()),
        inner_params: Some(inner.best_params.as_array()),
        annulus: [annulus.r1, annulus.r2],
        cauchy,
        roots: Some(moduli),
        containment: Some(check.all_inside),
        tuned: Some(TunedEcho {
            baseline_r1: inner.baseline_radius,
            baseline_r2: outer.baseline_radius,
            tuned_r1: inner.best_radius,
            tuned_r2: outer.best_radius,
            outer_evaluations: outer.evaluations,
            inner_evaluations: inner.evaluations,
            inner_degenerate: inner.degenerate,
            outer_trace: trace_points(&outer.trace),
            inner_trace: trace_points(&inner.trace),
        }),
        timings_ms: BTreeMap::from([("tune", tune_ms)]),
    };
    println!("{}", to_json_line(&record));
    if check.all_inside {
        EXIT_OK
    } else {
        EXIT_CONTAINMENT
    }
}

pub const CSV_HEADER: &str = "family,seed,index,degree,method,a,b,c,u,v,w,r1,r2,min_root,\
max_root,inner_tightness,outer_tightness,contained,ms";

struct BenchRow {
    method: &'static str,
    outer: Option<[f64; 3]>,
    inner: Option<[f64; 3]>,
    annulus: Annulus,
    ms: Option<f64>,
}

struct BenchItem {
    rows: Vec<String>,
    violated: bool,
    unconverged: bool,
}

fn cmd_bench(args: &BenchArgs) -> i32 {
    let family: Family = match args.family.parse() {
        Ok(f) => f,
        Err(e) => return fail(EXIT_BAD_PARAMS, &e),
    };
    if args.count < 1 {
        return fail(EXIT_BAD_PARAMS, "count must be at least 1");
    }
    let (lo, hi) = match parse_degree_range(&args.degrees) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_BAD_PARAMS, &e),
    };

    let pool = match thread_pool_from_env() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("warning: {e}; using default parallelism");
            None
        }
    };

    let seed = args.seed;
    let timings = args.timings;
    let worker = |index: u64| bench_item(family, seed, index, lo, hi, timings);
    let items: Vec<BenchItem> = match &pool {
        Some(pool) => pool.install(|| (0..args.count as u64).into_par_iter().map(worker).collect()),
        None => (0..args.count as u64).into_par_iter().map(worker).collect(),
    };

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "{CSV_HEADER}").expect("stdout");
    let mut violated = false;
    let mut unconverged = false;
    for item in items {
        violated |= item.violated;
        unconverged |= item.unconverged;
        for row in item.rows {
            writeln!(out, "{row}").expect("stdout");
        }
    }
    if unconverged {
        return fail(EXIT_ORACLE, "root iteration failed to converge on some inputs");
    }
    if violated {
        return fail(EXIT_CONTAINMENT, "containment violations occurred");
    }
    EXIT_OK
}

/// Builds a rayon pool when ZERO_ANNULUS_THREADS requests a specific width;
/// 0 or unset means the default.
fn thread_pool_from_env() -> Result<Option<rayon::ThreadPool>, String> {
    let Ok(raw) = std::env::var("ZERO_ANNULUS_THREADS") else {
        return Ok(None);
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("ZERO_ANNULUS_THREADS={raw:?} is not a number"))?;
    if threads == 0 {
        return Ok(None);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(Some)
        .map_err(|e| e.to_string())
}

fn bench_item(
    family: Family,
    seed: u64,
    index: u64,
    degree_lo: usize,
    degree_hi: usize,
    timings: bool,
) -> BenchItem {
    use rand::Rng;
    let mut rng = families::rng_for(seed, index);
    let degree = rng.gen_range(degree_lo..=degree_hi);
    let poly = families::sample_polynomial(family, degree, &mut rng);
    let outer_rand = families::random_fib_params(&mut rng, 0.1, 10.0);
    let inner_rand = families::random_fib_params(&mut rng, 0.1, 10.0);

    let roots = oracle::find_roots(&poly, 1e-12, 500).expect("families produce degree >= 1");
    let mut min_root = f64::INFINITY;
    let mut max_root: f64 = 0.0;
    for z in &roots.roots {
        let m = z.norm();
        min_root = min_root.min(m);
        max_root = max_root.max(m);
    }

    let clock = |f: &mut dyn FnMut() -> Annulus| -> (Annulus, Option<f64>) {
        if timings {
            let started = Instant::now();
            let annulus = f();
            (annulus, Some(started.elapsed().as_secs_f64() * 1e3))
        } else {
            (f(), None)
        }
    };

    let mut entries: Vec<BenchRow> = Vec::with_capacity(5);
    {
        let (annulus, ms) = clock(&mut || {
            let radius = bounds::cauchy_radius(&poly).expect("degree >= 1").radius;
            Annulus {
                r1: 0.0,
                r2: radius,
                method: Method::CauchyDisk,
                outer_params: None,
                inner_params: None,
            }
        });
        entries.push(BenchRow {
            method: "cauchy",
            outer: None,
            inner: None,
            annulus,
            ms,
        });
    }
    {
        let (annulus, ms) = clock(&mut || {
            bounds::diaz_barrero_annulus(&poly)
                .expect("degree >= 1")
                .annulus
        });
        entries.push(BenchRow {
            method: "db",
            outer: Some([1.0, 1.0, 1.0]),
            inner: Some([1.0, 1.0, 1.0]),
            annulus,
            ms,
        });
    }
    {
        let (annulus, ms) = clock(&mut || {
            bounds::t_fib_annulus(&poly, 2.0).expect("degree >= 1").annulus
        });
        entries.push(BenchRow {
            method: "tfib",
            outer: Some([2.0, 2.0, 1.0]),
            inner: Some([2.0, 2.0, 1.0]),
            annulus,
            ms,
        });
    }
    {
        let (annulus, ms) = clock(&mut || {
            bounds::general_annulus(&poly, &outer_rand, &inner_rand, RadiusForm::Factored)
                .expect("degree >= 1")
                .annulus
        });
        entries.push(BenchRow {
            method: "general",
            outer: Some(outer_rand.as_array()),
            inner: Some(inner_rand.as_array()),
            annulus,
            ms,
        });
    }
    {
        let config = TuneConfig {
            seed,
            ..TuneConfig::default()
        };
        let mut tuned_params: Option<([f64; 3], [f64; 3])> = None;
        let (annulus, ms) = clock(&mut || {
            let (outer, inner, annulus) =
                tuner::tune_annulus(&poly, &config).expect("degree >= 1, default budget");
            tuned_params = Some((outer.best_params.as_array(), inner.best_params.as_array()));
            annulus
        });
        let (outer, inner) = tuned_params.expect("closure ran");
        entries.push(BenchRow {
            method: "tuned",
            outer: Some(outer),
            inner: Some(inner),
            annulus,
            ms,
        });
    }

    let mut rows = Vec::with_capacity(entries.len());
    let mut violated = false;
    for entry in &entries {
        let contained = match oracle::verify_containment(&roots, &entry.annulus, 1e-8) {
            Ok(check) => check.all_inside,
            Err(_) => false,
        };
        violated |= !contained;
        rows.push(csv_row(
            family, seed, index, degree, entry, min_root, max_root, contained,
        ));
    }
    BenchItem {
        rows,
        violated,
        unconverged: !roots.converged,
    }
}

#[allow(clippy::too_many_arguments)]
fn csv_row(
    family: Family,
    seed: u64,
    index: u64,
    degree: usize,
    entry: &BenchRow,
    min_root: f64,
    max_root: f64,
    contained: bool,
) -> String {
    let triple = |t: Option<[f64; 3]>| -> String {
        match t {
            Some([x, y, z]) => format!("{},{},{}", fmt17(x), fmt17(y), fmt17(z)),
            None => ",,".into(),
        }
    };
    let r1 = entry.annulus.r1;
    let r2 = entry.annulus.r2;
    let inner_tightness = if r1 == 0.0 || min_root == 0.0 {
        0.0
    } else {
        r1 / min_root
    };
    let outer_tightness = if r2 == 0.0 { 1.0 } else { max_root / r2 };
    let ms = entry.ms.map(|v| format!("{v:.3}")).unwrap_or_default();
    format!(
        "{family},{seed},{index},{degree},{method},{outer},{inner},{r1},{r2},{min_root},\
{max_root},{inner_t},{outer_t},{contained},{ms}",
        method = entry.method,
        outer = triple(entry.outer),
        inner = triple(entry.inner),
        r1 = fmt17(r1),
        r2 = fmt17(r2),
        min_root = fmt17(min_root),
        max_root = fmt17(max_root),
        inner_t = fmt17(inner_tightness),
        outer_t = fmt17(outer_tightness),
    )
}
