//! `starlike <module> <verb> [--flags]`: JSON lines on stdout, diagnostics
//! on stderr, exit 0 on success, 2 on invalid input, 3 on numerical failure.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod output;
mod reproduce;

use std::f64::consts::TAU;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as Complex;
use serde::Serialize;
use serde_json::Value;

use starlike_core::coeffcond::{
    polynomial_power_radius, polynomial_power_search, power_reciprocal_radius, power_reciprocal_search,
    reciprocal_series_member, reciprocal_series_sides, ReciprocalSeries,
};
use starlike_core::extremal::{extremal_function, functional_bound_check, EntireFunctional, DEFAULT_SEED};
use starlike_core::numerics::PowerSeries;
use starlike_core::radii::{
    convolution_convex_radius, janowski_convolution_radius, majorization_radius, operator_radius,
    s_alpha_beta_radius, special_radius, starlike_convolution_radius, tilted_product_radius, v_delta_params,
    Operator, RadiiError, TiltedParams,
};
use starlike_core::specfun::{Family, Normalization, SpecialFunctionDesc};
use starlike_core::subord::{
    beta_threshold, check_admissibility, evaluate_item, grid, verify_subordination, GridParams,
    SubordinationProblem,
};
use starlike_core::targets::{
    boundary_curve, convexity_radius, eval_target, inradius_report, maximal_disk, TargetId,
};
use starlike_core::{Classify, ErrorKind};

use output::{emit, record, Format};

const DEFAULT_TOL: f64 = 1e-4;
const TOL_RANGE: (f64, f64) = (1e-14, 1e-3);
const MIN_SAMPLES: usize = 64;

#[derive(Parser)]
#[command(name = "starlike", version, about = "Radii, subordination thresholds and oracles for Ma-Minda classes")]
struct Cli {
    #[command(subcommand)]
    module: Module,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,
    /// Tolerance for pass/fail flags; overrides STARLIKE_TOL.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Boundary samples for containment scans.
    #[arg(long, global = true, default_value_t = 1024)]
    samples: usize,
}

#[derive(Subcommand)]
enum Module {
    /// Target functions and their images.
    Targets {
        #[command(subcommand)]
        verb: TargetsVerb,
    },
    /// Radius problems.
    Radii {
        #[command(subcommand)]
        verb: RadiiVerb,
    },
    /// Differential subordination thresholds.
    Subord {
        #[command(subcommand)]
        verb: SubordVerb,
    },
    /// Coefficient conditions.
    Coeffcond {
        #[command(subcommand)]
        verb: CoeffVerb,
    },
    /// Extremal functions and functional bounds.
    Extremal {
        #[command(subcommand)]
        verb: ExtremalVerb,
    },
    /// Reproduction of every printed constant.
    Paper {
        #[command(subcommand)]
        verb: PaperVerb,
    },
}

#[derive(Subcommand)]
enum TargetsVerb {
    /// Targets with default parameters.
    Catalog,
    /// Distance from 1 to the boundary of the image.
    Inradius {
        #[arg(long)]
        target: TargetId,
    },
    /// `ψ(z)` on the closed disk.
    Eval {
        #[arg(long)]
        target: TargetId,
        #[arg(long, allow_hyphen_values = true)]
        re: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        im: f64,
    },
    /// Radius of convexity.
    Convexity {
        #[arg(long)]
        target: TargetId,
    },
    /// Maximal disk centered at a real point.
    Disk {
        #[arg(long)]
        target: TargetId,
        #[arg(long, default_value_t = 1.0)]
        center: f64,
    },
    /// Sampled boundary curve (`--samples` points).
    Boundary {
        #[arg(long)]
        target: TargetId,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Bessel,
    Struve,
    Lommel,
    Legendre,
}

#[derive(Subcommand)]
enum RadiiVerb {
    /// Starlikeness radius of a normalized special function.
    Special {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Order of Bessel or Struve functions.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<f64>,
        /// Lommel parameter.
        #[arg(long, allow_hyphen_values = true)]
        u: Option<f64>,
        /// Legendre degree index.
        #[arg(long)]
        n: Option<usize>,
        /// Normalization f, g or h.
        #[arg(long, default_value = "g")]
        norm: Normalization,
        #[arg(long)]
        target: TargetId,
    },
    /// Radius for the class S(α, β).
    SAlphaBeta {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        target: TargetId,
    },
    /// Radius for the class V(δ).
    VDelta {
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        target: TargetId,
    },
    /// Radius for products of two tilted Carathéodory functions.
    Tilted {
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long)]
        target: TargetId,
    },
    /// Majorization radius.
    Majorization {
        #[arg(long, default_value = "cardioid")]
        target: TargetId,
    },
    /// Radius for convolution with a convex function.
    ConvexConvolution {
        #[arg(long)]
        target: TargetId,
    },
    /// Radius for the Alexander, Livingston or Bernardi operator.
    Operator {
        #[arg(long)]
        op: Operator,
        #[arg(long)]
        target: TargetId,
    },
    /// Radius for the convolution of two starlike functions.
    Convolution {
        #[arg(long)]
        target: TargetId,
    },
    /// Janowski convolution quadratic.
    Janowski {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
    },
}

#[derive(Args)]
struct ProblemArgs {
    /// Template n of `1 + βzp'/p^(n-1)`.
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum)]
    direction: DirectionArg,
    /// Dominant target for `hfixed`.
    #[arg(long)]
    q: Option<TargetId>,
    /// Right-hand side target for `qfixed`.
    #[arg(long)]
    h: Option<TargetId>,
}

impl ProblemArgs {
    fn problem(&self) -> Result<SubordinationProblem, CliError> {
        let p = match self.direction {
            DirectionArg::Hfixed => {
                let q = self.q.ok_or_else(|| CliError::validation("hfixed needs --q"))?;
                SubordinationProblem::h_fixed(self.n, q)
            }
            DirectionArg::Qfixed => {
                let h = self.h.ok_or_else(|| CliError::validation("qfixed needs --h"))?;
                SubordinationProblem::q_fixed(self.n, h)
            }
        };
        p.map_err(CliError::from_core)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Hfixed,
    Qfixed,
}

#[derive(Subcommand)]
enum SubordVerb {
    /// Sharp β with its certificate.
    Threshold(ProblemArgs),
    /// Containment margin of the dominant at a given β.
    Verify {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        beta: f64,
    },
    /// Admissibility of the dominant at a given β.
    Admissibility {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        beta: f64,
    },
    /// The full grid of thresholds against their printed values.
    Grid {
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, default_value_t = 0.5)]
        a: f64,
        #[arg(long, default_value_t = 0.2)]
        b: f64,
    },
}

#[derive(Subcommand)]
enum CoeffVerb {
    /// Coefficient test for `z/(1 + Σ a_k z^k)`.
    Reciprocal {
        /// Comma-separated coefficients, each `re` or `re:im`.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
        /// CSV of rows `k, re, im`.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        target: TargetId,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
    },
    /// Radius for `z/(1 + z^k)^n`.
    Power {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        target: TargetId,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        /// Maximize over the disk center.
        #[arg(long)]
        search: bool,
    },
    /// Radius for polynomial powers with root modulus at least R.
    Polynomial {
        #[arg(long)]
        r: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        beta_re: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        beta_im: f64,
        #[arg(long)]
        target: TargetId,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long)]
        search: bool,
    },
}

#[derive(Subcommand)]
enum ExtremalVerb {
    /// `z exp F(ζz)` with `ζ = e^{i·zeta_arg}`.
    Eval {
        #[arg(long)]
        target: TargetId,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        zeta_arg: f64,
        #[arg(long, allow_hyphen_values = true)]
        re: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        im: f64,
    },
    /// Functional bound over seeded Schwarz trials.
    Bound {
        #[arg(long)]
        target: TargetId,
        /// Coefficients of Φ, comma-separated reals from degree 0.
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        phi: String,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.5)]
        z0_re: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        z0_im: f64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum PaperVerb {
    /// CSV of (label, paper_value, computed, abs_err) for every constant.
    ReproduceAll {
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Serialize)]
struct CliError {
    kind: ErrorKind,
    message: String,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Validation, message: message.into() }
    }

    fn from_core<E: Classify + std::fmt::Display>(e: E) -> Self {
        Self { kind: e.kind(), message: e.to_string() }
    }

    fn exit_code(&self) -> u8 {
        match self.kind {
            ErrorKind::Validation => 2,
            ErrorKind::Numerical => 3,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self::validation(e.to_string())
    }
}

struct Config {
    tol: f64,
    samples: usize,
}

fn resolve_config(cli: &Cli) -> Result<Config, CliError> {
    let tol = match (cli.tol, std::env::var("STARLIKE_TOL")) {
        (Some(t), _) => t,
        (None, Ok(s)) => s.trim().parse().map_err(|_| CliError::validation(format!("STARLIKE_TOL is not a number: {s}")))?,
        (None, Err(_)) => DEFAULT_TOL,
    };
    if !(TOL_RANGE.0..=TOL_RANGE.1).contains(&tol) {
        return Err(CliError::validation(format!("tol must lie in [1e-14, 1e-3], got {tol}")));
    }
    if cli.samples < MIN_SAMPLES {
        return Err(CliError::validation(format!("samples must be at least {MIN_SAMPLES}")));
    }
    Ok(Config { tol, samples: cli.samples })
}

fn core<T, E: Classify + std::fmt::Display>(r: Result<T, E>) -> Result<T, CliError> {
    r.map_err(CliError::from_core)
}

#[derive(Serialize)]
struct Scalar<'a> {
    label: &'a str,
    value: f64,
}

fn scalar(kind: &str, label: &str, value: f64) -> Value {
    record(kind, &Scalar { label, value })
}

fn run_targets(verb: &TargetsVerb, cfg: &Config) -> Result<Vec<Value>, CliError> {
    Ok(match verb {
        TargetsVerb::Catalog => TargetId::catalog()
            .iter()
            .map(|id| {
                let inradius = inradius_report(*id).ok().map(|r| r.value);
                let convexity = convexity_radius(*id).ok();
                record("target", &serde_json::json!({ "id": id, "inradius": inradius, "convexity_radius": convexity }))
            })
            .collect(),
        TargetsVerb::Inradius { target } => vec![record("inradius", &core(inradius_report(*target))?)],
        TargetsVerb::Eval { target, re, im } => {
            let w = core(eval_target(*target, Complex::new(*re, *im)))?;
            vec![record("eval", &serde_json::json!({ "target": target, "z": [re, im], "w": [w.re, w.im] }))]
        }
        TargetsVerb::Convexity { target } => {
            vec![scalar("convexity_radius", &target.to_string(), core(convexity_radius(*target))?)]
        }
        TargetsVerb::Disk { target, center } => vec![record("disk", &core(maximal_disk(*target, *center))?)],
        TargetsVerb::Boundary { target } => core(boundary_curve(*target, cfg.samples))?
            .iter()
            .enumerate()
            .map(|(k, w)| {
                let theta = TAU * k as f64 / cfg.samples as f64;
                record("boundary", &serde_json::json!({ "theta": theta, "w": [w.re, w.im] }))
            })
            .collect(),
    })
}

fn special_desc(
    family: FamilyArg,
    beta: Option<f64>,
    u: Option<f64>,
    n: Option<usize>,
    norm: Normalization,
) -> Result<SpecialFunctionDesc, CliError> {
    let need = |v: Option<f64>, name: &str| v.ok_or_else(|| CliError::validation(format!("--{name} is required")));
    let fam = match family {
        FamilyArg::Bessel => Family::BesselJ { beta: need(beta, "beta")? },
        FamilyArg::Struve => Family::StruveH { beta: need(beta, "beta")? },
        FamilyArg::Lommel => Family::LommelHalf { u: need(u, "u")? },
        FamilyArg::Legendre => Family::LegendreOddNorm { n: n.ok_or_else(|| CliError::validation("--n is required"))? },
    };
    core(SpecialFunctionDesc::new(fam, norm))
}

fn run_radii(verb: &RadiiVerb) -> Result<Vec<Value>, CliError> {
    let radius = |label: String, r: Result<f64, RadiiError>| -> Result<Value, CliError> {
        Ok(scalar("radius", &label, core(r)?))
    };
    Ok(vec![match verb {
        RadiiVerb::Special { family, beta, u, n, norm, target } => {
            let desc = special_desc(*family, *beta, *u, *n, *norm)?;
            record("radius_result", &core(special_radius(&desc, *target))?)
        }
        RadiiVerb::SAlphaBeta { alpha, beta, target } => {
            record("radius_result", &core(s_alpha_beta_radius(*alpha, *beta, *target))?)
        }
        RadiiVerb::VDelta { delta, target } => {
            let (a, b) = core(v_delta_params(*delta))?;
            record("radius_result", &core(s_alpha_beta_radius(a, b, *target))?)
        }
        RadiiVerb::Tilted { lambda, target } => {
            let p = core(TiltedParams::new(*lambda))?;
            radius(format!("tilted/{lambda}/{target}"), tilted_product_radius(p, *target))?
        }
        RadiiVerb::Majorization { target } => record("radius_result", &core(majorization_radius(*target))?),
        RadiiVerb::ConvexConvolution { target } => {
            radius(format!("convex-convolution/{target}"), convolution_convex_radius(*target))?
        }
        RadiiVerb::Operator { op, target } => {
            radius(format!("operator/{op:?}/{target}").to_lowercase(), operator_radius(*op, *target))?
        }
        RadiiVerb::Convolution { target } => record("radius_result", &core(starlike_convolution_radius(*target))?),
        RadiiVerb::Janowski { a, b } => radius(format!("janowski-convolution/{a},{b}"), janowski_convolution_radius(*a, *b))?,
    }])
}

fn run_subord(verb: &SubordVerb, cfg: &Config) -> Result<Vec<Value>, CliError> {
    Ok(match verb {
        SubordVerb::Threshold(args) => {
            let p = args.problem()?;
            vec![record("beta_certificate", &serde_json::json!({ "problem": p, "certificate": core(beta_threshold(&p))? }))]
        }
        SubordVerb::Verify { problem, beta } => {
            let p = problem.problem()?;
            if !(*beta > 0.0) {
                return Err(CliError::validation("beta must be positive"));
            }
            let trace = |t: f64| {
                starlike_core::subord::candidate_q(&p, *beta, Complex::from_polar(1.0, t)).unwrap_or(Complex::new(f64::NAN, 0.0))
            };
            let rep = verify_subordination(trace, p.conclusion(), cfg.samples);
            let contained = rep.margin >= -cfg.tol;
            vec![record("containment", &serde_json::json!({ "problem": p, "beta": beta, "report": rep, "contained": contained }))]
        }
        SubordVerb::Admissibility { problem, beta } => {
            let p = problem.problem()?;
            vec![record("admissibility", &core(check_admissibility(&p, *beta))?)]
        }
        SubordVerb::Grid { alpha, a, b } => {
            let items = core(grid(GridParams { alpha: *alpha, a: *a, b: *b }))?;
            let mut results: Vec<_> = {
                use rayon::prelude::*;
                items.par_iter().map(evaluate_item).collect()
            };
            results.sort_by(|x, y| x.label.cmp(&y.label));
            results.iter().map(|r| record("grid_result", r)).collect()
        }
    })
}

fn parse_coefficient(s: &str) -> Result<Complex, CliError> {
    let bad = || CliError::validation(format!("bad coefficient '{s}'"));
    let (re, im) = match s.split_once(':') {
        Some((r, i)) => (r.trim().parse().map_err(|_| bad())?, i.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 0.0),
    };
    Ok(Complex::new(re, im))
}

fn read_coefficient_csv(path: &PathBuf) -> Result<Vec<Complex>, CliError> {
    let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_path(path)
        .map_err(|e| CliError::validation(e.to_string()))?;
    let mut rows: Vec<(usize, Complex)> = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| CliError::validation(e.to_string()))?;
        let Ok(k) = rec.get(0).unwrap_or("").parse::<usize>() else { continue };
        let re: f64 = rec.get(1).unwrap_or("").parse().map_err(|_| CliError::validation(format!("row {k}: bad real part")))?;
        let im: f64 = rec.get(2).filter(|s| !s.is_empty()).map(str::parse).transpose()
            .map_err(|_| CliError::validation(format!("row {k}: bad imaginary part")))?
            .unwrap_or(0.0);
        if k == 0 {
            return Err(CliError::validation("coefficient indices start at 1"));
        }
        rows.push((k, Complex::new(re, im)));
    }
    let len = rows.iter().map(|r| r.0).max().unwrap_or(0);
    let mut a = vec![Complex::new(0.0, 0.0); len];
    for (k, c) in rows {
        a[k - 1] = c;
    }
    Ok(a)
}

fn run_coeff(verb: &CoeffVerb) -> Result<Vec<Value>, CliError> {
    Ok(vec![match verb {
        CoeffVerb::Reciprocal { coeffs, csv, target, a } => {
            let coefs = match (coeffs, csv) {
                (Some(s), None) => s.split(',').filter(|x| !x.trim().is_empty()).map(parse_coefficient).collect::<Result<Vec<_>, _>>()?,
                (None, Some(p)) => read_coefficient_csv(p)?,
                _ => return Err(CliError::validation("give exactly one of --coeffs and --csv")),
            };
            let s = core(ReciprocalSeries::new(coefs))?;
            let member = core(reciprocal_series_member(&s, *target, *a))?;
            let disk = core(maximal_disk(*target, *a))?;
            let (lhs, rhs) = reciprocal_series_sides(&s, disk);
            record("coefficient_test", &serde_json::json!({ "target": target, "a": a, "lhs": lhs, "rhs": rhs, "member": member }))
        }
        CoeffVerb::Power { n, k, target, a, search } => {
            if *search {
                record("center_search", &core(power_reciprocal_search(*n, *k, *target))?)
            } else {
                scalar("radius", &format!("power-reciprocal/{n},{k}/{target}/{a}"), core(power_reciprocal_radius(*n, *k, *target, *a))?)
            }
        }
        CoeffVerb::Polynomial { r, beta_re, beta_im, target, a, search } => {
            let beta = Complex::new(*beta_re, *beta_im);
            if *search {
                record("center_search", &core(polynomial_power_search(*r, beta, *target))?)
            } else {
                scalar("radius", &format!("polynomial-power/{r}/{target}/{a}"), core(polynomial_power_radius(*r, beta, *target, *a))?)
            }
        }
    }])
}

fn run_extremal(verb: &ExtremalVerb) -> Result<Vec<Value>, CliError> {
    Ok(vec![match verb {
        ExtremalVerb::Eval { target, zeta_arg, re, im } => {
            let f = core(extremal_function(*target, Complex::from_polar(1.0, *zeta_arg), Complex::new(*re, *im)))?;
            record("extremal", &serde_json::json!({ "target": target, "zeta_arg": zeta_arg, "z": [re, im], "f": [f.re, f.im] }))
        }
        ExtremalVerb::Bound { target, phi, z0_re, z0_im, trials, seed } => {
            let coeffs = phi
                .split(',')
                .map(|x| x.trim().parse::<f64>().map_err(|_| CliError::validation(format!("bad coefficient '{x}'"))))
                .collect::<Result<Vec<_>, _>>()?;
            let functional = core(EntireFunctional::new(PowerSeries::from_real(&coeffs)))?;
            record(
                "functional_report",
                &core(functional_bound_check(*target, &functional, Complex::new(*z0_re, *z0_im), *trials, *seed))?,
            )
        }
    }])
}

fn run_paper(verb: &PaperVerb, cfg: &Config) -> Result<(), CliError> {
    let PaperVerb::ReproduceAll { out } = verb;
    let rows = reproduce::reproduce_all();
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = csv::Writer::from_writer(sink);
    for row in &rows {
        w.serialize(row).map_err(|e| CliError::validation(e.to_string()))?;
    }
    w.flush()?;
    let off = rows.iter().filter(|r| !(r.abs_err <= cfg.tol * r.paper_value.abs().max(1.0))).count();
    eprintln!("{} rows, {off} outside tolerance {}", rows.len(), cfg.tol);
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = resolve_config(cli)?;
    let records = match &cli.module {
        Module::Targets { verb } => run_targets(verb, &cfg)?,
        Module::Radii { verb } => run_radii(verb)?,
        Module::Subord { verb } => run_subord(verb, &cfg)?,
        Module::Coeffcond { verb } => run_coeff(verb)?,
        Module::Extremal { verb } => run_extremal(verb)?,
        Module::Paper { verb } => return run_paper(verb, &cfg),
    };
    emit(&records, cli.output, &mut io::stdout().lock())?;
    Ok(())
}

fn fail(e: CliError) -> ExitCode {
    eprintln!("error: {}", e.message);
    println!("{}", record("error", &e));
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            eprint!("{msg}");
            println!("{}", record("error", &CliError::validation(msg.lines().next().unwrap_or("").to_string())));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(e),
    }
}
