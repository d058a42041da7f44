//! Command-line front end: single-point evaluation, phase-diagram sweeps to
//! CSV, the verification suites, and asymptotic-limit summaries.
//!
//! Exit codes: 0 success, 1 verification failure, 2 domain error.

mod verify;

use clap::{Args, Parser, Subcommand};
use std::fmt::Write as _;
use std::process::ExitCode;
use xy_entropy::{
    critical_field_estimate, large_alpha_estimate, large_alpha_limit, modulus_data,
    renyi_closed_form, small_alpha_estimate, von_neumann, xx_limit_estimate, EllipticData, Error,
    PhasePoint, Region,
};

const CSV_HEADER: &str =
    "h,gamma,alpha,region,k,kprime,tau0,q,S_renyi,S_vonNeumann,method,tol_attained,reason";

#[derive(Parser)]
#[command(name = "xy-entropy", version, about = "XY-chain entanglement entropy calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one phase point and print a CSV row
    Eval(EvalArgs),
    /// Sweep a grid of phase points into a CSV file
    Sweep(SweepArgs),
    /// Run an identity/oracle verification suite
    Verify(VerifyArgs),
    /// Print the asymptotic limits applicable at one point
    Limits(LimitsArgs),
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long = "h")]
    h: f64,
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    alpha: f64,
    /// Series tolerance carried into tail-bounded evaluations
    #[arg(long, default_value_t = 1e-13)]
    tol: f64,
    /// Print the CSV header line before the row
    #[arg(long, default_value_t = true, overrides_with = "no_header")]
    header: bool,
    #[arg(long = "no-header")]
    no_header: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// h grid as MIN:MAX:STEPS
    #[arg(long = "h-range")]
    h_range: String,
    /// gamma grid as MIN:MAX:STEPS
    #[arg(long = "gamma-range")]
    gamma_range: String,
    /// Comma-separated Renyi orders
    #[arg(long = "alpha-list", value_delimiter = ',')]
    alpha_list: Vec<f64>,
    /// Output CSV path
    #[arg(long)]
    out: std::path::PathBuf,
    #[arg(long, default_value_t = 1e-13)]
    tol: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: elliptic, theta, modular, entropy, all
    #[arg(long)]
    suite: String,
    /// Tolerance override for the entropy oracle-agreement families
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args)]
struct LimitsArgs {
    #[arg(long = "h")]
    h: f64,
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    alpha: f64,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval(args) => cmd_eval(&args),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Limits(args) => cmd_limits(&args),
    }
}

/// 17 significant digits: round-trip exact for f64.
fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

fn fail_domain(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn eval_row(point: &PhasePoint, alpha: f64) -> Result<String, Error> {
    let d = modulus_data(point)?;
    let renyi = renyi_closed_form(point, alpha)?;
    let vn = von_neumann(point)?;
    let mut row = String::new();
    write!(
        row,
        "{},{},{},{},{},{},{},{},{},{},{},{},",
        num(point.h),
        num(point.gamma),
        num(alpha),
        point.region.as_str(),
        num(d.k),
        num(d.kprime),
        num(d.tau0),
        num(d.q),
        num(renyi.value),
        num(vn.value),
        renyi.method.as_str(),
        num(renyi.tol_attained),
    )
    .expect("string write");
    Ok(row)
}

fn cmd_eval(args: &EvalArgs) -> ExitCode {
    let point = match PhasePoint::new(args.h, args.gamma) {
        Ok(p) => p,
        Err(e) => return fail_domain(&e),
    };
    let row = match eval_row(&point, args.alpha) {
        Ok(r) => r,
        Err(e) => return fail_domain(&e),
    };
    if args.header && !args.no_header {
        println!("{CSV_HEADER}");
    }
    println!("{row}");
    ExitCode::SUCCESS
}

fn parse_range(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("range must be MIN:MAX:STEPS, got '{spec}'"));
    }
    let min: f64 = parts[0].parse().map_err(|_| format!("bad range min '{}'", parts[0]))?;
    let max: f64 = parts[1].parse().map_err(|_| format!("bad range max '{}'", parts[1]))?;
    let steps: usize = parts[2].parse().map_err(|_| format!("bad range steps '{}'", parts[2]))?;
    if steps < 1 {
        return Err("range steps must be >= 1".into());
    }
    if steps == 1 {
        return Ok(vec![min]);
    }
    let dx = (max - min) / (steps - 1) as f64;
    Ok((0..steps).map(|i| min + dx * i as f64).collect())
}

fn cmd_sweep(args: &SweepArgs) -> ExitCode {
    let hs = match parse_range(&args.h_range) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let gs = match parse_range(&args.gamma_range) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if args.alpha_list.is_empty() || args.alpha_list.iter().any(|&a| !(a > 0.0)) {
        eprintln!("error: alpha-list must be non-empty with positive entries");
        return ExitCode::from(2);
    }

    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for &h in &hs {
        for &g in &gs {
            for &alpha in &args.alpha_list {
                out.push_str(&sweep_row(h, g, alpha));
                out.push('\n');
            }
        }
    }
    if let Err(e) = std::fs::write(&args.out, out) {
        eprintln!("error: cannot write {}: {e}", args.out.display());
        return ExitCode::from(2);
    }
    println!("wrote {} rows to {}", hs.len() * gs.len() * args.alpha_list.len(), args.out.display());
    ExitCode::SUCCESS
}

/// A sweep row never aborts: guarded points carry empty entropy fields and
/// the guard's name in the reason column.
fn sweep_row(h: f64, g: f64, alpha: f64) -> String {
    let blank = |region: &str, reason: &str| {
        format!("{},{},{},{region},,,,,,,,,{reason}", num(h), num(g), num(alpha))
    };
    let point = match PhasePoint::new(h, g) {
        Ok(p) => p,
        Err(_) => return blank("", "Domain"),
    };
    match point.region {
        Region::CriticalField | Region::CriticalXx => {
            blank(point.region.as_str(), point.region.as_str())
        }
        _ => match eval_row(&point, alpha) {
            Ok(r) => r,
            Err(e) => blank(point.region.as_str(), e.kind()),
        },
    }
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    match verify::run_suite(&args.suite, args.tol) {
        Some(report) => {
            report.print();
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        None => {
            eprintln!(
                "error: unknown suite '{}'; expected elliptic, theta, modular, entropy or all",
                args.suite
            );
            ExitCode::from(2)
        }
    }
}

fn cmd_limits(args: &LimitsArgs) -> ExitCode {
    let point = match PhasePoint::new(args.h, args.gamma) {
        Ok(p) => p,
        Err(e) => return fail_domain(&e),
    };
    let alpha = args.alpha;
    println!("point: h={}, gamma={}, region={}", args.h, args.gamma, point.region.as_str());

    match modulus_data(&point) {
        Ok(d) => print_modulus(&d),
        Err(e) => {
            println!("modulus:        unavailable ({e})");
        }
    }
    match renyi_closed_form(&point, alpha) {
        Ok(r) => println!("S({alpha}):         {} [{}]", num(r.value), r.method.as_str()),
        Err(e) => println!("S({alpha}):         unavailable ({e})"),
    }
    match large_alpha_limit(&point) {
        Ok(r) => println!("S(inf):         {}", num(r.value)),
        Err(e) => println!("S(inf):         unavailable ({e})"),
    }
    if alpha > 1.0 {
        if let Ok(r) = large_alpha_estimate(&point, alpha) {
            println!("large-alpha:    {}", num(r.value));
        }
    }
    match small_alpha_estimate(&point, alpha) {
        Ok(r) => println!("small-alpha:    {}", num(r.value)),
        Err(e) => println!("small-alpha:    not applicable ({e})"),
    }
    match critical_field_estimate(args.gamma, args.h, alpha) {
        Ok(v) => println!("critical-field: {}", num(v)),
        Err(_) => println!("critical-field: not applicable"),
    }
    match xx_limit_estimate(args.gamma, args.h, alpha) {
        Ok(v) => println!("xx-limit:       {}", num(v)),
        Err(_) => println!("xx-limit:       not applicable"),
    }
    ExitCode::SUCCESS
}

fn print_modulus(d: &EllipticData) {
    println!("k:              {}", num(d.k));
    println!("kprime:         {}", num(d.kprime));
    println!("tau0:           {}", num(d.tau0));
    println!("q:              {}", num(d.q));
}
