//! `su11`: batch front-end for the spherical-analysis library.
//!
//! Every subcommand prints one report (structured text or CSV) that echoes
//! the tool version, the configuration, the seed and the tolerances.
//! Failures print a single `error: <CODE>: <message>` line on stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod report;
mod selftest;
mod specs;

use report::Format;

#[derive(Parser, Debug)]
#[command(name = "su11", version, about = "Spherical analysis on SU(1,1): transforms, resolvents, decay and zero scans")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for random group elements; echoed in every report.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Spherical transform f̂(s) = ½∫ f(x) P_{s−1}(x) dx.
    #[command(after_help = "CSV columns: s, value")]
    Transform(TransformArgs),
    /// Transform of a radial measure, μ̂(s) = ∫ P_{s−1}(cosh 2ζ) dμ(ζ).
    #[command(after_help = "CSV columns: s, value")]
    MeasureTransform(MeasureTransformArgs),
    /// Checks b̂_λ(s)·(s(1−s) − λ(1−λ)) = 1 on a canonical grid.
    #[command(after_help = "CSV columns: lambda, s, transform, residual")]
    ResolventCheck(ResolventArgs),
    /// Compares the transform of T_λf with the divided difference.
    #[command(after_help = "CSV columns: s, transform_of_t_lambda, divided_difference, abs_diff, status")]
    TlambdaCheck(TlambdaArgs),
    /// Compares the product-formula convolution transform with f̂ĝ.
    #[command(after_help = "CSV columns: s, convolution, product, abs_diff")]
    ConvolveCheck(ConvolveArgs),
    /// Curve e^{−πt} log|f̂(½+it)| and its limsup proxy.
    #[command(after_help = "CSV columns: t, value, flag")]
    DecayInf(DecayInfArgs),
    /// Curve x log|f̂(x)| towards x → 0 and its limsup proxy.
    #[command(after_help = "CSV columns: x, value, flag")]
    DecayZero(DecayZeroArgs),
    /// Grid points of the canonical strip where every f̂ is below tol.
    #[command(after_help = "CSV columns: s, max_modulus")]
    Hull(HullArgs),
    /// Unit mass, atom at 0, μ̂ ≠ 1 and the x log|1 − μ̂(x)| curve.
    #[command(after_help = "CSV columns: x, value, flag")]
    Thm2Check(Thm2Args),
    /// Curve −x log(1 − μ̂(x)) and its sign check.
    #[command(after_help = "CSV columns: x, value, flag")]
    Cor3Check(Cor3Args),
    /// J(r, s) = ₂F₁(2 − is, 3/2; 3; −4r(1−r)⁻²), also via Euler's transformation.
    #[command(after_help = "CSV columns: s, value, euler, abs_diff")]
    MoreraJ(MoreraJArgs),
    /// Zeros of J(r, ·) in a window by the argument principle.
    #[command(after_help = "CSV columns: location, residual, multiplicity")]
    ZeroScan(ZeroScanArgs),
    /// Zeros of J(r1, ·) and J(r2, ·) matched within a tolerance.
    #[command(after_help = "CSV columns: r1, r2, zeros1, zeros2, common, verdict")]
    CommonZeroScan(CommonZeroArgs),
    /// μ-mean-value residual over seeded random group elements.
    #[command(after_help = "CSV columns: g, a, b, residual")]
    HarmonicCheck(HarmonicArgs),
    /// Contour integrals of f over g(γ_r) for seeded random g.
    #[command(after_help = "CSV columns: g, a, b, integral, modulus")]
    Contour(ContourArgs),
    /// Tests |f(z)|(1 − |z|²) ≤ c on sample points.
    #[command(after_help = "CSV columns: z, weighted")]
    GrowthCheck(GrowthArgs),
    /// Runs the built-in invariant suite.
    #[command(after_help = "CSV columns: check, tolerance, status, detail")]
    Selftest,
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    /// Radial function, e.g. indicator:1:2 or indicator:1:2,-1*indicator:2:3.
    #[arg(long)]
    pub f: String,
    /// Strip point a+bi; repeatable.
    #[arg(long, required = true, allow_hyphen_values = true)]
    pub s: Vec<String>,
    /// Base absolute quadrature tolerance, scaled by 1 + ‖f‖₁.
    #[arg(long, default_value_t = 1e-9)]
    pub abs_tol: f64,
}

#[derive(Args, Debug)]
pub struct MeasureTransformArgs {
    /// Measure, e.g. atom:0.5 or 0.5*atom:0.3,0.5*atom:0.7 or density:indicator:1:3.
    #[arg(long)]
    pub mu: String,
    #[arg(long, required = true, allow_hyphen_values = true)]
    pub s: Vec<String>,
}

#[derive(Args, Debug)]
pub struct ResolventArgs {
    /// λ outside the strip; repeatable.
    #[arg(long, default_values_t = vec!["2+0i".to_string()], allow_hyphen_values = true)]
    pub lambda: Vec<String>,
    /// Grid size (Re steps)x(Im steps) over [0, ½] × [0, im-max].
    #[arg(long, default_value = "5x5")]
    pub grid: String,
    #[arg(long, default_value_t = 5.0)]
    pub im_max: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct TlambdaArgs {
    #[arg(long, default_value = "indicator:1:2")]
    pub f: String,
    /// λ with 0 < Re λ < 1, Re λ ≠ ½.
    #[arg(long, default_value = "0.3+0i", allow_hyphen_values = true)]
    pub lambda: String,
    /// Strip points; defaults to ten points with Re in {0.1,…,0.9}, Im in {0.4, 1.5}.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Vec<String>,
    /// Also report (T_λf)(t) at these t > 1.
    #[arg(long)]
    pub t: Vec<f64>,
    #[arg(long, default_value_t = 1e-5)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct ConvolveArgs {
    #[arg(long, default_value = "indicator:1:2")]
    pub f: String,
    #[arg(long, default_value = "indicator:1:3")]
    pub g: String,
    /// Strip points; defaults to five points.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Vec<String>,
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct DecayInfArgs {
    #[arg(long)]
    pub f: String,
    #[arg(long, default_value_t = 8.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 40)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct DecayZeroArgs {
    #[arg(long)]
    pub f: String,
    #[arg(long, default_value_t = 1e-4)]
    pub x_min: f64,
    #[arg(long, default_value_t = 30)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct HullArgs {
    /// Radial functions; repeatable.
    #[arg(long, required = true)]
    pub f: Vec<String>,
    /// Points per axis.
    #[arg(long, default_value_t = 21)]
    pub grid: usize,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, default_value_t = 10.0)]
    pub im_max: f64,
    /// Scan the whole strip and canonicalize afterwards.
    #[arg(long)]
    pub full_strip: bool,
}

#[derive(Args, Debug)]
pub struct Thm2Args {
    #[arg(long)]
    pub mu: String,
    #[arg(long, default_value_t = 21)]
    pub grid: usize,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct Cor3Args {
    #[arg(long)]
    pub mu: String,
    /// Grid points in (0, ½); defaults to 31 log-spaced points in [1e-4, 1e-1].
    #[arg(long)]
    pub x: Vec<f64>,
}

#[derive(Args, Debug)]
pub struct MoreraJArgs {
    #[arg(long)]
    pub r: f64,
    #[arg(long, required = true, allow_hyphen_values = true)]
    pub s: Vec<String>,
}

#[derive(Args, Debug)]
pub struct ZeroScanArgs {
    #[arg(long)]
    pub r: f64,
    /// re0:re1:im0:im1.
    #[arg(long, default_value = "0:1:0:30", allow_hyphen_values = true)]
    pub window: String,
    /// Cell diameter at which isolation stops and Newton starts.
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
    #[arg(long, default_value_t = 64)]
    pub n_min: usize,
}

#[derive(Args, Debug)]
pub struct CommonZeroArgs {
    #[arg(long, required_unless_present = "pairs")]
    pub r1: Option<f64>,
    #[arg(long, required_unless_present = "pairs")]
    pub r2: Option<f64>,
    /// File of (r1, r2) pairs for a batch run.
    #[arg(long, conflicts_with_all = ["r1", "r2"])]
    pub pairs: Option<PathBuf>,
    #[arg(long, default_value = "0:1:0:30", allow_hyphen_values = true)]
    pub window: String,
    #[arg(long, default_value_t = 1e-6)]
    pub match_tol: f64,
    #[arg(long, default_value_t = 64)]
    pub n_min: usize,
}

#[derive(Args, Debug)]
pub struct HarmonicArgs {
    /// Disk function: cos:k, poisson:<path>, holo:poly:c0:c1:…, conjz, abs2, invgrowth, const:c.
    #[arg(long, default_value = "cos:1")]
    pub f: String,
    #[arg(long, default_value = "atom:0.5")]
    pub mu: String,
    /// Number of random group elements.
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    /// Use the identity only.
    #[arg(long)]
    pub identity: bool,
    /// Nodes per circle.
    #[arg(long, default_value_t = 256)]
    pub n: usize,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct ContourArgs {
    #[arg(long)]
    pub f: String,
    /// Euclidean radius of the central circle.
    #[arg(long, default_value_t = 0.5)]
    pub r: f64,
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[arg(long)]
    pub identity: bool,
    #[arg(long, default_value_t = 256)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct GrowthArgs {
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub c: f64,
    /// Sample points; defaults to radii 0, 0.1, …, 0.99 at eight angles.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Vec<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            let line = msg
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect::<Vec<_>>()
                .join(" ");
            let line = line.trim_start_matches("error: ");
            eprintln!("error: E_USAGE: {line}");
            return ExitCode::from(2);
        }
    };
    let outcome = commands::run(&cli);
    if let Some(report) = &outcome.report {
        print!("{}", report.render(cli.format));
    }
    match outcome.error {
        None => ExitCode::SUCCESS,
        Some(e) => {
            eprintln!("error: {}: {}", e.code, e.message);
            ExitCode::from(e.exit)
        }
    }
}
