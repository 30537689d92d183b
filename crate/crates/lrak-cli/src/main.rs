//! `lrak`: figure series, Zolotarev nodes and low-rank factor export.

mod svg;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lrak::figures::{approximate, run_figure, AnyFactors, ExperimentConfig, Figure, Series};
use lrak::kernels::{KernelSpec, DEFAULT_SEED};
use lrak::linalg::DenseMatrix;
use lrak::lowrank::scheme_from_rational;
use lrak::moebius::ExtendedReal;
use lrak::zolotarev::{extended_nodes_z1, nodes_poles, Interval, IntervalPair};
use lrak::{Complex64, Error};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "lrak",
    version,
    about = "Zolotarev low-rank approximation of kernel matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Error curves of a reference experiment as CSV.
    Figure(FigureArgs),
    /// Zolotarev nodes, poles and barycentric weights for a pair of intervals.
    Nodes(NodesArgs),
    /// Rank-n factors of a kernel family on its reference grid.
    Approx(ApproxArgs),
}

#[derive(Args)]
struct FigureArgs {
    /// hankel-intro, cauchy-matrix, cauchy-tensor, log-cauchy or hankel-transform.
    figure: Figure,
    #[arg(long, default_value_t = 20)]
    n_max: usize,
    /// Grid seed (log-cauchy only).
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Comma-separated subset of best, zolotarev, chebyshev, bound.
    #[arg(long, value_delimiter = ',')]
    series: Option<Vec<Series>>,
    /// Use the extended scheme with the extra node t.
    #[arg(long)]
    z1_node: bool,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct NodesArgs {
    /// Interpolation interval E.
    #[arg(long = "E", num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true, required = true)]
    e: Vec<f64>,
    /// Singular interval F.
    #[arg(long = "F", num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true, required = true)]
    f: Vec<f64>,
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    z1_node: bool,
}

#[derive(Args)]
struct ApproxArgs {
    /// gamma-ratio-hankel, cauchy, cauchy-tensor, log-cauchy, twisted-hankel or beta-cauchy.
    #[arg(long)]
    kernel: String,
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    #[arg(long, default_value_t = 0.5)]
    beta: f64,
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    out: PathBuf,
    /// Use the extended scheme with the extra node t.
    #[arg(long)]
    z1_node: bool,
    /// Also report the measured relative spectral error.
    #[arg(long)]
    check: bool,
}

enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

/// 17 significant digits, positional for moderate magnitudes.
fn fmt17(v: f64) -> String {
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let a = v.abs();
    if a != 0.0 && (1e-4..1e16).contains(&a) {
        let decimals = (16 - a.log10().floor() as i32).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.16e}")
    }
}

fn run_figure_cmd(args: FigureArgs) -> Result<(), Failure> {
    let mut config = ExperimentConfig::new(args.figure, args.n_max);
    config.seed = args.seed;
    if let Some(series) = &args.series {
        config = config.with_series(series);
    }
    config.z1_node |= args.z1_node;
    let data = run_figure(&config)?;
    let csv = data.to_csv();
    match &args.out {
        Some(path) => fs::write(path, &csv).map_err(|e| io_err(path, e))?,
        None => print!("{csv}"),
    }
    if let Some(path) = &args.svg {
        fs::write(path, svg::render(&data)).map_err(|e| io_err(path, e))?;
    }
    Ok(())
}

fn interval(v: &[f64]) -> Result<Interval, Failure> {
    Ok(Interval::new(
        ExtendedReal::from_f64(v[0]),
        ExtendedReal::from_f64(v[1]),
    )?)
}

fn run_nodes_cmd(args: NodesArgs) -> Result<(), Failure> {
    let pair = IntervalPair::new(interval(&args.e)?, interval(&args.f)?)?;
    let rp = if args.z1_node {
        extended_nodes_z1(&pair, args.rank)?
    } else {
        nodes_poles(&pair, args.rank)?
    };
    let scheme = scheme_from_rational(&rp)?;
    let mut out = String::new();
    writeln!(out, "gamma = {}", fmt17(pair.gamma())).unwrap();
    for (j, (&q, &m)) in scheme.nodes().iter().zip(scheme.multiplicities()).enumerate() {
        let double = if m > 1 { " (double)" } else { "" };
        writeln!(out, "q[{}] = {}{double}", j + 1, fmt17(q)).unwrap();
    }
    for (j, p) in scheme.poles().iter().enumerate() {
        writeln!(out, "p[{}] = {}", j + 1, fmt17(p.to_f64())).unwrap();
    }
    for (j, w) in scheme.weights().iter().enumerate() {
        writeln!(out, "w[{}] = {}", j + 1, fmt17(w.value())).unwrap();
    }
    print!("{out}");
    Ok(())
}

fn parse_kernel(name: &str, alpha: f64, beta: f64) -> Result<KernelSpec, Failure> {
    Ok(match name {
        "gamma-ratio-hankel" => KernelSpec::GammaRatioHankel,
        "cauchy" => KernelSpec::Cauchy,
        "cauchy-tensor" => KernelSpec::CauchyTensor,
        "log-cauchy" => KernelSpec::LogCauchy,
        "twisted-hankel" => KernelSpec::TwistedHankel,
        "beta-cauchy" => KernelSpec::beta_cauchy(alpha, beta)?,
        _ => return Err(Failure::Usage(format!("unknown kernel '{name}'"))),
    })
}

fn real_csv(m: &DenseMatrix<f64>) -> String {
    let mut s = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| format!("{v:.16e}")).collect();
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

/// Each complex entry takes two columns, real then imaginary part.
fn complex_csv(m: &DenseMatrix<Complex64>) -> String {
    let mut s = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m
            .row(i)
            .iter()
            .map(|v| format!("{:.16e},{:.16e}", v.re, v.im))
            .collect();
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

fn run_approx_cmd(args: ApproxArgs) -> Result<(), Failure> {
    let kernel = parse_kernel(&args.kernel, args.alpha, args.beta)?;
    let z1 = args.z1_node.then_some(true);
    let approx = approximate(kernel, args.rank, z1, args.check)?;
    fs::create_dir_all(&args.out).map_err(|e| io_err(&args.out, e))?;
    let (u, v, entry, rows, cols) = match &approx.factors {
        AnyFactors::Real(f) => (real_csv(&f.u), real_csv(&f.v), "real", f.u.rows(), f.v.cols()),
        AnyFactors::Complex(f) => (complex_csv(&f.u), real_csv(&f.v), "complex", f.u.rows(), f.v.cols()),
    };
    for (name, body) in [("U.csv", u), ("V.csv", v)] {
        let path = args.out.join(name);
        fs::write(&path, body).map_err(|e| io_err(&path, e))?;
    }
    let scheme = &approx.scheme;
    let meta = json!({
        "kernel": kernel.name(),
        "alpha": matches!(kernel, KernelSpec::BetaCauchy { .. }).then_some(args.alpha),
        "beta": matches!(kernel, KernelSpec::BetaCauchy { .. }).then_some(args.beta),
        "rank": scheme.rank(),
        "rows": rows,
        "cols": cols,
        "entry": entry,
        "extended_scheme": scheme.is_hermite() || args.z1_node,
        "nodes": scheme.nodes(),
        "multiplicities": scheme.multiplicities(),
        "poles": scheme.poles().iter().map(|p| fmt17(p.to_f64())).collect::<Vec<_>>(),
        "relative_error": approx.relative_error,
    });
    let path = args.out.join("metadata.json");
    let text = serde_json::to_string_pretty(&meta).expect("metadata serializes");
    fs::write(&path, text + "\n").map_err(|e| io_err(&path, e))?;
    if let Some(e) = approx.relative_error {
        println!("relative error = {e:.16e}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Figure(a) => run_figure_cmd(a),
        Command::Nodes(a) => run_nodes_cmd(a),
        Command::Approx(a) => run_approx_cmd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Convergence(_) | Error::Divergence(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
