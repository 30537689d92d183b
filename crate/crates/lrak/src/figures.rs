//! Reference experiments: error curves of the best, Zolotarev and Chebyshev
//! rank-n approximations together with the matching bound curve.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;

use crate::bounds::{beta_bound, cauchy_sigma_bound, hankel_bound, is_formula_edge, log_cauchy_bound};
use crate::error::{domain, Result};
pub use crate::kernels::Figure;
use crate::kernels::{
    eval_as, eval_dy_as, figure_grids, figure_matrix, FigureGrids, FromKernelValue, KernelArg, KernelSpec, XGrid,
    DEFAULT_SEED,
};
use crate::linalg::{singular_values, DenseMatrix};
use crate::lowrank::{
    build_factors_hermite, chebyshev_scheme, relative_error, scheme_from_rational, ChebyshevVariant,
    InterpolationScheme, LowRankFactors,
};
use crate::specfun::SQRT_PI;
use crate::zolotarev::{extended_nodes_z1, nodes_poles, z1_node, IntervalPair};
use crate::Complex64;

/// Truncation tolerance of the beta-bound series.
pub const BETA_SERIES_TOL: f64 = 1e-16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    Best,
    Zolotarev,
    Chebyshev,
    Bound,
}

impl Series {
    pub const ALL: [Series; 4] = [Series::Best, Series::Zolotarev, Series::Chebyshev, Series::Bound];

    pub fn name(&self) -> &'static str {
        match self {
            Series::Best => "best",
            Series::Zolotarev => "zolotarev",
            Series::Chebyshev => "chebyshev",
            Series::Bound => "bound",
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Series {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Series::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown series '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub figure: Figure,
    pub n_max: usize,
    pub seed: u64,
    pub series: BTreeSet<Series>,
    /// Use the extended scheme with the extra node t.
    pub z1_node: bool,
}

impl ExperimentConfig {
    /// All series, default seed and the figure's default scheme.
    pub fn new(figure: Figure, n_max: usize) -> Self {
        ExperimentConfig {
            figure,
            n_max,
            seed: DEFAULT_SEED,
            series: Series::ALL.into_iter().collect(),
            z1_node: default_z1(figure),
        }
    }

    pub fn with_series(mut self, series: &[Series]) -> Self {
        self.series = series.iter().copied().collect();
        self
    }
}

/// Figures 4 and 5 use the extended scheme; the others the plain one.
pub fn default_z1(figure: Figure) -> bool {
    matches!(figure, Figure::LogCauchy | Figure::HankelTransform)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub series: Series,
    pub n: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub figure: Figure,
    pub rows: Vec<Row>,
    pub sigma1: f64,
    /// Bound rows that use the Z₀ = 4 convention.
    pub formula_edge: Vec<usize>,
}

impl FigureData {
    pub fn series(&self, s: Series) -> Vec<(usize, f64)> {
        self.rows
            .iter()
            .filter(|r| r.series == s)
            .map(|r| (r.n, r.value))
            .collect()
    }

    pub fn value(&self, s: Series, n: usize) -> Option<f64> {
        self.rows.iter().find(|r| r.series == s && r.n == n).map(|r| r.value)
    }

    /// `figure,series,n,value` with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("figure,series,n,value\n");
        for r in &self.rows {
            writeln!(out, "{},{},{},{:.16e}", self.figure, r.series, r.n, r.value).unwrap();
        }
        out
    }
}

/// Everything needed to build rank-n approximations for one kernel matrix.
#[derive(Debug, Clone)]
pub struct Problem {
    pub kernel: KernelSpec,
    pub x: Vec<KernelArg>,
    pub y: Vec<f64>,
    pub pair: IntervalPair,
    pub chebyshev: ChebyshevVariant,
}

fn bounds_of(v: impl Iterator<Item = f64>) -> (f64, f64) {
    v.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)))
}

impl Problem {
    pub fn for_figure(figure: Figure, grids: &FigureGrids) -> Result<Problem> {
        let y = grids.y.points.clone();
        let (ylo, yhi) = bounds_of(y.iter().copied());
        let e = (ylo, yhi);
        let pair = match (figure, &grids.x) {
            (Figure::HankelIntro, _) => IntervalPair::from_bounds(e, (f64::NEG_INFINITY, -0.5))?,
            (Figure::CauchyMatrix, XGrid::Points(g)) => {
                let (lo, hi) = bounds_of(g.points.iter().copied());
                IntervalPair::from_bounds(e, (-hi, -lo))?
            }
            (Figure::CauchyTensor, XGrid::Pairs { w, x }) => {
                let (wl, wh) = bounds_of(w.points.iter().copied());
                let (xl, xh) = bounds_of(x.points.iter().copied());
                IntervalPair::from_bounds(e, (-(wh + xh), -(wl + xl)))?
            }
            (Figure::LogCauchy, XGrid::Points(g)) => {
                let (lo, _) = bounds_of(g.points.iter().copied());
                IntervalPair::from_bounds(e, (f64::NEG_INFINITY, -lo))?
            }
            (Figure::HankelTransform, _) => IntervalPair::from_bounds(e, (f64::NEG_INFINITY, 0.0))?,
            _ => return domain("grid shape does not match the figure"),
        };
        let chebyshev = match figure {
            Figure::LogCauchy | Figure::HankelTransform => ChebyshevVariant::TModified(z1_node(&pair)?),
            _ => ChebyshevVariant::Plain,
        };
        Ok(Problem {
            kernel: figure.kernel(),
            x: grids.x.args(),
            y,
            pair,
            chebyshev,
        })
    }

    /// Beta–Cauchy kernel on the integer grid 0..=100, singular set [−∞, −α].
    pub fn beta_cauchy(alpha: f64, beta: f64) -> Result<Problem> {
        let kernel = KernelSpec::beta_cauchy(alpha, beta)?;
        let pts: Vec<f64> = (0..=100).map(f64::from).collect();
        Ok(Problem {
            kernel,
            x: pts.iter().map(|&v| KernelArg::Scalar(v)).collect(),
            y: pts,
            pair: IntervalPair::from_bounds((0.0, 100.0), (f64::NEG_INFINITY, -alpha))?,
            chebyshev: ChebyshevVariant::Plain,
        })
    }

    pub fn zolotarev_scheme(&self, n: usize, z1: bool) -> Result<InterpolationScheme> {
        let rp = if z1 {
            extended_nodes_z1(&self.pair, n)?
        } else {
            nodes_poles(&self.pair, n)?
        };
        scheme_from_rational(&rp)
    }

    pub fn chebyshev_scheme(&self, n: usize) -> Result<InterpolationScheme> {
        let (c, d) = (self.pair.e.lo.to_f64(), self.pair.e.hi.to_f64());
        chebyshev_scheme(c, d, n, self.chebyshev)
    }

    pub fn factors<T: FromKernelValue>(&self, scheme: &InterpolationScheme) -> Result<LowRankFactors<T>> {
        let k = self.kernel;
        build_factors_hermite(
            |x: &KernelArg, y| eval_as::<T>(&k, x, y),
            |x: &KernelArg, y| eval_dy_as::<T>(&k, x, y),
            &self.x,
            &self.y,
            scheme,
        )
    }

    pub fn matrix<T: FromKernelValue>(&self) -> Result<DenseMatrix<T>> {
        crate::kernels::assemble(&self.kernel, &self.x, &self.y)
    }
}

fn interpolant_curve<T: FromKernelValue>(
    a: &DenseMatrix<T>,
    problem: &Problem,
    ns: &[usize],
    scheme: &(dyn Fn(usize) -> Result<InterpolationScheme> + Sync),
) -> Result<Vec<(usize, f64)>> {
    ns.par_iter()
        .map(|&n| {
            let s = scheme(n)?;
            let f = problem.factors::<T>(&s)?;
            Ok((n, relative_error(a, &f)?))
        })
        .collect()
}

fn bound_curve(figure: Figure, problem: &Problem, sigma1: f64, ns: &[usize]) -> Result<Vec<(usize, f64)>> {
    let (c, d) = (problem.pair.e.lo.to_f64(), problem.pair.e.hi.to_f64());
    let big_n = problem.y.len();
    ns.par_iter()
        .map(|&n| {
            let v = match figure {
                Figure::HankelIntro => {
                    // the beta kernel with α = β = 1/2 is √π times this matrix
                    beta_bound(big_n - 1, 0.5, 0.5, n, BETA_SERIES_TOL)? / (SQRT_PI * sigma1)
                }
                Figure::CauchyMatrix | Figure::CauchyTensor => cauchy_sigma_bound(n, &problem.pair, sigma1)? / sigma1,
                Figure::LogCauchy => log_cauchy_bound(big_n, c, d, n)? / sigma1,
                Figure::HankelTransform => hankel_bound(big_n, c, d, n)? / sigma1,
            };
            Ok((n, v))
        })
        .collect()
}

fn run_typed<T: FromKernelValue>(config: &ExperimentConfig) -> Result<FigureData> {
    let grids = figure_grids(config.figure, config.seed)?;
    let problem = Problem::for_figure(config.figure, &grids)?;
    let a: DenseMatrix<T> = figure_matrix(config.figure, &grids)?;
    let min_dim = a.rows().min(a.cols());
    if config.n_max == 0 || config.n_max >= min_dim {
        return domain(format!("n_max must lie in 1..{min_dim}, got {}", config.n_max));
    }
    if config.series.is_empty() {
        return domain("no series selected");
    }
    let sv = singular_values(&a)?;
    let sigma1 = sv[0];
    let ns: Vec<usize> = (1..=config.n_max).collect();
    let mut rows = Vec::new();
    let mut formula_edge = Vec::new();
    for &series in &config.series {
        let curve = match series {
            Series::Best => ns.iter().map(|&n| (n, sv[n] / sigma1)).collect(),
            Series::Zolotarev => {
                interpolant_curve(&a, &problem, &ns, &|n| problem.zolotarev_scheme(n, config.z1_node))?
            }
            Series::Chebyshev => interpolant_curve(&a, &problem, &ns, &|n| problem.chebyshev_scheme(n))?,
            Series::Bound => {
                if matches!(config.figure, Figure::LogCauchy | Figure::HankelTransform) {
                    formula_edge.extend(ns.iter().copied().filter(|&n| is_formula_edge(n)));
                }
                bound_curve(config.figure, &problem, sigma1, &ns)?
            }
        };
        rows.extend(curve.into_iter().map(|(n, value)| Row { series, n, value }));
    }
    Ok(FigureData {
        figure: config.figure,
        rows,
        sigma1,
        formula_edge,
    })
}

/// Runs one experiment; rows come out sorted by (series, n).
pub fn run_figure(config: &ExperimentConfig) -> Result<FigureData> {
    match config.figure {
        Figure::HankelTransform => run_typed::<Complex64>(config),
        _ => run_typed::<f64>(config),
    }
}

/// Factors of either entry type.
#[derive(Debug, Clone)]
pub enum AnyFactors {
    Real(LowRankFactors<f64>),
    Complex(LowRankFactors<Complex64>),
}

#[derive(Debug, Clone)]
pub struct Approximation {
    pub kernel: KernelSpec,
    pub scheme: InterpolationScheme,
    pub factors: AnyFactors,
    pub relative_error: Option<f64>,
}

/// Problem for a kernel family on its reference grid.
pub fn default_problem(kernel: KernelSpec) -> Result<(Problem, bool)> {
    let figure = match kernel {
        KernelSpec::BetaCauchy { alpha, beta } => return Ok((Problem::beta_cauchy(alpha, beta)?, false)),
        KernelSpec::GammaRatioHankel => Figure::HankelIntro,
        KernelSpec::Cauchy => Figure::CauchyMatrix,
        KernelSpec::CauchyTensor => Figure::CauchyTensor,
        KernelSpec::LogCauchy => Figure::LogCauchy,
        KernelSpec::TwistedHankel => Figure::HankelTransform,
    };
    let grids = figure_grids(figure, DEFAULT_SEED)?;
    Ok((Problem::for_figure(figure, &grids)?, default_z1(figure)))
}

/// Rank-n Zolotarev factors of a kernel family on its reference grid,
/// optionally with the measured relative spectral error.
pub fn approximate(kernel: KernelSpec, rank: usize, z1: Option<bool>, check: bool) -> Result<Approximation> {
    let (problem, z1_default) = default_problem(kernel)?;
    let min_dim = problem.x.len().min(problem.y.len());
    if rank == 0 || rank > min_dim {
        return domain(format!("rank must lie in 1..={min_dim}, got {rank}"));
    }
    let scheme = problem.zolotarev_scheme(rank, z1.unwrap_or(z1_default))?;
    let (factors, relative_error) = if kernel.is_complex() {
        let f = problem.factors::<Complex64>(&scheme)?;
        let e = if check {
            Some(relative_error(&problem.matrix::<Complex64>()?, &f)?)
        } else {
            None
        };
        (AnyFactors::Complex(f), e)
    } else {
        let f = problem.factors::<f64>(&scheme)?;
        let e = if check {
            Some(relative_error(&problem.matrix::<f64>()?, &f)?)
        } else {
            None
        };
        (AnyFactors::Real(f), e)
    };
    Ok(Approximation {
        kernel,
        scheme,
        factors,
        relative_error,
    })
}
