//! Kernel families and the sample grids of the reference experiments.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::linalg::{unfold_tensor, DenseMatrix, Scalar, Tensor3};
use crate::specfun::{
    bessel_j0_zeros, digamma_diff, gamma_half_ratio, hankel_h0_twisted, hankel_h1_twisted, ln_gamma_delta, log_gamma,
};
use crate::Complex64;

/// Default seed of the random log-Cauchy grids.
pub const DEFAULT_SEED: u64 = 20250001;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelSpec {
    /// Γ(x+y+1/2) / Γ(x+y+1).
    GammaRatioHankel,
    /// 1 / (x+y).
    Cauchy,
    /// 1 / (w+x+y) with x = (w, x).
    CauchyTensor,
    /// ln(x+y).
    LogCauchy,
    /// H0⁽¹⁾(xy)·e^{−ixy}.
    TwistedHankel,
    /// B(x+y+α, β) = Σ_k w(k, β)/(x+y+k+α).
    BetaCauchy { alpha: f64, beta: f64 },
}

impl KernelSpec {
    pub fn beta_cauchy(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && beta > 0.0) || !alpha.is_finite() || !beta.is_finite() {
            return domain(format!("BetaCauchy needs alpha, beta > 0, got {alpha}, {beta}"));
        }
        if beta.fract() == 0.0 {
            return domain(format!("BetaCauchy needs non-integer beta, got {beta}"));
        }
        Ok(KernelSpec::BetaCauchy { alpha, beta })
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, KernelSpec::TwistedHankel)
    }

    pub fn name(&self) -> &'static str {
        match self {
            KernelSpec::GammaRatioHankel => "gamma-ratio-hankel",
            KernelSpec::Cauchy => "cauchy",
            KernelSpec::CauchyTensor => "cauchy-tensor",
            KernelSpec::LogCauchy => "log-cauchy",
            KernelSpec::TwistedHankel => "twisted-hankel",
            KernelSpec::BetaCauchy { .. } => "beta-cauchy",
        }
    }
}

/// First kernel argument: a real number or, for the tensor kernel, a pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelArg {
    Scalar(f64),
    Pair(f64, f64),
}

impl KernelArg {
    fn sum(self) -> f64 {
        match self {
            KernelArg::Scalar(x) => x,
            KernelArg::Pair(w, x) => w + x,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelValue {
    Real(f64),
    Complex(Complex64),
}

/// Entry types a kernel value can be stored as.
pub trait FromKernelValue: Scalar {
    fn from_value(v: KernelValue) -> Result<Self>;
}

impl FromKernelValue for f64 {
    fn from_value(v: KernelValue) -> Result<Self> {
        match v {
            KernelValue::Real(x) => Ok(x),
            KernelValue::Complex(_) => domain("complex kernel value requested as real"),
        }
    }
}

impl FromKernelValue for Complex64 {
    fn from_value(v: KernelValue) -> Result<Self> {
        Ok(match v {
            KernelValue::Real(x) => Complex64::new(x, 0.0),
            KernelValue::Complex(z) => z,
        })
    }
}

fn scalar_arg(spec: &KernelSpec, x: &KernelArg) -> Result<f64> {
    match (spec, x) {
        (KernelSpec::CauchyTensor, _) => Ok(x.sum()),
        (_, KernelArg::Scalar(v)) => Ok(*v),
        (_, KernelArg::Pair(..)) => domain(format!("{} takes a scalar x", spec.name())),
    }
}

fn positive(s: f64, what: &str) -> Result<f64> {
    if s > 0.0 && s.is_finite() {
        Ok(s)
    } else {
        domain(format!("{what} must be positive, got {s}"))
    }
}

/// K(x, y).
pub fn eval(spec: &KernelSpec, x: &KernelArg, y: f64) -> Result<KernelValue> {
    let xv = scalar_arg(spec, x)?;
    let s = xv + y;
    Ok(match *spec {
        KernelSpec::GammaRatioHankel => {
            if !(s >= 0.0) {
                return domain(format!("x + y = {s} is negative"));
            }
            KernelValue::Real(gamma_half_ratio(s)?)
        }
        KernelSpec::Cauchy | KernelSpec::CauchyTensor => {
            if s == 0.0 || !s.is_finite() {
                return domain("Cauchy kernel evaluated on its singularity");
            }
            KernelValue::Real(1.0 / s)
        }
        KernelSpec::LogCauchy => KernelValue::Real(positive(s, "x + y")?.ln()),
        KernelSpec::TwistedHankel => KernelValue::Complex(hankel_h0_twisted(positive(xv * y, "x·y")?)?),
        KernelSpec::BetaCauchy { alpha, beta } => {
            let a = positive(s + alpha, "x + y + alpha")?;
            KernelValue::Real((log_gamma(beta)? - ln_gamma_delta(a, beta)?).exp())
        }
    })
}

/// ∂K/∂y at (x, y).
pub fn eval_dy(spec: &KernelSpec, x: &KernelArg, y: f64) -> Result<KernelValue> {
    let xv = scalar_arg(spec, x)?;
    let s = xv + y;
    Ok(match *spec {
        KernelSpec::GammaRatioHankel => {
            let f = gamma_half_ratio(s)?;
            KernelValue::Real(f * digamma_diff(s + 0.5, s + 1.0)?)
        }
        KernelSpec::Cauchy | KernelSpec::CauchyTensor => {
            if s == 0.0 {
                return domain("Cauchy kernel evaluated on its singularity");
            }
            KernelValue::Real(-1.0 / (s * s))
        }
        KernelSpec::LogCauchy => KernelValue::Real(1.0 / positive(s, "x + y")?),
        KernelSpec::TwistedHankel => {
            // d/du [H0 e^{−iu}] = (−H1 − i H0) e^{−iu}
            let u = positive(xv * y, "x·y")?;
            let h0 = hankel_h0_twisted(u)?;
            let h1 = hankel_h1_twisted(u)?;
            KernelValue::Complex((-h1 - Complex64::i() * h0) * xv)
        }
        KernelSpec::BetaCauchy { alpha, beta } => {
            let a = positive(s + alpha, "x + y + alpha")?;
            let v = (log_gamma(beta)? - ln_gamma_delta(a, beta)?).exp();
            KernelValue::Real(v * digamma_diff(a, a + beta)?)
        }
    })
}

/// Typed evaluation.
pub fn eval_as<T: FromKernelValue>(spec: &KernelSpec, x: &KernelArg, y: f64) -> Result<T> {
    T::from_value(eval(spec, x, y)?)
}

/// Typed derivative evaluation.
pub fn eval_dy_as<T: FromKernelValue>(spec: &KernelSpec, x: &KernelArg, y: f64) -> Result<T> {
    T::from_value(eval_dy(spec, x, y)?)
}

/// Matrix of K(x_i, y_j), assembled by rows in parallel.
pub fn assemble<T: FromKernelValue>(spec: &KernelSpec, xs: &[KernelArg], ys: &[f64]) -> Result<DenseMatrix<T>> {
    let rows: Vec<Vec<T>> = xs
        .par_iter()
        .map(|x| ys.iter().map(|&y| eval_as::<T>(spec, x, y)).collect::<Result<Vec<T>>>())
        .collect::<Result<_>>()?;
    DenseMatrix::from_row_major(xs.len(), ys.len(), rows.into_iter().flatten().collect())
}

/// Unfolding (rows (w_i, x_j), columns y_k) of the tensor K((w_i, x_j), y_k).
pub fn assemble_tensor<T: FromKernelValue>(
    spec: &KernelSpec,
    ws: &[f64],
    xs: &[f64],
    ys: &[f64],
) -> Result<DenseMatrix<T>> {
    let n = ws.len();
    if xs.len() != n || ys.len() != n {
        return domain("tensor grids must have equal length");
    }
    let mut err = None;
    let t = Tensor3::from_fn(n, |i, j, k| {
        match eval_as::<T>(spec, &KernelArg::Pair(ws[i], xs[j]), ys[k]) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                T::zero()
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(unfold_tensor(&t)),
    }
}

/// Sample points of a counting measure.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleGrid {
    pub points: Vec<f64>,
    pub measure_mass: f64,
}

impl SampleGrid {
    pub fn counting(points: Vec<f64>) -> Self {
        let measure_mass = points.len() as f64;
        SampleGrid { points, measure_mass }
    }

    pub fn equispaced(lo: f64, hi: f64, n: usize) -> Self {
        let pts = (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect();
        SampleGrid::counting(pts)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// First-argument grid: scalars, or the (w, x) product grid of a tensor.
#[derive(Debug, Clone, PartialEq)]
pub enum XGrid {
    Points(SampleGrid),
    Pairs { w: SampleGrid, x: SampleGrid },
}

impl XGrid {
    /// Arguments in row order of the assembled matrix.
    pub fn args(&self) -> Vec<KernelArg> {
        match self {
            XGrid::Points(g) => g.points.iter().map(|&x| KernelArg::Scalar(x)).collect(),
            XGrid::Pairs { w, x } => w
                .points
                .iter()
                .flat_map(|&a| x.points.iter().map(move |&b| KernelArg::Pair(a, b)))
                .collect(),
        }
    }
}

/// The five reference experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Figure {
    HankelIntro,
    CauchyMatrix,
    CauchyTensor,
    LogCauchy,
    HankelTransform,
}

impl Figure {
    pub const ALL: [Figure; 5] = [
        Figure::HankelIntro,
        Figure::CauchyMatrix,
        Figure::CauchyTensor,
        Figure::LogCauchy,
        Figure::HankelTransform,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Figure::HankelIntro => "hankel-intro",
            Figure::CauchyMatrix => "cauchy-matrix",
            Figure::CauchyTensor => "cauchy-tensor",
            Figure::LogCauchy => "log-cauchy",
            Figure::HankelTransform => "hankel-transform",
        }
    }

    pub fn kernel(&self) -> KernelSpec {
        match self {
            Figure::HankelIntro => KernelSpec::GammaRatioHankel,
            Figure::CauchyMatrix => KernelSpec::Cauchy,
            Figure::CauchyTensor => KernelSpec::CauchyTensor,
            Figure::LogCauchy => KernelSpec::LogCauchy,
            Figure::HankelTransform => KernelSpec::TwistedHankel,
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Figure {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Figure::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| format!("unknown figure '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureGrids {
    pub x: XGrid,
    pub y: SampleGrid,
}

/// n points in [1, n] with both ends pinned and the rest uniform, sorted.
fn pinned_uniform(rng: &mut SplitMix64, n: usize) -> SampleGrid {
    let top = n as f64;
    let mut pts = Vec::with_capacity(n);
    pts.push(1.0);
    for _ in 0..n - 2 {
        pts.push(1.0 + (top - 1.0) * rng.gen::<f64>());
    }
    pts.push(top);
    pts.sort_by(f64::total_cmp);
    SampleGrid::counting(pts)
}

/// Sample grids of a reference experiment. `seed` only affects `LogCauchy`,
/// whose points come from SplitMix64 (increment 0x9E3779B97F4A7C15,
/// multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB) mapped to
/// [0, 1) as (z >> 11)·2⁻⁵³.
pub fn figure_grids(fig: Figure, seed: u64) -> Result<FigureGrids> {
    Ok(match fig {
        Figure::HankelIntro => {
            let g = SampleGrid::counting((0..=100).map(f64::from).collect());
            FigureGrids {
                x: XGrid::Points(g.clone()),
                y: g,
            }
        }
        Figure::CauchyMatrix => FigureGrids {
            x: XGrid::Points(SampleGrid::equispaced(1.0, 70.0, 100)),
            y: SampleGrid::equispaced(2.0, 100.0, 100),
        },
        Figure::CauchyTensor => FigureGrids {
            x: XGrid::Pairs {
                w: SampleGrid::equispaced(1.0, 70.0, 50),
                x: SampleGrid::equispaced(1.0, 199.0, 50),
            },
            y: SampleGrid::equispaced(2.0, 100.0, 50),
        },
        Figure::LogCauchy => {
            let mut rng = SplitMix64::seed_from_u64(seed);
            let x = pinned_uniform(&mut rng, 100);
            let y = pinned_uniform(&mut rng, 100);
            FigureGrids { x: XGrid::Points(x), y }
        }
        Figure::HankelTransform => {
            let n = 100;
            let w = bessel_j0_zeros(n + 1)?;
            let x = w[..n].iter().map(|v| v / w[n]).collect();
            FigureGrids {
                x: XGrid::Points(SampleGrid::counting(x)),
                y: SampleGrid::counting(w[..n].to_vec()),
            }
        }
    })
}

/// Kernel matrix of a reference experiment on its grids.
pub fn figure_matrix<T: FromKernelValue>(fig: Figure, grids: &FigureGrids) -> Result<DenseMatrix<T>> {
    let spec = fig.kernel();
    match &grids.x {
        XGrid::Pairs { w, x } => assemble_tensor(&spec, &w.points, &x.points, &grids.y.points),
        xg => assemble(&spec, &xg.args(), &grids.y.points),
    }
}
