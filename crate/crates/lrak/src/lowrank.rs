//! Rational interpolation with prescribed poles in barycentric form and the
//! rank-ℓ factors K(x, y) ≈ Σ_j K(x, q_j) φ_j(y) it induces.
//!
//! A node may appear twice. It then carries a value and a y-derivative
//! sample (Hermite interpolation); the extended Zolotarev scheme needs this
//! because its extra node coincides with the middle Zolotarev zero.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::linalg::{singular_values, DenseMatrix, Scalar};
use crate::moebius::ExtendedReal;
use crate::zolotarev::{finite_poles, RationalNodesPoles};

/// Snap radius for near-node evaluation, relative to the node spread.
const SNAP: f64 = 1e-13;
/// Minimum separation of distinct nodes, relative to the node spread.
const MIN_GAP: f64 = 1e-12;

/// Nonzero real number stored as sign and natural log of the magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    pub sign: f64,
    pub log: f64,
}

impl SignedLog {
    pub fn value(self) -> f64 {
        self.sign * self.log.exp()
    }
}

/// Position of a sample in the rank-ℓ layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    /// K(x, q_j).
    Value(usize),
    /// ∂K/∂y at (x, q_j), present only for double nodes.
    Derivative(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterpolationScheme {
    nodes: Vec<f64>,
    multiplicity: Vec<u8>,
    poles: Vec<ExtendedReal>,
    finite_poles: Vec<f64>,
    weights: Vec<SignedLog>,
    /// ψ'/ψ at each double node, with ψ = φ/(ξ−q_j)²; zero for simple nodes.
    lambda: Vec<f64>,
    /// ln of the factor divided out of the stored weights.
    log_scale: f64,
    diam: f64,
}

impl InterpolationScheme {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn multiplicities(&self) -> &[u8] {
        &self.multiplicity
    }

    pub fn poles(&self) -> &[ExtendedReal] {
        &self.poles
    }

    pub fn weights(&self) -> &[SignedLog] {
        &self.weights
    }

    /// ℓ, counting double nodes twice.
    pub fn rank(&self) -> usize {
        self.multiplicity.iter().map(|&m| m as usize).sum()
    }

    pub fn is_hermite(&self) -> bool {
        self.multiplicity.iter().any(|&m| m > 1)
    }

    /// Sample layout: each node's value, followed by its derivative when the
    /// node is double.
    pub fn slots(&self) -> Vec<Slot> {
        let mut out = Vec::with_capacity(self.rank());
        for (j, &m) in self.multiplicity.iter().enumerate() {
            out.push(Slot::Value(j));
            if m == 2 {
                out.push(Slot::Derivative(j));
            }
        }
        out
    }

    /// The interpolation nodes with repetition, i.e. the zeros of φ.
    pub fn rational(&self) -> RationalNodesPoles {
        let mut zeros = Vec::with_capacity(self.rank());
        for (&q, &m) in self.nodes.iter().zip(&self.multiplicity) {
            for _ in 0..m {
                zeros.push(q);
            }
        }
        RationalNodesPoles::new(zeros, self.poles.clone())
    }

    fn log_phi(&self, y: f64) -> (f64, f64) {
        let mut sign = 1.0;
        let mut log = 0.0;
        for (&q, &m) in self.nodes.iter().zip(&self.multiplicity) {
            let d = y - q;
            if d < 0.0 && m % 2 == 1 {
                sign = -sign;
            }
            log += m as f64 * d.abs().ln();
        }
        for &p in &self.finite_poles {
            let d = y - p;
            if d < 0.0 {
                sign = -sign;
            }
            log -= d.abs().ln();
        }
        (sign, log)
    }

    fn snap(&self, y: f64) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for (j, &q) in self.nodes.iter().enumerate() {
            let d = (y - q).abs();
            if d < SNAP * self.diam && best.map_or(true, |(_, b)| d < b) {
                best = Some((j, d));
            }
        }
        best.map(|(j, _)| j)
    }

    fn value_slot(&self, node: usize) -> usize {
        self.multiplicity[..node].iter().map(|&m| m as usize).sum()
    }

    /// Cardinal functions at y in slot order: r(y) = Σ_i samples[i]·basis[i].
    pub fn basis(&self, y: f64) -> Result<Vec<f64>> {
        if !y.is_finite() {
            return domain(format!("evaluation point {y} is not finite"));
        }
        if self.finite_poles.contains(&y) {
            return Err(Error::EvaluationAtPole(y));
        }
        let mut out = vec![0.0; self.rank()];
        if let Some(j) = self.snap(y) {
            out[self.value_slot(j)] = 1.0;
            return Ok(out);
        }
        let (sphi, mut lphi) = self.log_phi(y);
        lphi += self.log_scale;
        let mut slot = 0;
        for j in 0..self.nodes.len() {
            let r = y - self.nodes[j];
            let w = self.weights[j];
            if self.multiplicity[j] == 1 {
                out[slot] = sphi * w.sign * r.signum() * (lphi + w.log - r.abs().ln()).exp();
                slot += 1;
            } else {
                let base = sphi * w.sign * (lphi + w.log - 2.0 * r.abs().ln()).exp();
                out[slot] = base * (1.0 - self.lambda[j] * r);
                out[slot + 1] = base * r;
                slot += 2;
            }
        }
        Ok(out)
    }
}

fn spread(nodes: &[f64]) -> f64 {
    let lo = nodes.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = nodes.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if hi > lo {
        hi - lo
    } else {
        lo.abs().max(1.0)
    }
}

fn build(nodes: Vec<f64>, multiplicity: Vec<u8>, poles: &[ExtendedReal], diam: f64) -> Result<InterpolationScheme> {
    let fp = finite_poles(poles);
    let n = nodes.len();
    let mut weights = Vec::with_capacity(n);
    let mut lambda = vec![0.0; n];
    for j in 0..n {
        let q = nodes[j];
        let mut sign = 1.0;
        let mut log = 0.0;
        for &p in &fp {
            let d = q - p;
            if d == 0.0 {
                return domain(format!("pole {p} coincides with a node"));
            }
            if d < 0.0 {
                sign = -sign;
            }
            log += d.abs().ln();
        }
        for i in 0..n {
            if i == j {
                continue;
            }
            let d = q - nodes[i];
            let m = multiplicity[i];
            if d < 0.0 && m % 2 == 1 {
                sign = -sign;
            }
            log -= m as f64 * d.abs().ln();
        }
        weights.push(SignedLog { sign, log });
        if multiplicity[j] == 2 {
            let mut l = 0.0;
            for i in 0..n {
                if i != j {
                    l += multiplicity[i] as f64 / (q - nodes[i]);
                }
            }
            for &p in &fp {
                l -= 1.0 / (q - p);
            }
            lambda[j] = l;
        }
    }
    let top = weights.iter().fold(f64::NEG_INFINITY, |m, w| m.max(w.log));
    for w in weights.iter_mut() {
        w.log -= top;
    }
    Ok(InterpolationScheme {
        nodes,
        multiplicity,
        poles: poles.to_vec(),
        finite_poles: fp,
        weights,
        lambda,
        log_scale: top,
        diam,
    })
}

fn check_nodes(nodes: &[f64]) -> Result<()> {
    if nodes.is_empty() {
        return domain("at least one node is required");
    }
    if nodes.iter().any(|q| !q.is_finite()) {
        return domain("nodes must be finite");
    }
    Ok(())
}

/// Barycentric weights w_j = Π_k(q_j−p_k) / Π_{i≠j}(q_j−q_i) for distinct
/// nodes, normalized to max |w_j| = 1. Infinite poles (and |p| > 1e12)
/// contribute 1.
pub fn barycentric_weights(nodes: &[f64], poles: &[ExtendedReal]) -> Result<InterpolationScheme> {
    check_nodes(nodes)?;
    let diam = spread(nodes);
    let mut sorted = nodes.to_vec();
    sorted.sort_by(f64::total_cmp);
    for w in sorted.windows(2) {
        if w[1] - w[0] <= MIN_GAP * diam {
            return Err(Error::DuplicateNode(w[0]));
        }
    }
    build(nodes.to_vec(), vec![1; nodes.len()], poles, diam)
}

/// Like [`barycentric_weights`] but a node listed twice becomes a double
/// node carrying a derivative sample. Triple nodes are rejected.
pub fn hermite_weights(nodes: &[f64], poles: &[ExtendedReal]) -> Result<InterpolationScheme> {
    check_nodes(nodes)?;
    let diam = spread(nodes);
    let mut distinct: Vec<f64> = Vec::new();
    let mut mult: Vec<u8> = Vec::new();
    for &q in nodes {
        match distinct.iter().position(|&d| (d - q).abs() <= MIN_GAP * diam) {
            Some(i) if mult[i] == 2 => return Err(Error::DuplicateNode(q)),
            Some(i) => mult[i] = 2,
            None => {
                distinct.push(q);
                mult.push(1);
            }
        }
    }
    build(distinct, mult, poles, diam)
}

/// Scheme interpolating at the zeros of φ with φ's poles.
pub fn scheme_from_rational(rp: &RationalNodesPoles) -> Result<InterpolationScheme> {
    hermite_weights(&rp.zeros, &rp.poles)
}

/// Value of the interpolant at y; `samples` follow [`InterpolationScheme::slots`].
pub fn interpolate_eval<T: Scalar>(scheme: &InterpolationScheme, samples: &[T], y: f64) -> Result<T> {
    if samples.len() != scheme.rank() {
        return domain(format!("{} samples for a rank-{} scheme", samples.len(), scheme.rank()));
    }
    if let Some(j) = scheme.snap(y) {
        if !scheme.finite_poles.contains(&y) {
            return Ok(samples[scheme.value_slot(j)]);
        }
    }
    let b = scheme.basis(y)?;
    let mut acc = T::zero();
    for (s, c) in samples.iter().zip(&b) {
        acc += s.scale(*c);
    }
    Ok(acc)
}

/// Rank-ℓ factors: U (rows × ℓ) holds kernel samples at the nodes, V (ℓ × cols)
/// the cardinal functions at the y-grid.
#[derive(Debug, Clone)]
pub struct LowRankFactors<T> {
    pub u: DenseMatrix<T>,
    pub v: DenseMatrix<f64>,
}

impl<T: Scalar> LowRankFactors<T> {
    pub fn rank(&self) -> usize {
        self.v.rows()
    }

    /// The rank-0 approximation of a rows × cols matrix.
    pub fn empty(rows: usize, cols: usize) -> Self {
        LowRankFactors {
            u: DenseMatrix::zeros(rows, 0),
            v: DenseMatrix::zeros(0, cols),
        }
    }

    pub fn product(&self) -> DenseMatrix<T> {
        let (rows, cols, r) = (self.u.rows(), self.v.cols(), self.rank());
        let mut out = DenseMatrix::zeros(rows, cols);
        for i in 0..rows {
            for k in 0..r {
                let a = self.u[(i, k)];
                for j in 0..cols {
                    out[(i, j)] += a.scale(self.v[(k, j)]);
                }
            }
        }
        out
    }
}

fn v_matrix(scheme: &InterpolationScheme, ys: &[f64]) -> Result<DenseMatrix<f64>> {
    let mut v = DenseMatrix::zeros(scheme.rank(), ys.len());
    for (k, &y) in ys.iter().enumerate() {
        for (j, c) in scheme.basis(y)?.into_iter().enumerate() {
            v[(j, k)] = c;
        }
    }
    Ok(v)
}

/// U_ij = K(x_i, q_j), V_jk = φ(y_k) w_j / (y_k − q_j); grid points that hit a
/// node give Kronecker columns.
pub fn build_factors<X, T: Scalar>(
    kernel_eval: impl Fn(&X, f64) -> Result<T>,
    xs: &[X],
    ys: &[f64],
    scheme: &InterpolationScheme,
) -> Result<LowRankFactors<T>> {
    if scheme.is_hermite() {
        return domain("scheme has a double node; use build_factors_hermite");
    }
    build_factors_hermite(kernel_eval, |_: &X, _| unreachable!(), xs, ys, scheme)
}

/// [`build_factors`] for schemes with double nodes; `kernel_dy` gives ∂K/∂y.
pub fn build_factors_hermite<X, T: Scalar>(
    kernel_eval: impl Fn(&X, f64) -> Result<T>,
    kernel_dy: impl Fn(&X, f64) -> Result<T>,
    xs: &[X],
    ys: &[f64],
    scheme: &InterpolationScheme,
) -> Result<LowRankFactors<T>> {
    if xs.is_empty() || ys.is_empty() {
        return domain("grids must be nonempty");
    }
    let slots = scheme.slots();
    let u = DenseMatrix::try_from_fn(xs.len(), slots.len(), |i, j| match slots[j] {
        Slot::Value(n) => kernel_eval(&xs[i], scheme.nodes[n]),
        Slot::Derivative(n) => kernel_dy(&xs[i], scheme.nodes[n]),
    })?;
    if !u.is_finite() {
        return domain("kernel returned non-finite node samples");
    }
    let v = v_matrix(scheme, ys)?;
    Ok(LowRankFactors { u, v })
}

/// Node choices for polynomial interpolation at Chebyshev points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChebyshevVariant {
    /// Roots of T_n.
    Plain,
    /// Roots of T_{n−1} together with the extra node t.
    TModified(f64),
}

fn chebyshev_roots(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
    (1..=n)
        .rev()
        .map(|j| mid + half * ((2 * j - 1) as f64 * PI / (2 * n) as f64).cos())
        .collect()
}

/// Polynomial interpolation scheme on [lo, hi] with n nodes.
pub fn chebyshev_scheme(lo: f64, hi: f64, n: usize, variant: ChebyshevVariant) -> Result<InterpolationScheme> {
    if n == 0 || !(lo < hi) {
        return domain(format!("invalid Chebyshev scheme: n = {n}, [{lo}, {hi}]"));
    }
    let nodes = match variant {
        ChebyshevVariant::Plain => chebyshev_roots(lo, hi, n),
        ChebyshevVariant::TModified(t) => {
            let mut nodes = chebyshev_roots(lo, hi, n - 1);
            if nodes.iter().any(|&r| (r - t).abs() <= MIN_GAP * (hi - lo)) {
                return domain(format!("t = {t} coincides with a Chebyshev root"));
            }
            nodes.push(t);
            nodes.sort_by(f64::total_cmp);
            nodes
        }
    };
    barycentric_weights(&nodes, &[])
}

/// ‖A − UV‖₂ / ‖A‖₂.
pub fn relative_error<T: Scalar>(a: &DenseMatrix<T>, f: &LowRankFactors<T>) -> Result<f64> {
    let norm = singular_values(a)?[0];
    let diff = a.sub(&f.product())?;
    Ok(singular_values(&diff)?[0] / norm)
}

/// Relative spectral error for each rank.
pub fn error_curve<T: Scalar>(
    a: &DenseMatrix<T>,
    factors_by_rank: &BTreeMap<usize, LowRankFactors<T>>,
) -> Result<Vec<(usize, f64)>> {
    let norm = singular_values(a)?[0];
    let mut out = Vec::with_capacity(factors_by_rank.len());
    for (&n, f) in factors_by_rank {
        if n > a.rows().min(a.cols()) {
            return domain(format!("rank {n} exceeds the matrix dimensions"));
        }
        let diff = a.sub(&f.product())?;
        out.push((n, singular_values(&diff)?[0] / norm));
    }
    Ok(out)
}
