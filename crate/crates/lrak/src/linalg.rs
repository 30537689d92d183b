//! Dense matrices and a one-sided Jacobi SVD for real and complex entries.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{domain, Error, Result};
use crate::Complex64;

/// Field of matrix entries: `f64` or `Complex64`.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + 'static
{
    const IS_COMPLEX: bool;
    fn zero() -> Self;
    fn from_real(x: f64) -> Self;
    fn conj(self) -> Self;
    fn abs(self) -> f64;
    fn norm_sqr(self) -> f64;
    fn scale(self, s: f64) -> Self;
    fn re(self) -> f64;
    fn im(self) -> f64;
    fn is_finite(self) -> bool;
}

impl Scalar for f64 {
    const IS_COMPLEX: bool = false;
    fn zero() -> Self {
        0.0
    }
    fn from_real(x: f64) -> Self {
        x
    }
    fn conj(self) -> Self {
        self
    }
    fn abs(self) -> f64 {
        f64::abs(self)
    }
    fn norm_sqr(self) -> f64 {
        self * self
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn re(self) -> f64 {
        self
    }
    fn im(self) -> f64 {
        0.0
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

impl Scalar for Complex64 {
    const IS_COMPLEX: bool = true;
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn abs(self) -> f64 {
        self.norm()
    }
    fn norm_sqr(self) -> f64 {
        Complex64::norm_sqr(&self)
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn re(self) -> f64 {
        self.re
    }
    fn im(self) -> f64 {
        self.im
    }
    fn is_finite(self) -> bool {
        Complex64::is_finite(self)
    }
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::from_real(1.0);
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return domain(format!("{} entries given for a {rows}x{cols} matrix", data.len()));
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn try_from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Result<T>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j)?);
            }
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, other: &DenseMatrix<T>) -> Result<Self> {
        if self.cols != other.rows {
            return domain(format!(
                "shape mismatch {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DenseMatrix<T>) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return domain("shape mismatch in subtraction");
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a - b).collect();
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)]).collect())
            .collect()
    }
}

impl DenseMatrix<f64> {
    pub fn to_complex(&self) -> DenseMatrix<Complex64> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Singular values in descending order, with optional factors such that
/// M = U·diag(σ)·Vᴴ, U: rows×k, V: cols×k, k = min(rows, cols).
#[derive(Debug, Clone)]
pub struct SvdResult<T> {
    pub singular_values: Vec<f64>,
    pub u: Option<DenseMatrix<T>>,
    pub v: Option<DenseMatrix<T>>,
}

const JACOBI_TOL: f64 = 1e-15;
/// Relative column norm (against ‖A‖_F) below which a column is left alone.
const NOISE_FLOOR: f64 = 1e-19;
const MAX_SWEEPS: usize = 80;

fn dot<T: Scalar>(x: &[T], y: &[T]) -> T {
    let mut s = T::zero();
    for (&a, &b) in x.iter().zip(y) {
        s += a.conj() * b;
    }
    s
}

fn norm_sqr<T: Scalar>(x: &[T]) -> f64 {
    x.iter().map(|v| v.norm_sqr()).sum()
}

/// Unit phase g/|g| as a scalar of the same field.
fn phase<T: Scalar>(g: T, mag: f64) -> T {
    if T::IS_COMPLEX {
        g.scale(1.0 / mag)
    } else if g.re() < 0.0 {
        T::from_real(-1.0)
    } else {
        T::from_real(1.0)
    }
}

/// Hestenes one-sided Jacobi on the columns of a (tall) matrix.
fn jacobi<T: Scalar>(cols: &mut [Vec<T>], mut v: Option<&mut Vec<Vec<T>>>) -> Result<()> {
    let n = cols.len();
    // columns below this squared norm are treated as exact zeros
    let floor = NOISE_FLOOR * NOISE_FLOOR * cols.iter().map(|c| norm_sqr(c)).sum::<f64>();
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..n {
            for j in (i + 1)..n {
                let alpha = norm_sqr(&cols[i]);
                let beta = norm_sqr(&cols[j]);
                if alpha <= floor || beta <= floor {
                    continue;
                }
                let g = dot(&cols[i], &cols[j]);
                let gm = g.abs();
                if gm <= JACOBI_TOL * alpha.sqrt() * beta.sqrt() {
                    continue;
                }
                rotated = true;
                // make the inner product real and positive: a_j ← a_j·conj(e)
                let e = phase(g, gm).conj();
                let zeta = (beta - alpha) / (2.0 * gm);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (lo, hi) = cols.split_at_mut(j);
                rotate(&mut lo[i], &mut hi[0], e, c, s);
                if let Some(v) = v.as_deref_mut() {
                    let (lo, hi) = v.split_at_mut(j);
                    rotate(&mut lo[i], &mut hi[0], e, c, s);
                }
            }
        }
        if !rotated {
            return Ok(());
        }
    }
    Err(Error::Convergence(format!(
        "Jacobi SVD did not converge in {MAX_SWEEPS} sweeps"
    )))
}

fn rotate<T: Scalar>(x: &mut [T], y: &mut [T], e: T, c: f64, s: f64) {
    for (a, b) in x.iter_mut().zip(y.iter_mut()) {
        let bj = *b * e;
        let ai = *a;
        *a = ai.scale(c) - bj.scale(s);
        *b = ai.scale(s) + bj.scale(c);
    }
}

fn check_input<T: Scalar>(m: &DenseMatrix<T>) -> Result<()> {
    if m.rows == 0 || m.cols == 0 {
        return domain("SVD of an empty matrix");
    }
    if !m.is_finite() {
        return domain("SVD input has non-finite entries");
    }
    Ok(())
}

/// Singular values only, descending.
pub fn singular_values<T: Scalar>(m: &DenseMatrix<T>) -> Result<Vec<f64>> {
    check_input(m)?;
    let mut cols = if m.rows >= m.cols {
        m.columns()
    } else {
        m.conj_transpose().columns()
    };
    jacobi(&mut cols, None)?;
    let mut s: Vec<f64> = cols.iter().map(|c| norm_sqr(c).sqrt()).collect();
    s.sort_by(|a, b| b.total_cmp(a));
    Ok(s)
}

/// Full thin SVD.
pub fn svd<T: Scalar>(m: &DenseMatrix<T>) -> Result<SvdResult<T>> {
    check_input(m)?;
    if m.rows < m.cols {
        let r = svd(&m.conj_transpose())?;
        return Ok(SvdResult {
            singular_values: r.singular_values,
            u: r.v,
            v: r.u,
        });
    }
    let (rows, k) = (m.rows, m.cols);
    let mut cols = m.columns();
    let mut v: Vec<Vec<T>> = (0..k)
        .map(|j| {
            let mut e = vec![T::zero(); k];
            e[j] = T::from_real(1.0);
            e
        })
        .collect();
    jacobi(&mut cols, Some(&mut v))?;
    let sig: Vec<f64> = cols.iter().map(|c| norm_sqr(c).sqrt()).collect();
    let noise = NOISE_FLOOR * sig.iter().map(|s| s * s).sum::<f64>().sqrt();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| sig[b].total_cmp(&sig[a]));

    let mut ucols: Vec<Vec<T>> = Vec::with_capacity(k);
    let mut zero_slots = Vec::new();
    for (slot, &idx) in order.iter().enumerate() {
        let s = sig[idx];
        if s > noise {
            ucols.push(cols[idx].iter().map(|x| x.scale(1.0 / s)).collect());
        } else {
            ucols.push(vec![T::zero(); rows]);
            zero_slots.push(slot);
        }
    }
    // complete U on the negligible columns by Gram–Schmidt against unit vectors
    let mut basis = 0;
    for slot in zero_slots {
        while basis < rows {
            let mut w = vec![T::zero(); rows];
            w[basis] = T::from_real(1.0);
            basis += 1;
            for _ in 0..2 {
                for (other, u) in ucols.iter().enumerate() {
                    if other == slot || norm_sqr(u) == 0.0 {
                        continue;
                    }
                    let p = dot(u, &w);
                    for (wi, &ui) in w.iter_mut().zip(u) {
                        *wi -= ui * p;
                    }
                }
            }
            let nw = norm_sqr(&w).sqrt();
            if nw > 1e-8 {
                ucols[slot] = w.iter().map(|x| x.scale(1.0 / nw)).collect();
                break;
            }
        }
    }
    let u = DenseMatrix::from_fn(rows, k, |i, j| ucols[j][i]);
    let vm = DenseMatrix::from_fn(k, k, |i, j| v[order[j]][i]);
    Ok(SvdResult {
        singular_values: order.iter().map(|&i| sig[i]).collect(),
        u: Some(u),
        v: Some(vm),
    })
}

/// Largest singular value.
pub fn spectral_norm<T: Scalar>(m: &DenseMatrix<T>) -> Result<f64> {
    Ok(singular_values(m)?[0])
}

/// σ_{n+1} / σ_1.
pub fn relative_tail<T: Scalar>(m: &DenseMatrix<T>, n: usize) -> Result<f64> {
    if n >= m.rows.min(m.cols) {
        return domain(format!(
            "relative_tail({n}) needs n < min dimension {}",
            m.rows.min(m.cols)
        ));
    }
    let s = singular_values(m)?;
    Ok(s[n] / s[0])
}

/// Largest deviation of UᴴU and VᴴV from the identity.
pub fn orthogonality_defect<T: Scalar>(r: &SvdResult<T>) -> f64 {
    let mut worst = 0.0_f64;
    for f in [&r.u, &r.v].into_iter().flatten() {
        let g = f.conj_transpose().matmul(f).expect("conforming");
        let k = g.rows();
        for i in 0..k {
            for j in 0..k {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g[(i, j)] - T::from_real(target)).abs());
            }
        }
    }
    worst
}

/// Frobenius norm of M − U·diag(σ)·Vᴴ.
pub fn reconstruction_residual<T: Scalar>(m: &DenseMatrix<T>, r: &SvdResult<T>) -> Result<f64> {
    let (u, v) = match (&r.u, &r.v) {
        (Some(u), Some(v)) => (u, v),
        _ => return domain("factors were not computed"),
    };
    let us = DenseMatrix::from_fn(u.rows(), u.cols(), |i, j| u[(i, j)].scale(r.singular_values[j]));
    let rec = us.matmul(&v.conj_transpose())?;
    Ok(m.sub(&rec)?.frobenius_norm())
}

/// Cubic tensor of side n with T[i][j][k] at data[(i·n + j)·n + k].
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3<T> {
    pub n: usize,
    pub data: Vec<T>,
}

impl<T: Scalar> Tensor3<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { n, data }
    }
}

/// Unfolding along the last mode: row i·n + j, column k holds T[i][j][k].
pub fn unfold_tensor<T: Scalar>(t: &Tensor3<T>) -> DenseMatrix<T> {
    DenseMatrix {
        rows: t.n * t.n,
        cols: t.n,
        data: t.data.clone(),
    }
}
