//! A-priori singular-value bounds and numerical Cauchy–Zolotarev norms.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::moebius::{cross_ratio_gamma, ExtendedReal};
use crate::quad::{composite, Rule};
use crate::specfun::{beta_weights, log_gamma};
use crate::zolotarev::{bt_bound, bt_bound_elliptic, log_product, Interval, IntervalPair, RationalNodesPoles};

/// Bound values by rank with their normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCurve {
    pub entries: Vec<(usize, f64)>,
    pub normalization: Normalization,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Normalization {
    Absolute,
    /// Divided by σ₁ of the matrix.
    Relative(f64),
}

impl BoundCurve {
    pub fn relative(&self, sigma1: f64) -> BoundCurve {
        BoundCurve {
            entries: self.entries.iter().map(|&(n, v)| (n, v / sigma1)).collect(),
            normalization: Normalization::Relative(sigma1),
        }
    }
}

/// Ranks at which a Z_{n−1}-based formula falls back to Z₀ = 4.
pub fn is_formula_edge(n: usize) -> bool {
    n == 1
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 {
        return domain("rank must be at least 1");
    }
    Ok(())
}

/// (N/2)·ln((d+c)/(2c))·Z_{n−1}([c,d], [−∞,−c]) with the BT estimate of Z.
pub fn log_cauchy_bound(big_n: usize, c: f64, d: f64, n: usize) -> Result<f64> {
    check_rank(n)?;
    if !(0.0 < c && c < d) {
        return domain(format!("need 0 < c < d, got c = {c}, d = {d}"));
    }
    let gamma = cross_ratio_gamma(
        ExtendedReal::NegInf,
        ExtendedReal::Finite(-c),
        ExtendedReal::Finite(c),
        ExtendedReal::Finite(d),
    )?;
    Ok(0.5 * big_n as f64 * ((d + c) / (2.0 * c)).ln() * bt_bound(n - 1, gamma)?)
}

/// (N/π)·ln(ω_N/ω_1)·Z_{n−1}([ω_1, ω_N], [−∞, 0]) with the BT estimate of Z.
pub fn hankel_bound(big_n: usize, omega1: f64, omega_n: f64, n: usize) -> Result<f64> {
    check_rank(n)?;
    if !(0.0 < omega1 && omega1 < omega_n) {
        return domain(format!("need 0 < omega1 < omegaN, got {omega1}, {omega_n}"));
    }
    let gamma = omega_n / omega1;
    Ok(big_n as f64 / PI * gamma.ln() * bt_bound(n - 1, gamma)?)
}

/// Terms summed before the integral tail takes over.
const BETA_SUM_CAP: usize = 20_000;

/// ∫_K^∞ t^{−β}/(t + c) dt, after t = K/s, s = v^{1/β}.
fn beta_tail_integral(big_k: f64, c: f64, beta: f64) -> Result<f64> {
    let scale = big_k.powf(1.0 - beta) / beta;
    let v = composite(
        &mut |v: f64| scale / (big_k + c * v.powf(1.0 / beta)),
        &[0.0, 1.0],
        1e-12,
        12,
    )
    .map_err(|e| Error::Convergence(format!("beta tail bound: {e}")))?;
    Ok(v)
}

/// Σ_k w(k, β)/(s + k + α) truncated once the increment falls below
/// `tol`·partial sum (or after a fixed number of terms), plus the tail
/// majorant ∫ k^{−β}/(Γ(1−β)(s + k + α)) dk.
pub fn beta_inner_sum(s: f64, alpha: f64, beta: f64, tol: f64) -> Result<f64> {
    let w = beta_weights(beta, BETA_SUM_CAP)?;
    let c = s + alpha;
    let mut sum = 0.0;
    let mut last = 0;
    for (k, wk) in w.iter().enumerate() {
        let inc = wk / (c + k as f64);
        sum += inc;
        last = k;
        if inc.abs() < tol * sum.abs() {
            break;
        }
    }
    let g = log_gamma(1.0 - beta)?.exp();
    let tail = beta_tail_integral(last as f64, c, beta)? / g;
    Ok(sum + tail)
}

/// Z_n([−∞,−α],[0,N])·(Σ_y (Σ_k w(k,β)/(y+k+α))²)^{1/2}·(Σ_x (w(x,β)/w(N,β))²)^{1/2}
/// with Z_n from the BT estimate, γ = (N+α)/α.
pub fn beta_bound(big_n: usize, alpha: f64, beta: f64, n: usize, tol: f64) -> Result<f64> {
    if !(alpha > 0.0) || !(beta > 0.0 && beta < 1.0) {
        return domain(format!(
            "beta_bound needs alpha > 0 and 0 < beta < 1, got {alpha}, {beta}"
        ));
    }
    let gamma = (big_n as f64 + alpha) / alpha;
    let z = bt_bound(n, gamma)?;
    let mut inner = 0.0;
    for y in 0..=big_n {
        let v = beta_inner_sum(y as f64, alpha, beta, tol)?;
        inner += v * v;
    }
    let w = beta_weights(beta, big_n)?;
    let wn = w[big_n];
    let outer: f64 = w.iter().map(|x| (x / wn) * (x / wn)).sum();
    Ok(z * inner.sqrt() * outer.sqrt())
}

/// σ_{n+1} bound Z_n(E, F)·σ₁ for Cauchy-type matrices, with Z_n from
/// [`bt_bound_elliptic`].
pub fn cauchy_sigma_bound(n: usize, pair: &IntervalPair, sigma1: f64) -> Result<f64> {
    Ok(bt_bound_elliptic(n, pair.gamma())? * sigma1)
}

/// Measure on E for the outer integral.
#[derive(Debug, Clone, PartialEq)]
pub enum EMeasure {
    /// Unit mass at each point.
    Counting(Vec<f64>),
    /// Uniform density of total `mass` on [lo, hi].
    Uniform { lo: f64, hi: f64, mass: f64 },
}

/// Norm pairing of the Cauchy–Zolotarev bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CzMode {
    /// L²_μ(E) → L¹(F).
    P2ToQ1,
}

const CZ_RTOL: f64 = 1e-9;
const CZ_MAX_LEVEL: u32 = 14;

/// (∫_E (∫_F |φ(y)/(φ(z)(y−z))| dz)² dμ(y))^{1/2}.
pub fn cz_quadrature_bound(rp: &RationalNodesPoles, e: &EMeasure, f: &Interval, mode: CzMode) -> Result<f64> {
    let CzMode::P2ToQ1 = mode;
    let poles = rp.finite_poles();
    let zeros = &rp.zeros;
    let unbounded = !f.is_bounded();
    if unbounded && zeros.len() <= poles.len() {
        return Err(Error::Divergence(format!(
            "1/φ does not decay on unbounded F ({} zeros, {} poles)",
            zeros.len(),
            poles.len()
        )));
    }
    let (flo, fhi) = (f.lo.to_f64(), f.hi.to_f64());
    if zeros.iter().any(|&q| q >= flo && q <= fhi) {
        return domain("φ has a zero in F");
    }
    // z(s) and dz/ds on [0, 1)
    let map: Box<dyn Fn(f64) -> (f64, f64) + Sync> = match (f.lo, f.hi) {
        (ExtendedReal::NegInf, ExtendedReal::Finite(b)) => {
            Box::new(move |s: f64| (b - s / (1.0 - s), 1.0 / ((1.0 - s) * (1.0 - s))))
        }
        (ExtendedReal::Finite(a), ExtendedReal::PosInf) => {
            Box::new(move |s: f64| (a + s / (1.0 - s), 1.0 / ((1.0 - s) * (1.0 - s))))
        }
        (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => Box::new(move |s: f64| (a + (b - a) * s, b - a)),
        _ => return domain("F must have at least one finite endpoint"),
    };
    let inv = |z: f64| -> f64 {
        match (f.lo, f.hi) {
            (ExtendedReal::NegInf, ExtendedReal::Finite(b)) => (b - z) / (1.0 + b - z),
            (ExtendedReal::Finite(a), ExtendedReal::PosInf) => (z - a) / (1.0 + z - a),
            _ => (z - flo) / (fhi - flo),
        }
    };
    let mut breaks = vec![0.0];
    let mut kinks: Vec<f64> = poles.iter().filter(|&&p| p > flo && p < fhi).map(|&p| inv(p)).collect();
    kinks.sort_by(f64::total_cmp);
    breaks.extend(kinks);
    breaks.push(1.0);
    breaks.dedup();

    let inner = |y: f64| -> Result<f64> {
        let (_, ly) = log_product(zeros, &poles, y);
        if ly == f64::INFINITY {
            return domain(format!("φ has a pole at {y} in E"));
        }
        if ly == f64::NEG_INFINITY {
            return Ok(0.0);
        }
        let mut g = |s: f64| {
            let (z, jac) = map(s);
            let (_, lz) = log_product(zeros, &poles, z);
            (ly - lz).exp() / (y - z).abs() * jac
        };
        composite(&mut g, &breaks, CZ_RTOL, CZ_MAX_LEVEL).map_err(|e| match e {
            Error::Convergence(m) | Error::Divergence(m) => {
                Error::Divergence(format!("inner integral at y = {y}: {m}"))
            }
            other => other,
        })
    };

    match e {
        EMeasure::Counting(points) => {
            let mut acc = 0.0;
            for &y in points {
                let v = inner(y)?;
                acc += v * v;
            }
            Ok(acc.sqrt())
        }
        EMeasure::Uniform { lo, hi, mass } => {
            let mut ebreaks = vec![*lo];
            ebreaks.extend(zeros.iter().cloned().filter(|q| q > lo && q < hi));
            ebreaks.push(*hi);
            ebreaks.dedup();
            let density = mass / (hi - lo);
            let rule = Rule::new(24);
            let mut acc = 0.0;
            let mut err = None;
            for w in ebreaks.windows(2) {
                acc += rule.integrate(
                    &mut |y| match inner(y) {
                        Ok(v) => v * v,
                        Err(e) => {
                            err.get_or_insert(e);
                            0.0
                        }
                    },
                    w[0],
                    w[1],
                );
            }
            if let Some(e) = err {
                return Err(e);
            }
            Ok((acc * density).sqrt())
        }
    }
}

/// (Σ_y ln²((y−b)/(t−b)))^{1/2}: the bound for φ(ξ) = ξ − t with the inner
/// integral done in closed form.
pub fn z1_inner_closed_form(points: &[f64], b: f64, t: f64) -> f64 {
    points
        .iter()
        .map(|&y| ((y - b) / (t - b)).ln().powi(2))
        .sum::<f64>()
        .sqrt()
}

/// ½·ln((d−b)/(c−b))·mass^{1/2}, the single-zero constant at the optimal t.
pub fn z1_constant(c: f64, d: f64, b: f64, mass: f64) -> f64 {
    0.5 * ((d - b) / (c - b)).ln() * mass.sqrt()
}
