//! Zolotarev rational functions on a pair of real intervals.
//!
//! Zeros are placed in the bounded interval `E` (where the kernel is sampled)
//! and poles in `F` (the singular set), whichever of the two lies lower on
//! the real line.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::moebius::{build_four_point_map, cross_ratio_gamma, tau_from_gamma, ExtendedReal};
use crate::specfun::{elliptic_k_comp, jacobi_dn_comp};

/// Poles beyond this magnitude are treated as infinite.
pub const POLE_INFINITY: f64 = 1e12;

/// Closed interval with possibly infinite endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: ExtendedReal,
    pub hi: ExtendedReal,
}

impl Interval {
    pub fn new(lo: impl Into<ExtendedReal>, hi: impl Into<ExtendedReal>) -> Result<Self> {
        let (lo, hi) = (lo.into(), hi.into());
        if !lo.lt(hi) {
            return domain(format!("empty interval [{lo}, {hi}]"));
        }
        if let (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) = (lo, hi) {
            if !(a.is_finite() && b.is_finite()) {
                return domain("interval endpoints must not be NaN");
            }
        }
        Ok(Interval { lo, hi })
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }
}

/// Disjoint pair (E, F): zeros live in the bounded interval E, poles in F.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalPair {
    pub e: Interval,
    pub f: Interval,
}

impl IntervalPair {
    pub fn new(e: Interval, f: Interval) -> Result<Self> {
        if !e.is_bounded() {
            return domain("E must be bounded");
        }
        if !(f.hi.lt(e.lo) || e.hi.lt(f.lo)) {
            return domain(format!(
                "intervals overlap: E = [{}, {}], F = [{}, {}]",
                e.lo, e.hi, f.lo, f.hi
            ));
        }
        if !f.lo.is_finite() && !f.hi.is_finite() {
            return domain("F cannot be the whole line");
        }
        Ok(IntervalPair { e, f })
    }

    /// Convenience constructor from floats; ±∞ allowed for F.
    pub fn from_bounds(e: (f64, f64), f: (f64, f64)) -> Result<Self> {
        IntervalPair::new(Interval::new(e.0, e.1)?, Interval::new(f.0, f.1)?)
    }

    /// True when E lies below F.
    pub fn e_below(&self) -> bool {
        self.e.hi.lt(self.f.lo)
    }

    /// (a, b, c, d) in increasing order.
    pub fn ordered(&self) -> [ExtendedReal; 4] {
        if self.e_below() {
            [self.e.lo, self.e.hi, self.f.lo, self.f.hi]
        } else {
            [self.f.lo, self.f.hi, self.e.lo, self.e.hi]
        }
    }

    pub fn gamma(&self) -> f64 {
        let [a, b, c, d] = self.ordered();
        cross_ratio_gamma(a, b, c, d).expect("validated pair")
    }

    fn e_bounds(&self) -> (f64, f64) {
        (self.e.lo.to_f64(), self.e.hi.to_f64())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZolotarevParams {
    pub gamma: f64,
    pub tau: f64,
    pub kc: f64,
}

pub fn params_from_gamma(gamma: f64) -> Result<ZolotarevParams> {
    let tau = tau_from_gamma(gamma)?;
    Ok(ZolotarevParams {
        gamma,
        tau,
        kc: 1.0 / tau,
    })
}

/// Zeros and poles of a real rational function. Zeros are nondecreasing; a
/// repeated zero marks a double root.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RationalNodesPoles {
    pub zeros: Vec<f64>,
    pub poles: Vec<ExtendedReal>,
}

impl RationalNodesPoles {
    pub fn new(mut zeros: Vec<f64>, mut poles: Vec<ExtendedReal>) -> Self {
        zeros.sort_by(f64::total_cmp);
        poles.sort_by(|a, b| a.to_f64().total_cmp(&b.to_f64()));
        RationalNodesPoles { zeros, poles }
    }

    /// Poles that enter products, i.e. those with |p| ≤ 1e12.
    pub fn finite_poles(&self) -> Vec<f64> {
        finite_poles(&self.poles)
    }

    /// Product of two rational functions.
    pub fn compose(&self, other: &RationalNodesPoles) -> RationalNodesPoles {
        let mut zeros = self.zeros.clone();
        zeros.extend_from_slice(&other.zeros);
        let mut poles = self.poles.clone();
        poles.extend_from_slice(&other.poles);
        RationalNodesPoles::new(zeros, poles)
    }
}

pub(crate) fn finite_poles(poles: &[ExtendedReal]) -> Vec<f64> {
    poles
        .iter()
        .filter_map(|p| p.finite())
        .filter(|p| p.abs() <= POLE_INFINITY)
        .collect()
}

/// Zeros q_j = T(∓dn_j) and poles p_j = T(±dn_j) of the Zolotarev function
/// of degree n, with dn_j = dn((2j−1)K/(2n), k) and T the four-point map.
pub fn nodes_poles(pair: &IntervalPair, n: usize) -> Result<RationalNodesPoles> {
    if n == 0 {
        return domain("Zolotarev degree must be at least 1");
    }
    let [a, b, c, d] = pair.ordered();
    let params = params_from_gamma(pair.gamma())?;
    let t = build_four_point_map(a, b, c, d, params.tau)?;
    let big_k = elliptic_k_comp(params.kc)?;
    // zeros in [a, b] come from −dn_j
    let zero_sign = if pair.e_below() { -1.0 } else { 1.0 };
    let mut zeros = Vec::with_capacity(n);
    let mut poles = Vec::with_capacity(n);
    for j in 1..=n {
        let u = (2 * j - 1) as f64 * big_k / (2 * n) as f64;
        let dn = jacobi_dn_comp(u, params.kc)?;
        let q = t.apply(ExtendedReal::Finite(zero_sign * dn));
        let p = t.apply(ExtendedReal::Finite(-zero_sign * dn));
        let q = q
            .finite()
            .ok_or_else(|| Error::Consistency("Zolotarev zero mapped to infinity".into()))?;
        zeros.push(q);
        poles.push(match p {
            ExtendedReal::Finite(v) => ExtendedReal::Finite(v),
            // the projective point sits at the infinite end of F
            _ if pair.f.lo == ExtendedReal::NegInf => ExtendedReal::NegInf,
            _ => ExtendedReal::PosInf,
        });
    }
    Ok(RationalNodesPoles::new(zeros, poles))
}

/// 4·exp(−nπ²/ln(16γ)). n = 0 gives 4.
pub fn bt_bound(n: usize, gamma: f64) -> Result<f64> {
    if !(gamma > 1.0) || !gamma.is_finite() {
        return domain(format!("cross-ratio must exceed 1, got {gamma}"));
    }
    Ok(4.0 * (-(n as f64) * PI * PI / (16.0 * gamma).ln()).exp())
}

/// 4·ρ^{−n} with ρ = exp(2π·K(k′)/K(k)), k′ = 1/τ: the elliptic form of the
/// same estimate. Its ln(16γ) simplification replaces 2K(k)/K(k′) by
/// ln(16γ)/π.
pub fn bt_bound_elliptic(n: usize, gamma: f64) -> Result<f64> {
    let kc = 1.0 / tau_from_gamma(gamma)?;
    let k = (1.0 - kc * kc).sqrt();
    let ratio = elliptic_k_comp(k)? / elliptic_k_comp(kc)?;
    Ok(4.0 * (-2.0 * n as f64 * PI * ratio).exp())
}

/// Sign and log-magnitude of φ(ξ) = Π(ξ−q_i) / Π(ξ−p_k); poles beyond 1e12
/// contribute 1. Returns logmag −∞ at a zero and +∞ at a pole.
pub fn phi_log_eval(rp: &RationalNodesPoles, xi: f64) -> (f64, f64) {
    log_product(&rp.zeros, &rp.finite_poles(), xi)
}

pub(crate) fn log_product(zeros: &[f64], poles: &[f64], xi: f64) -> (f64, f64) {
    let mut sign = 1.0;
    let mut log = 0.0;
    let mut at_zero = false;
    for &q in zeros {
        let d = xi - q;
        if d == 0.0 {
            at_zero = true;
            continue;
        }
        if d < 0.0 {
            sign = -sign;
        }
        log += d.abs().ln();
    }
    for &p in poles {
        let d = xi - p;
        if d == 0.0 {
            return (sign, f64::INFINITY);
        }
        if d < 0.0 {
            sign = -sign;
        }
        log -= d.abs().ln();
    }
    if at_zero {
        return (sign, f64::NEG_INFINITY);
    }
    (sign, log)
}

/// log|φ| at infinity: 0, +∞ or −∞ by degree count.
fn log_at_infinity(rp: &RationalNodesPoles) -> f64 {
    let m = rp.finite_poles().len();
    match rp.zeros.len().cmp(&m) {
        std::cmp::Ordering::Equal => 0.0,
        std::cmp::Ordering::Greater => f64::INFINITY,
        std::cmp::Ordering::Less => f64::NEG_INFINITY,
    }
}

/// Golden-section maximization of f on [lo, hi].
fn golden_max(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - r * (hi - lo);
    let mut x2 = lo + r * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..80 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = f(x1);
        }
        if hi - lo <= 1e-15 * (lo.abs() + hi.abs()) {
            break;
        }
    }
    f1.max(f2)
}

/// Maximum of f over [0, 1] from a Chebyshev–Lobatto grid, refined at every
/// grid-local maximum.
fn grid_max(f: &dyn Fn(f64) -> f64, gridsize: usize, include_right: bool) -> f64 {
    let m = gridsize - 1;
    let pts: Vec<f64> = (0..=m)
        .map(|i| 0.5 - 0.5 * (PI * i as f64 / m as f64).cos())
        .filter(|&s| include_right || s < 1.0)
        .collect();
    let vals: Vec<f64> = pts.iter().map(|&s| f(s)).collect();
    let mut best = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    for i in 0..vals.len() {
        let left = if i == 0 { f64::NEG_INFINITY } else { vals[i - 1] };
        let right = vals.get(i + 1).copied().unwrap_or(f64::NEG_INFINITY);
        if vals[i] >= left && vals[i] >= right && vals[i].is_finite() {
            let lo = if i == 0 { pts[0] } else { pts[i - 1] };
            let hi = if i + 1 < pts.len() { pts[i + 1] } else { pts[i] };
            if hi > lo {
                best = best.max(golden_max(f, lo, hi));
            }
        }
    }
    best
}

/// sup_E|φ| · sup_F|1/φ| from clustered grids with local refinement.
/// Half-infinite F is sampled through z = b ∓ s/(1−s).
pub fn sup_ratio_estimate(rp: &RationalNodesPoles, pair: &IntervalPair, gridsize: usize) -> Result<f64> {
    if gridsize < 1000 {
        return domain(format!("gridsize must be at least 1000, got {gridsize}"));
    }
    let poles = rp.finite_poles();
    let logphi = |x: f64| log_product(&rp.zeros, &poles, x).1;
    let (c, d) = pair.e_bounds();
    let on_e = |s: f64| logphi(c + (d - c) * s);
    let max_e = grid_max(&on_e, gridsize, true);

    let neg = |v: f64| -v;
    let max_f = match (pair.f.lo, pair.f.hi) {
        (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => {
            grid_max(&|s: f64| neg(logphi(a + (b - a) * s)), gridsize, true)
        }
        (ExtendedReal::NegInf, ExtendedReal::Finite(b)) => {
            let g = |s: f64| neg(logphi(b - s / (1.0 - s)));
            grid_max(&g, gridsize, false).max(-log_at_infinity(rp))
        }
        (ExtendedReal::Finite(a), ExtendedReal::PosInf) => {
            let g = |s: f64| neg(logphi(a + s / (1.0 - s)));
            grid_max(&g, gridsize, false).max(-log_at_infinity(rp))
        }
        _ => unreachable!("validated pair"),
    };
    Ok((max_e + max_f).exp())
}

/// The extra node t = b + √((d−b)(c−b)) for E = [c, d], F = [−∞, b].
pub fn z1_node(pair: &IntervalPair) -> Result<f64> {
    if pair.f.lo != ExtendedReal::NegInf || !pair.f.hi.is_finite() {
        return domain("the extra node requires F = [-inf, b]");
    }
    let b = pair.f.hi.to_f64();
    let (c, d) = pair.e_bounds();
    Ok(b + ((d - b) * (c - b)).sqrt())
}

/// Zeros {t} ∪ zeros of the degree-(n−1) Zolotarev function and its n−1
/// poles. When n−1 is odd the middle Zolotarev zero coincides with t and
/// the result carries t as a double zero.
pub fn extended_nodes_z1(pair: &IntervalPair, n: usize) -> Result<RationalNodesPoles> {
    if n == 0 {
        return domain("rank must be at least 1");
    }
    let t = z1_node(pair)?;
    if n == 1 {
        return Ok(RationalNodesPoles::new(vec![t], vec![]));
    }
    let mut rp = nodes_poles(pair, n - 1)?;
    let (c, d) = pair.e_bounds();
    for q in rp.zeros.iter_mut() {
        if (*q - t).abs() <= 1e-10 * (d - c) {
            *q = t;
        }
    }
    rp.zeros.push(t);
    Ok(RationalNodesPoles::new(rp.zeros, rp.poles))
}
