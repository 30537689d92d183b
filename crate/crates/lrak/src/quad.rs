//! Gauss–Legendre rules and composite integration with panel doubling.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Nodes and weights of the m-point Gauss–Legendre rule on [−1, 1], by
/// Newton's method on P_m.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; m];
    let mut w = vec![0.0; m];
    let mf = m as f64;
    for i in 0..m.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (mf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, 0.0);
            for j in 0..m {
                let p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
            }
            dp = mf * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[m - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[m - 1 - i] = wi;
    }
    (x, w)
}

/// Fixed-order rule reused across panels.
#[derive(Debug, Clone)]
pub struct Rule {
    x: Vec<f64>,
    w: Vec<f64>,
}

impl Rule {
    pub fn new(m: usize) -> Self {
        let (x, w) = gauss_legendre(m);
        Rule { x, w }
    }

    pub fn integrate(&self, f: &mut dyn FnMut(f64) -> f64, lo: f64, hi: f64) -> f64 {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let mut s = 0.0;
        for (x, w) in self.x.iter().zip(&self.w) {
            s += w * f(mid + half * x);
        }
        s * half
    }
}

/// Integral over the union of the panels [breaks[i], breaks[i+1]]: every
/// panel is split into 2^L equal pieces and L grows until the relative change
/// drops below `rtol`.
pub fn composite(f: &mut dyn FnMut(f64) -> f64, breaks: &[f64], rtol: f64, max_level: u32) -> Result<f64> {
    let rule = Rule::new(16);
    let eval = |f: &mut dyn FnMut(f64) -> f64, level: u32| {
        let pieces = 1usize << level;
        let mut total = 0.0;
        for win in breaks.windows(2) {
            let h = (win[1] - win[0]) / pieces as f64;
            for k in 0..pieces {
                let lo = win[0] + k as f64 * h;
                total += rule.integrate(f, lo, lo + h);
            }
        }
        total
    };
    let mut prev = eval(f, 0);
    for level in 1..=max_level {
        let cur = eval(f, level);
        if !cur.is_finite() {
            return Err(Error::Divergence("non-finite integrand".into()));
        }
        if (cur - prev).abs() <= rtol * cur.abs() {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Convergence(format!(
        "composite quadrature did not reach {rtol:e} after {max_level} doublings"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        for m in [1, 2, 5, 16, 40] {
            let (_, w) = gauss_legendre(m);
            let s: f64 = w.iter().sum();
            assert!((s - 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn exact_for_polynomials() {
        let rule = Rule::new(8);
        // degree 15 exact
        let v = rule.integrate(&mut |x| x.powi(14), -1.0, 1.0);
        assert!((v - 2.0 / 15.0).abs() < 1e-15);
    }

    #[test]
    fn composite_log() {
        let v = composite(&mut |x: f64| 1.0 / x, &[1.0, 10.0, 100.0], 1e-12, 12).unwrap();
        assert!((v - 100f64.ln()).abs() < 1e-12);
    }
}
