//! Helpers shared by integration tests.
#![allow(dead_code)]

use lrak::lowrank::{interpolate_eval, InterpolationScheme, Slot};

/// r(y) = scale · Π(y − roots) / Π(y − poles) and its derivative.
pub struct Rational {
    pub roots: Vec<f64>,
    pub poles: Vec<f64>,
    pub scale: f64,
}

impl Rational {
    pub fn value(&self, y: f64) -> f64 {
        let p: f64 = self.roots.iter().map(|r| y - r).product();
        let q: f64 = self.poles.iter().map(|r| y - r).product();
        self.scale * p / q
    }

    pub fn derivative(&self, y: f64) -> f64 {
        let mut dp = 0.0;
        for i in 0..self.roots.len() {
            let mut t = 1.0;
            for (k, r) in self.roots.iter().enumerate() {
                if k != i {
                    t *= y - r;
                }
            }
            dp += t;
        }
        let p: f64 = self.roots.iter().map(|r| y - r).product();
        let q: f64 = self.poles.iter().map(|r| y - r).product();
        let dq_over_q: f64 = self.poles.iter().map(|r| 1.0 / (y - r)).sum();
        self.scale * (dp - p * dq_over_q) / q
    }
}

/// Max over `grid` of |interpolant − r| relative to max |r|.
pub fn reproduction_error(scheme: &InterpolationScheme, r: &Rational, grid: &[f64]) -> f64 {
    let nodes = scheme.nodes();
    let samples: Vec<f64> = scheme
        .slots()
        .into_iter()
        .map(|s| match s {
            Slot::Value(j) => r.value(nodes[j]),
            Slot::Derivative(j) => r.derivative(nodes[j]),
        })
        .collect();
    let mut err = 0.0_f64;
    let mut size = 0.0_f64;
    for &y in grid {
        let want = r.value(y);
        let got = interpolate_eval(scheme, &samples, y).unwrap();
        err = err.max((got - want).abs());
        size = size.max(want.abs());
    }
    err / size
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}
