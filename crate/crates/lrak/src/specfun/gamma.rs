//! Log-gamma, gamma ratios, digamma differences and the partial-fraction
//! weights of the beta function.

use crate::error::{domain, Result};

const EULER_GAMMA: f64 = 0.5772156649015329;
const HALF_LN_2PI: f64 = 0.9189385332046728;

/// Argument above which the asymptotic series is used.
const STIRLING_MIN: f64 = 10.0;

/// B_{2k} / (2k (2k-1)), k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// B_{2k} / (2k), k = 1..8.
const DIGAMMA_ASYMP: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

/// zeta(k) - 1 for k = 2..40.
const ZETA_M1: [f64; 39] = [
    6.4493406684822644e-1,
    2.0205690315959429e-1,
    8.2323233711138192e-2,
    3.6927755143369926e-2,
    1.734306198444914e-2,
    8.3492773819228268e-3,
    4.0773561979443394e-3,
    2.0083928260822144e-3,
    9.9457512781808534e-4,
    4.9418860411946456e-4,
    2.460865533080483e-4,
    1.2271334757848915e-4,
    6.1248135058704829e-5,
    3.0588236307020494e-5,
    1.5282259408651872e-5,
    7.6371976378997623e-6,
    3.8172932649998399e-6,
    1.9082127165539389e-6,
    9.5396203387279611e-7,
    4.7693298678780646e-7,
    2.3845050272773299e-7,
    1.1921992596531107e-7,
    5.960818905125948e-8,
    2.980350351465228e-8,
    1.4901554828365041e-8,
    7.4507117898354295e-9,
    3.7253340247884571e-9,
    1.862659723513049e-9,
    9.3132743241966818e-10,
    4.6566290650337841e-10,
    2.3283118336765055e-10,
    1.164155017270052e-10,
    5.8207720879027009e-11,
    2.9103850444970997e-11,
    1.4551921891041984e-11,
    7.275959835057481e-12,
    3.6379795473786512e-12,
    1.8189896503070659e-12,
    9.0949478402638893e-13,
];

fn stirling_tail(x: f64) -> f64 {
    let r = 1.0 / (x * x);
    let mut acc = 0.0;
    for c in STIRLING.iter().rev() {
        acc = acc * r + c;
    }
    acc / x
}

/// ln Γ(2 + z) for |z| ≤ 1/2 from the Taylor series about 2.
fn ln_gamma_2p(z: f64) -> f64 {
    let mut sum = 0.0;
    let mut zk = -z;
    for (i, c) in ZETA_M1.iter().enumerate() {
        zk *= -z;
        let term = c * zk / (i + 2) as f64;
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    (1.0 - EULER_GAMMA) * z + sum
}

/// Natural log of Γ(x) for x > 0.
///
/// Taylor series about 2 on [0.5, 2.5] (keeps relative accuracy near the
/// roots at 1 and 2), Stirling series above 10 and downward recurrence onto
/// the Taylor window in between.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("log_gamma requires finite x > 0, got {x}"));
    }
    Ok(log_gamma_pos(x))
}

fn log_gamma_pos(x: f64) -> f64 {
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    if x < 0.5 {
        return log_gamma_pos(x + 1.0) - x.ln();
    }
    if x <= 1.5 {
        return ln_gamma_2p(x - 1.0) - (x - 1.0).ln_1p();
    }
    if x <= 2.5 {
        return ln_gamma_2p(x - 2.0);
    }
    if x < STIRLING_MIN {
        let mut prod = 1.0;
        let mut y = x;
        while y > 2.5 {
            y -= 1.0;
            prod *= y;
        }
        return ln_gamma_2p(y - 2.0) + prod.ln();
    }
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + stirling_tail(x)
}

/// ln Γ(x) − ln Γ(y) without the cancellation of subtracting two large
/// log-gammas.
pub fn ln_gamma_ratio(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) || !x.is_finite() || !y.is_finite() {
        return domain(format!("ln_gamma_ratio requires x, y > 0, got {x}, {y}"));
    }
    Ok(delta_pos(y, x - y))
}

/// ln Γ(y + d) − ln Γ(y) with the offset d taken exactly, for y, y + d > 0.
pub fn ln_gamma_delta(y: f64, d: f64) -> Result<f64> {
    if !(y > 0.0 && y + d > 0.0) || !y.is_finite() || !d.is_finite() {
        return domain(format!("ln_gamma_delta requires y, y + d > 0, got {y}, {d}"));
    }
    Ok(delta_pos(y, d))
}

fn delta_pos(y: f64, d: f64) -> f64 {
    if d == 0.0 {
        return 0.0;
    }
    let x = y + d;
    if d.abs() > 0.5 * y.min(x) {
        return log_gamma_pos(x) - log_gamma_pos(y);
    }
    // shift both arguments by the same integer
    let mut shift_sum = 0.0;
    let mut ys = y;
    while ys.min(ys + d) < STIRLING_MIN {
        shift_sum += (d / ys).ln_1p();
        ys += 1.0;
    }
    let xs = ys + d;
    let main = (xs - 0.5) * (d / ys).ln_1p() + d * ys.ln() - d;
    main + stirling_tail(xs) - stirling_tail(ys) - shift_sum
}

/// Γ(s + 1/2) / Γ(s + 1).
pub fn gamma_half_ratio(s: f64) -> Result<f64> {
    if !(s >= 0.0) || !s.is_finite() {
        return domain(format!("gamma_half_ratio requires s >= 0, got {s}"));
    }
    Ok(ln_gamma_ratio(s + 0.5, s + 1.0)?.exp())
}

/// ψ(x) − ψ(y) for x, y > 0.
pub fn digamma_diff(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) || !x.is_finite() || !y.is_finite() {
        return domain(format!("digamma_diff requires x, y > 0, got {x}, {y}"));
    }
    let d = x - y;
    if d == 0.0 {
        return Ok(0.0);
    }
    let (mut xs, mut ys) = (x, y);
    let mut shift_sum = 0.0;
    while xs.min(ys) < STIRLING_MIN {
        // ψ(z) = ψ(z+1) − 1/z
        shift_sum += d / (xs * ys);
        xs += 1.0;
        ys += 1.0;
    }
    let (rx, ry) = (1.0 / (xs * xs), 1.0 / (ys * ys));
    let (mut px, mut py) = (rx, ry);
    let mut series = 0.0;
    for c in DIGAMMA_ASYMP {
        series += c * (px - py);
        px *= rx;
        py *= ry;
    }
    let main = (d / ys).ln_1p() + 0.5 * d / (xs * ys);
    Ok(main - series + shift_sum)
}

/// Partial-fraction weights w(k, β) = Γ(k+1−β) / (Γ(k+1) Γ(1−β)) for
/// k = 0..=kmax, by the recurrence w(k) = w(k−1)(k−β)/k.
pub fn beta_weights(beta: f64, kmax: usize) -> Result<Vec<f64>> {
    if !(beta > 0.0) || !beta.is_finite() || beta.fract() == 0.0 {
        return domain(format!("beta must be positive and non-integer, got {beta}"));
    }
    let mut w = Vec::with_capacity(kmax + 1);
    w.push(1.0);
    let mut cur = 1.0;
    for k in 1..=kmax {
        let kf = k as f64;
        cur *= (kf - beta) / kf;
        w.push(cur);
    }
    Ok(w)
}

/// Γ(x) for 0 < x ≤ 171.
pub fn gamma(x: f64) -> Result<f64> {
    Ok(log_gamma(x)?.exp())
}

/// Beta function B(a, b) = Γ(a)Γ(b)/Γ(a+b) via log-gamma.
pub fn beta_fn(a: f64, b: f64) -> Result<f64> {
    Ok((log_gamma(b)? - ln_gamma_delta(a, b)?).exp())
}

pub const SQRT_PI: f64 = 1.772_453_850_905_516;

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    // Γ(x)Γ(1−x) = π / sin(πx)
    fn reflection_check(x: f64) -> f64 {
        PI / (PI * x).sin()
    }

    #[test]
    fn exact_points() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert_eq!(log_gamma(2.0).unwrap(), 0.0);
        let v = log_gamma(0.5).unwrap();
        assert!((v - 0.5723649429246999).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
        assert!(gamma_half_ratio(-0.1).is_err());
        assert!(beta_weights(1.0, 3).is_err());
    }

    #[test]
    fn recurrence_consistency() {
        for &x in &[0.7, 1.3, 2.2, 3.9, 9.5, 10.5, 55.0] {
            let lhs = log_gamma(x + 1.0).unwrap();
            let rhs = log_gamma(x).unwrap() + f64::ln(x);
            assert!((lhs - rhs).abs() <= 2e-15 * lhs.abs().max(1.0), "x = {x}");
        }
    }

    #[test]
    fn reflection() {
        for &x in &[0.1, 0.25, 0.4, 0.6, 0.9] {
            let lhs = (log_gamma(x).unwrap() + log_gamma(1.0 - x).unwrap()).exp();
            let rhs = reflection_check(x);
            assert!((lhs / rhs - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn half_ratio_small() {
        assert!((gamma_half_ratio(0.0).unwrap() - SQRT_PI).abs() < 1e-15);
        assert!((gamma_half_ratio(1.0).unwrap() - 0.5 * SQRT_PI).abs() < 1e-15);
    }

    #[test]
    fn weights_leading() {
        let w = beta_weights(0.5, 2).unwrap();
        assert_eq!(w, vec![1.0, 0.5, 0.375]);
    }

    #[test]
    fn digamma_diff_unit_shift() {
        // ψ(x+1) − ψ(x) = 1/x
        for &x in &[0.3, 1.0, 4.5, 12.0, 250.0] {
            let d = digamma_diff(x + 1.0, x).unwrap();
            assert!((d * x - 1.0).abs() < 1e-14, "x = {x}");
        }
    }
}
