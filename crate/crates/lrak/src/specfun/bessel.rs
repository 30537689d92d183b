//! Bessel functions of orders 0 and 1 for real positive arguments.
//!
//! Miller's backward recurrence (normalized by J0 + 2ΣJ_2k = 1) on (0, 20],
//! with Y0 and Y1 from their Neumann series over the same J_k; Hankel's
//! asymptotic expansion above 20.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{domain, Error, Result};
use crate::Complex64;

const EULER_GAMMA: f64 = 0.5772156649015329;
const ASYMPTOTIC_MIN: f64 = 20.0;

#[derive(Debug, Clone, Copy)]
struct Jy01 {
    j0: f64,
    j1: f64,
    y0: f64,
    y1: f64,
}

/// J_0..J_m by backward recurrence, normalized; returns the sequence.
fn miller_sequence(x: f64) -> Vec<f64> {
    let mut m = (1.3 * x + 36.0) as usize;
    m += m % 2;
    let mut j = vec![0.0; m + 2];
    j[m] = 1e-30;
    for k in (1..=m).rev() {
        j[k - 1] = (2.0 * k as f64 / x) * j[k] - j[k + 1];
        if j[k - 1].abs() > 1e250 {
            for v in j.iter_mut().skip(k - 1) {
                *v *= 1e-250;
            }
        }
    }
    let mut norm = j[0];
    let mut k = 2;
    while k <= m {
        norm += 2.0 * j[k];
        k += 2;
    }
    for v in j.iter_mut() {
        *v /= norm;
    }
    j
}

fn jy01_small(x: f64) -> Jy01 {
    let j = miller_sequence(x);
    let m = j.len() - 2;
    let lg = (0.5 * x).ln() + EULER_GAMMA;
    // Y0 = (2/π)[(ln(x/2)+γ)J0 − 2Σ(−1)^k J_2k/k]
    // Y1 = (2/π)[(ln(x/2)+γ)J1 − J0/x + Σ(−1)^k (J_{2k−1} − J_{2k+1})/k]
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut k = 1;
    while 2 * k < m {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let kf = k as f64;
        s0 += sign * j[2 * k] / kf;
        s1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / kf;
        k += 1;
    }
    let y0 = 2.0 / PI * (lg * j[0] - 2.0 * s0);
    let y1 = 2.0 / PI * (lg * j[1] - j[0] / x + s1);
    Jy01 {
        j0: j[0],
        j1: j[1],
        y0,
        y1,
    }
}

/// Hankel's P_ν, Q_ν for 4ν² = mu.
fn hankel_pq(mu: f64, x: f64) -> (f64, f64) {
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        let mag = term.abs();
        if mag > prev {
            break;
        }
        prev = mag;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
        if mag < 1e-17 {
            break;
        }
    }
    (p, q)
}

fn jy01_large(x: f64) -> Jy01 {
    let amp = (2.0 / (PI * x)).sqrt();
    let (s, c) = x.sin_cos();
    let (p0, q0) = hankel_pq(0.0, x);
    let (p1, q1) = hankel_pq(4.0, x);
    // χ0 = x − π/4, χ1 = x − 3π/4
    let (c0, s0) = ((c + s) * FRAC_1_SQRT_2, (s - c) * FRAC_1_SQRT_2);
    let (c1, s1) = ((s - c) * FRAC_1_SQRT_2, -(s + c) * FRAC_1_SQRT_2);
    Jy01 {
        j0: amp * (p0 * c0 - q0 * s0),
        y0: amp * (p0 * s0 + q0 * c0),
        j1: amp * (p1 * c1 - q1 * s1),
        y1: amp * (p1 * s1 + q1 * c1),
    }
}

fn jy01(x: f64) -> Jy01 {
    if x > ASYMPTOTIC_MIN {
        jy01_large(x)
    } else {
        jy01_small(x)
    }
}

fn j_pair(x: f64) -> (f64, f64) {
    let ax = x.abs();
    if ax == 0.0 {
        return (1.0, 0.0);
    }
    let r = if ax > ASYMPTOTIC_MIN {
        jy01_large(ax)
    } else {
        let j = miller_sequence(ax);
        Jy01 {
            j0: j[0],
            j1: j[1],
            y0: 0.0,
            y1: 0.0,
        }
    };
    (r.j0, if x < 0.0 { -r.j1 } else { r.j1 })
}

/// J0(x).
pub fn bessel_j0(x: f64) -> f64 {
    j_pair(x).0
}

/// J1(x).
pub fn bessel_j1(x: f64) -> f64 {
    j_pair(x).1
}

/// Y0(x) for x > 0.
pub fn bessel_y0(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("bessel_y0 requires x > 0, got {x}"));
    }
    Ok(jy01(x).y0)
}

/// Y1(x) for x > 0.
pub fn bessel_y1(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("bessel_y1 requires x > 0, got {x}"));
    }
    Ok(jy01(x).y1)
}

/// H0⁽¹⁾(u)·e^{−iu} for u > 0. Above the asymptotic threshold the
/// oscillation is removed analytically.
pub fn hankel_h0_twisted(u: f64) -> Result<Complex64> {
    if !(u > 0.0) || !u.is_finite() {
        return domain(format!("hankel_h0_twisted requires u > 0, got {u}"));
    }
    if u > ASYMPTOTIC_MIN {
        let amp = (2.0 / (PI * u)).sqrt();
        let (p, q) = hankel_pq(0.0, u);
        let rot = Complex64::new(FRAC_1_SQRT_2, -FRAC_1_SQRT_2);
        return Ok(Complex64::new(p, q) * rot * amp);
    }
    let r = jy01_small(u);
    let (s, c) = u.sin_cos();
    Ok(Complex64::new(r.j0, r.y0) * Complex64::new(c, -s))
}

/// H1⁽¹⁾(u)·e^{−iu} for u > 0.
pub fn hankel_h1_twisted(u: f64) -> Result<Complex64> {
    if !(u > 0.0) || !u.is_finite() {
        return domain(format!("hankel_h1_twisted requires u > 0, got {u}"));
    }
    if u > ASYMPTOTIC_MIN {
        let amp = (2.0 / (PI * u)).sqrt();
        let (p, q) = hankel_pq(4.0, u);
        // e^{−3iπ/4}
        let rot = Complex64::new(-FRAC_1_SQRT_2, -FRAC_1_SQRT_2);
        return Ok(Complex64::new(p, q) * rot * amp);
    }
    let r = jy01_small(u);
    let (s, c) = u.sin_cos();
    Ok(Complex64::new(r.j1, r.y1) * Complex64::new(c, -s))
}

/// First `count` positive zeros of J0: McMahon's estimate, then Newton with
/// J0' = −J1.
pub fn bessel_j0_zeros(count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return domain("bessel_j0_zeros requires count >= 1");
    }
    let mut out = Vec::with_capacity(count);
    for k in 1..=count {
        let b = (k as f64 - 0.25) * PI;
        let mut w = b + 1.0 / (8.0 * b);
        let mut done = false;
        for _ in 0..50 {
            let (j0, j1) = j_pair(w);
            let step = j0 / j1;
            w += step;
            if step.abs() <= 1e-13 * w {
                // one polishing step
                let (j0, j1) = j_pair(w);
                w += j0 / j1;
                done = true;
                break;
            }
        }
        if !done || bessel_j0(w).abs() > 1e-12 {
            return Err(Error::Convergence(format!("J0 zero {k} did not converge")));
        }
        out.push(w);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_values() {
        assert_eq!(bessel_j0(0.0), 1.0);
        assert_eq!(bessel_j1(0.0), 0.0);
        assert!(bessel_y0(0.0).is_err());
        assert!(hankel_h0_twisted(0.0).is_err());
    }

    #[test]
    fn odd_even_symmetry() {
        for &x in &[0.3, 4.0, 17.0, 35.0] {
            assert_eq!(bessel_j0(-x), bessel_j0(x));
            assert_eq!(bessel_j1(-x), -bessel_j1(x));
        }
    }

    #[test]
    fn wronskian_j1y0() {
        // J1 Y0 − J0 Y1 = 2/(πx)
        for &x in &[0.01, 0.5, 3.0, 7.7, 19.9, 20.1, 55.0, 390.0] {
            let r = jy01(x);
            let w = r.j1 * r.y0 - r.j0 * r.y1;
            let target = 2.0 / (PI * x);
            assert!((w / target - 1.0).abs() < 1e-12, "x = {x}: {w} vs {target}");
        }
    }

    #[test]
    fn regimes_agree_at_threshold() {
        let a = jy01_small(20.0);
        let b = jy01_large(20.0);
        assert!((a.j0 - b.j0).abs() < 1e-15);
        assert!((a.y0 - b.y0).abs() < 1e-15);
        assert!((a.j1 - b.j1).abs() < 1e-15);
        assert!((a.y1 - b.y1).abs() < 1e-15);
    }

    #[test]
    fn twisted_matches_rotation_past_threshold() {
        let u = 25.0;
        let r = jy01(u);
        let (s, c) = u.sin_cos();
        let direct = Complex64::new(r.j0, r.y0) * Complex64::new(c, -s);
        let h = hankel_h0_twisted(u).unwrap();
        assert!((h - direct).norm() < 1e-15);
    }
}
