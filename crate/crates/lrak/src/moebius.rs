//! Extended reals, real Möbius maps and the cross-ratio.

use std::fmt;

use crate::error::{domain, Error, Result};

/// A real number or one of the two infinite endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtendedReal {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtendedReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// IEEE view, with ±∞ mapped to the float infinities.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtendedReal::NegInf => f64::NEG_INFINITY,
            ExtendedReal::Finite(v) => v,
            ExtendedReal::PosInf => f64::INFINITY,
        }
    }

    pub fn from_f64(v: f64) -> Self {
        if v == f64::INFINITY {
            ExtendedReal::PosInf
        } else if v == f64::NEG_INFINITY {
            ExtendedReal::NegInf
        } else {
            ExtendedReal::Finite(v)
        }
    }

    fn rank(self) -> (i8, f64) {
        match self {
            ExtendedReal::NegInf => (-1, 0.0),
            ExtendedReal::Finite(v) => (0, v),
            ExtendedReal::PosInf => (1, 0.0),
        }
    }

    /// Strict order in the extended line.
    pub fn lt(self, other: Self) -> bool {
        let (a, x) = self.rank();
        let (b, y) = other.rank();
        a < b || (a == 0 && b == 0 && x < y)
    }
}

impl From<f64> for ExtendedReal {
    fn from(v: f64) -> Self {
        ExtendedReal::from_f64(v)
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::NegInf => write!(f, "-inf"),
            ExtendedReal::PosInf => write!(f, "inf"),
            ExtendedReal::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// z ↦ (az + b) / (cz + d) with real coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl MoebiusMap {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let scale = a.abs().max(b.abs()).max(c.abs()).max(d.abs());
        let det = a * d - b * c;
        if !(det.abs() > 1e-14 * scale * scale) {
            return Err(Error::Consistency(format!(
                "degenerate Möbius map (determinant {det:e})"
            )));
        }
        Ok(MoebiusMap { a, b, c, d })
    }

    pub fn identity() -> Self {
        MoebiusMap {
            a: 1.0,
            b: 0.0,
            c: 0.0,
            d: 1.0,
        }
    }

    /// Projective evaluation. The projective point at infinity is reported as
    /// `PosInf`, and both infinite inputs are treated as that single point.
    pub fn apply(&self, z: ExtendedReal) -> ExtendedReal {
        let (num, den) = match z {
            ExtendedReal::Finite(x) => (self.a * x + self.b, self.c * x + self.d),
            _ => (self.a, self.c),
        };
        if den == 0.0 {
            ExtendedReal::PosInf
        } else {
            ExtendedReal::Finite(num / den)
        }
    }

    /// Evaluation at a finite point, returning an IEEE infinity at the pole.
    pub fn apply_f64(&self, x: f64) -> f64 {
        self.apply(ExtendedReal::Finite(x)).to_f64()
    }

    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    /// True when the coefficient vectors agree up to a common scalar.
    pub fn equivalent(&self, other: &MoebiusMap, tol: f64) -> bool {
        let p = [self.a, self.b, self.c, self.d];
        let q = [other.a, other.b, other.c, other.d];
        let i = (0..4).max_by(|&i, &j| p[i].abs().total_cmp(&p[j].abs())).unwrap_or(0);
        if q[i] == 0.0 {
            return false;
        }
        let s = p[i] / q[i];
        let scale = p.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        p.iter().zip(q).all(|(x, y)| (x - s * y).abs() <= tol * scale)
    }
}

/// Map sending (w1, w2, w3) to (0, 1, ∞).
fn to_zero_one_inf(w1: ExtendedReal, w2: ExtendedReal, w3: ExtendedReal) -> Result<MoebiusMap> {
    use ExtendedReal::Finite;
    match (w1, w2, w3) {
        (Finite(p), Finite(q), Finite(r)) => MoebiusMap::new(q - r, -p * (q - r), q - p, -r * (q - p)),
        (_, Finite(q), Finite(r)) => MoebiusMap::new(0.0, q - r, 1.0, -r),
        (Finite(p), _, Finite(r)) => MoebiusMap::new(1.0, -p, 1.0, -r),
        (Finite(p), Finite(q), _) => MoebiusMap::new(1.0, -p, 0.0, q - p),
        _ => Err(Error::Consistency("at most one point may be infinite".into())),
    }
}

fn check_order(a: ExtendedReal, b: ExtendedReal, c: ExtendedReal, d: ExtendedReal) -> Result<()> {
    if !(a.lt(b) && b.lt(c) && c.lt(d)) {
        return domain(format!("points must be strictly increasing: {a}, {b}, {c}, {d}"));
    }
    if !a.is_finite() && !d.is_finite() {
        return domain("at most one of a, d may be infinite");
    }
    if !b.is_finite() || !c.is_finite() {
        return domain("inner points b, c must be finite");
    }
    Ok(())
}

/// γ = |c−a||d−b| / (|c−b||d−a|) for a < b < c < d, with the limit forms
/// when a = −∞ or d = +∞.
pub fn cross_ratio_gamma(a: ExtendedReal, b: ExtendedReal, c: ExtendedReal, d: ExtendedReal) -> Result<f64> {
    check_order(a, b, c, d)?;
    let (b, c) = (b.to_f64(), c.to_f64());
    Ok(match (a.finite(), d.finite()) {
        (None, Some(d)) => (d - b) / (c - b),
        (Some(a), None) => (c - a) / (c - b),
        (Some(a), Some(d)) => ((c - a) * (d - b)) / ((c - b) * (d - a)),
        (None, None) => unreachable!(),
    })
}

/// τ = −1 + 2γ + 2√(γ² − γ).
pub fn tau_from_gamma(gamma: f64) -> Result<f64> {
    if !(gamma > 1.0) || !gamma.is_finite() {
        return domain(format!("cross-ratio must exceed 1, got {gamma}"));
    }
    Ok(-1.0 + 2.0 * gamma + 2.0 * (gamma * (gamma - 1.0)).sqrt())
}

/// The map T with T(−1) = a, T(−1/τ) = b, T(1) = d. The remaining condition
/// T(1/τ) = c is checked, not imposed.
pub fn build_four_point_map(
    a: ExtendedReal,
    b: ExtendedReal,
    c: ExtendedReal,
    d: ExtendedReal,
    tau: f64,
) -> Result<MoebiusMap> {
    check_order(a, b, c, d)?;
    let expected = tau_from_gamma(cross_ratio_gamma(a, b, c, d)?)?;
    if !((tau - expected).abs() <= 1e-9 * expected) {
        return Err(Error::Consistency(format!(
            "tau = {tau} does not match the cross-ratio of the points (expected {expected})"
        )));
    }
    let f = ExtendedReal::Finite;
    let z = to_zero_one_inf(f(-1.0), f(-1.0 / tau), f(1.0))?;
    let w = to_zero_one_inf(a, b, d)?;
    let t = w.inverse().compose(&z);
    let c = c.to_f64();
    let image = t.apply_f64(1.0 / tau);
    if !((image - c).abs() <= 1e-9 * (c.abs() + 1.0)) {
        return Err(Error::Consistency(format!(
            "fourth point maps to {image}, expected {c}"
        )));
    }
    Ok(t)
}
