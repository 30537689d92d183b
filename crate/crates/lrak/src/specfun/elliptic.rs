//! Complete elliptic integral and Jacobi dn, parametrized by the
//! complementary modulus k′ so that moduli close to 1 stay accurate.

use std::f64::consts::FRAC_PI_2;

use crate::error::{domain, Result};

const AGM_TOL: f64 = 1e-15;
const AGM_MAX: usize = 40;

fn check_kc(kc: f64) -> Result<()> {
    if !(kc > 0.0 && kc <= 1.0) {
        return domain(format!("complementary modulus must lie in (0, 1], got {kc}"));
    }
    Ok(())
}

/// K(k) with k = √(1 − kc²), as π / (2 AGM(1, kc)).
pub fn elliptic_k_comp(kc: f64) -> Result<f64> {
    check_kc(kc)?;
    let (mut a, mut b) = (1.0_f64, kc);
    for _ in 0..AGM_MAX {
        if (a - b).abs() <= AGM_TOL * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    Ok(FRAC_PI_2 / a)
}

/// Jacobi sn, cn, dn at (u, k) with k = √(1 − kc²), by the descending
/// Landen transformation.
pub fn jacobi_sncndn_comp(u: f64, kc: f64) -> Result<(f64, f64, f64)> {
    check_kc(kc)?;
    let mut em = [0.0; AGM_MAX];
    let mut en = [0.0; AGM_MAX];
    let mut emc = kc * kc;
    let mut a = 1.0;
    let mut dn = 1.0;
    let mut c = 1.0;
    let mut l = 0;
    for i in 0..AGM_MAX {
        l = i;
        em[i] = a;
        emc = emc.sqrt();
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (a - emc).abs() <= AGM_TOL * a {
            break;
        }
        emc *= a;
        a = c;
    }
    let v = u * c;
    let mut sn = v.sin();
    let mut cn = v.cos();
    if sn != 0.0 {
        let mut a = cn / sn;
        c *= a;
        for ii in (0..=l).rev() {
            let b = em[ii];
            a *= c;
            c *= dn;
            dn = (en[ii] + a) / (b + a);
            a = c / b;
        }
        let a = 1.0 / (c * c + 1.0).sqrt();
        sn = if sn >= 0.0 { a } else { -a };
        cn = c * sn;
    }
    Ok((sn, cn, dn))
}

/// dn(u, k) for 0 ≤ u ≤ K(k), with k = √(1 − kc²).
pub fn jacobi_dn_comp(u: f64, kc: f64) -> Result<f64> {
    let big_k = elliptic_k_comp(kc)?;
    if !(u >= 0.0 && u <= big_k * (1.0 + 1e-14)) {
        return domain(format!("dn argument {u} outside [0, K = {big_k}]"));
    }
    let (_, _, dn) = jacobi_sncndn_comp(u, kc)?;
    Ok(dn.clamp(kc, 1.0))
}
