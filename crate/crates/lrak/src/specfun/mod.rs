//! Double-precision special functions used by the kernels and by the
//! Zolotarev node construction.

mod bessel;
mod elliptic;
mod gamma;

pub use bessel::{bessel_j0, bessel_j0_zeros, bessel_j1, bessel_y0, bessel_y1, hankel_h0_twisted, hankel_h1_twisted};
pub use elliptic::{elliptic_k_comp, jacobi_dn_comp, jacobi_sncndn_comp};
pub use gamma::{
    beta_fn, beta_weights, digamma_diff, gamma, gamma_half_ratio, ln_gamma_delta, ln_gamma_ratio, log_gamma, SQRT_PI,
};
