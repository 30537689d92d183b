//! Rank-n factorizations of kernel matrices by rational interpolation.
//!
//! Rank-`n` factors come from rational interpolation in the second kernel
//! variable, with nodes and poles taken from Zolotarev's explicit solution
//! of the third problem on a pair of real intervals. The [`bounds`] module
//! evaluates the matching a-priori error certificates and [`linalg`] supplies
//! the exact SVD used as ground truth.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod bounds;
pub mod error;
pub mod figures;
pub mod kernels;
pub mod linalg;
pub mod lowrank;
pub mod moebius;
pub mod quad;
pub mod specfun;
pub mod zolotarev;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Complex kernel value.
pub type ComplexValue = Complex64;
