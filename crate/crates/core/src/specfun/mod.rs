//! Special functions of complex argument and parameter.
//!
//! Everything here is a pure function of its arguments. Coefficient tables
//! are `const` data.

mod gamma;
mod hyp2f1;
mod legendre;

pub use gamma::{digamma, gamma, is_nonpositive_integer, ln_gamma, rgamma};
pub use hyp2f1::{hyp2f1, hyp2f1_euler, hyp2f1_pfaff, hyp2f1_series, hyp2f1_with, Transform};
pub use legendre::{
    legendre_p, legendre_p_hypergeometric, legendre_p_large_x, legendre_q,
    legendre_wronskian_residual, ComplexDegree, WronskianResidual, P_LARGE_X_SWITCH,
};

/// Machine epsilon used as the series truncation threshold.
pub(crate) const EPS: f64 = f64::EPSILON;
