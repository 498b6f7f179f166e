//! Spherical harmonic analysis on `SU(1,1)` acting on the unit disk.
//!
//! The crate evaluates the objects that make the Wiener-type theory of
//! the radial algebra `L¹(G//K)` computable:
//!
//! - [`specfun`]: complex gamma, Gauss `₂F₁`, and Legendre `P_ν`, `Q_ν` of
//!   complex degree on `(1, ∞)`.
//! - [`transform`]: radial functions and measures, the spherical transform on
//!   the strip `0 ≤ Re s ≤ 1`, the resolvent kernel `b_λ = 2Q_{λ−1}`, the
//!   resolvent transform and the division operator `T_λ`.
//! - [`tauberian`]: decay diagnostics, hull scans and the mean-value
//!   hypotheses for radial measures.
//! - [`morera`]: the two-circle functions `J(r, s)`, argument-principle
//!   zero counting and location.
//! - [`disk`]: Möbius maps of the disk, circle averages, Poisson extension
//!   and contour integrals.
//!
//! Grid-shaped work goes through [`par`], which uses rayon when the
//! `parallel` feature is enabled and a plain iterator otherwise.

pub mod disk;
mod error;
pub mod morera;
pub mod par;
pub mod quad;
pub mod specfun;
pub mod tauberian;
pub mod transform;

pub use error::{Error, Result};

/// Complex double used throughout the crate.
pub type C64 = num_complex::Complex64;

/// Shorthand constructor for [`C64`].
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
