//! The radial algebra `L¹(G//K)` in the coordinate `x = cosh 2ζ ∈ [1, ∞)`
//! with measure `½ dx`, and its spherical transform on the strip.
//!
//! `f̂(s) = ½ ∫₁^∞ f(x) P_{s−1}(x) dx` is evaluated by adaptive quadrature in
//! `u` with `x = cosh u`, which turns the algebraic tails of `P` and `Q`
//! into exponentials.

mod ops;
mod radial;
mod specifier;
mod strip;

pub use ops::{
    convolve_transform, divided_difference, gelfand_transform, gelfand_transform_with,
    measure_gelfand, pair, resolvent_kernel, resolvent_transform, t_lambda, t_lambda_transform,
    TransformOptions, DIVISION_NORMALIZATION,
};
pub use radial::{BoundedRadialFunction, Profile, RadialFunction, RadialMeasure, SampledProfile};
pub use specifier::{parse_bounded, parse_complex, parse_measure, parse_radial, read_sampled};
pub use strip::{SpectralParameter, StripPoint};
