//! Legendre functions `P_ν(x)`, `Q_ν(x)` of complex degree for real `x > 1`.
//!
//! - `P_ν` is the hypergeometric form `₂F₁(−ν, ν+1; 1; (1−x)/2)` up to
//!   [`P_LARGE_X_SWITCH`], and beyond it the descending expansion in `1/x²`
//!   that writes `P_ν` as a combination of the two `Q`-type solutions.
//! - `Q_ν` uses the logarithmic expansion about `x = 1` for `x ≤ 1.25` and
//!   the descending series in `1/x²` otherwise.

use std::f64::consts::PI;

use super::gamma::{cpow, digamma, gamma_ratio, is_nonpositive_integer, rgamma};
use super::hyp2f1::hyp2f1;
use super::EPS;
use crate::{c64, Error, Result, C64};

/// Above this `x`, `P_ν` switches to the descending `1/x²` representation.
pub const P_LARGE_X_SWITCH: f64 = 50.0;
/// At or below this `x`, `Q_ν` uses the logarithmic expansion about 1.
const Q_NEAR_ONE: f64 = 1.25;
/// Radius of the averaging circle in `ν` when `ν + ½` is (nearly) an integer.
const DEGREE_PERTURB_RADIUS: f64 = 0.05;
const DEGREE_PERTURB_POINTS: usize = 16;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Degree `ν` of a Legendre function.
///
/// Transform evaluations use `ν = s − 1`, the resolvent kernel `ν = λ − 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexDegree(pub C64);

impl ComplexDegree {
    pub fn new(nu: C64) -> Self {
        ComplexDegree(nu)
    }

    pub fn real(nu: f64) -> Self {
        ComplexDegree(c64(nu, 0.0))
    }

    pub fn value(self) -> C64 {
        self.0
    }

    /// `ν ∈ {−1, −2, …}`, where `Q_ν` has poles.
    pub fn is_negative_integer(self) -> bool {
        is_nonpositive_integer(self.0 + 1.0)
    }

    /// The reflected degree `−ν − 1`; `P_ν = P_{−ν−1}`.
    pub fn reflected(self) -> Self {
        ComplexDegree(-self.0 - 1.0)
    }

    /// Representative of `{ν, −ν−1}` with `Re ν ≥ −½` (and `Im ν ≥ 0` on
    /// `Re ν = −½`).
    fn canonical_for_p(self) -> Self {
        let nu = self.0;
        if nu.re < -0.5 || (nu.re == -0.5 && nu.im < 0.0) {
            self.reflected()
        } else {
            self
        }
    }
}

impl From<C64> for ComplexDegree {
    fn from(nu: C64) -> Self {
        ComplexDegree(nu)
    }
}

/// Legendre function of the first kind `P_ν(x)`, `x ≥ 1`.
pub fn legendre_p(nu: ComplexDegree, x: f64) -> Result<C64> {
    check_x_p(x)?;
    if x == 1.0 {
        return Ok(c64(1.0, 0.0));
    }
    let nu = nu.canonical_for_p();
    if x > P_LARGE_X_SWITCH {
        large_x_averaged(nu.0, x)
    } else {
        hypergeometric_p(nu.0, x)
    }
}

/// `P_ν(x)` through `₂F₁(−ν, ν+1; 1; (1−x)/2)` at any `x ≥ 1`.
pub fn legendre_p_hypergeometric(nu: ComplexDegree, x: f64) -> Result<C64> {
    check_x_p(x)?;
    hypergeometric_p(nu.canonical_for_p().0, x)
}

/// `P_ν(x)` through the descending `1/x²` representation, `x > 1`.
pub fn legendre_p_large_x(nu: ComplexDegree, x: f64) -> Result<C64> {
    check_x_p(x)?;
    if x == 1.0 {
        return Err(Error::domain("legendre_p_large_x", "requires x > 1"));
    }
    large_x_averaged(nu.canonical_for_p().0, x)
}

fn check_x_p(x: f64) -> Result<()> {
    if !(x >= 1.0) || !x.is_finite() {
        return Err(Error::domain("legendre_p", format!("x = {x} < 1")));
    }
    Ok(())
}

fn hypergeometric_p(nu: C64, x: f64) -> Result<C64> {
    if x == 1.0 {
        return Ok(c64(1.0, 0.0));
    }
    hyp2f1(-nu, nu + 1.0, c64(1.0, 0.0), c64((1.0 - x) / 2.0, 0.0))
}

fn large_x_averaged(nu: C64, x: f64) -> Result<C64> {
    let shifted = nu + 0.5;
    let gap = (shifted - c64(shifted.re.round(), 0.0)).norm();
    if gap >= DEGREE_PERTURB_RADIUS / 2.0 {
        return large_x_raw(nu, x);
    }
    // P_ν is entire in ν: its value is the mean over a circle around ν.
    let mut acc = c64(0.0, 0.0);
    for k in 0..DEGREE_PERTURB_POINTS {
        let phase = 2.0 * PI * (k as f64 + 0.5) / DEGREE_PERTURB_POINTS as f64;
        acc += large_x_raw(nu + C64::from_polar(DEGREE_PERTURB_RADIUS, phase), x)?;
    }
    Ok(acc / DEGREE_PERTURB_POINTS as f64)
}

fn large_x_raw(nu: C64, x: f64) -> Result<C64> {
    let one = c64(1.0, 0.0);
    let inv2 = c64(1.0 / (x * x), 0.0);
    let two_x = c64(2.0 * x, 0.0);
    let sqrt_pi = PI.sqrt();
    let k1 = gamma_ratio(&[nu + 0.5], &[nu + 1.0])? / sqrt_pi;
    let k2 = gamma_ratio(&[-nu - 0.5], &[-nu])? / sqrt_pi;
    let mut v = c64(0.0, 0.0);
    if k1.norm() != 0.0 {
        v += k1 * cpow(two_x, nu) * hyp2f1(-nu / 2.0, (one - nu) / 2.0, 0.5 - nu, inv2)?;
    }
    if k2.norm() != 0.0 {
        v += k2
            * cpow(two_x, -nu - 1.0)
            * hyp2f1((nu + 1.0) / 2.0, (nu + 2.0) / 2.0, nu + 1.5, inv2)?;
    }
    Ok(v)
}

/// Legendre function of the second kind `Q_ν(x)`, `x > 1`, `ν ∉ {−1, −2, …}`.
pub fn legendre_q(nu: ComplexDegree, x: f64) -> Result<C64> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(Error::domain("legendre_q", format!("x = {x} must exceed 1")));
    }
    if nu.is_negative_integer() {
        return Err(Error::Pole {
            function: "legendre_q",
            at: nu.0,
        });
    }
    if x <= Q_NEAR_ONE {
        q_near_one(nu.0, x)
    } else {
        q_descending(nu.0, x)
    }
}

/// `Q_ν(x) = √π Γ(ν+1) (2x)^{−ν−1} ₂F̃₁((ν+1)/2, (ν+2)/2; ν+3/2; x⁻²)` with the
/// regularised `₂F̃₁ = ₂F₁ / Γ(c)`.
fn q_descending(nu: C64, x: f64) -> Result<C64> {
    let a = (nu + 1.0) / 2.0;
    let b = (nu + 2.0) / 2.0;
    let c = nu + 1.5;
    let zeta = c64(1.0 / (x * x), 0.0);
    let prefactor = PI.sqrt() * cpow(c64(2.0 * x, 0.0), -nu - 1.0);
    if is_nonpositive_integer(c) {
        // F/Γ(c) at c = −m: (a)_{m+1}(b)_{m+1}/(m+1)! ζ^{m+1} F(a+m+1, b+m+1; m+2; ζ)
        let m = -c.re as usize;
        let mut lead = c64(1.0, 0.0);
        for k in 0..=m {
            let kf = k as f64;
            lead *= (a + kf) * (b + kf) / (kf + 1.0) * zeta;
        }
        let mf = m as f64 + 1.0;
        let rest = hyp2f1(a + mf, b + mf, c64(mf + 1.0, 0.0), zeta)?;
        let g = super::gamma::gamma(nu + 1.0)?;
        return Ok(prefactor * g * lead * rest);
    }
    if (c - c64(c.re.round(), 0.0)).norm() < 1e-6 && c.re < 0.5 {
        // Close to a pole of the series: keep Γ(ν+1)/Γ(c) apart so the small
        // reciprocal gamma cancels the large series terms.
        let g = super::gamma::gamma(nu + 1.0)?;
        return Ok(prefactor * g * rgamma(c) * hyp2f1(a, b, c, zeta)?);
    }
    let ratio = gamma_ratio(&[nu + 1.0], &[c])?;
    Ok(prefactor * ratio * hyp2f1(a, b, c, zeta)?)
}

/// Logarithmic solution about `x = 1`:
/// `Q_ν = −½ [w₁ ln((x−1)/2) + S] − (γ + ψ(ν+1)) w₁` with `z = (1−x)/2`,
/// `w₁ = Σ (−ν)_n (ν+1)_n zⁿ / n!²` and
/// `S = Σ zⁿ/n!² [∂_a((a)_n)(b)_n + (a)_n ∂_b((b)_n) − 2Hₙ (a)_n (b)_n]`.
fn q_near_one(nu: C64, x: f64) -> Result<C64> {
    let z = (1.0 - x) / 2.0;
    let log_term = ((x - 1.0) / 2.0).ln();
    let a = -nu;
    let b = nu + 1.0;
    // (a)_n / n! and its a-derivative, likewise for b.
    let (mut pa, mut da) = (c64(1.0, 0.0), c64(0.0, 0.0));
    let (mut pb, mut db) = (c64(1.0, 0.0), c64(0.0, 0.0));
    let mut zn = 1.0;
    let mut harmonic = 0.0;
    let mut w1 = c64(1.0, 0.0);
    let mut s = c64(0.0, 0.0);
    let mut quiet = 0;
    for n in 0..2000 {
        let nf = n as f64;
        let next = nf + 1.0;
        da = (da * (a + nf) + pa) / next;
        pa = pa * (a + nf) / next;
        db = (db * (b + nf) + pb) / next;
        pb = pb * (b + nf) / next;
        zn *= z;
        harmonic += 1.0 / next;
        let t = pa * pb * zn;
        let u = (da * pb + pa * db - 2.0 * harmonic * pa * pb) * zn;
        w1 += t;
        s += u;
        if t.norm() <= EPS * w1.norm() && u.norm() <= EPS * s.norm().max(w1.norm()) {
            quiet += 1;
            if quiet >= 2 {
                let psi = digamma(nu + 1.0)?;
                return Ok(-0.5 * (w1 * log_term + s) - (EULER_GAMMA + psi) * w1);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence {
        what: "legendre_q near x = 1",
        estimate: f64::NAN,
    })
}

/// Outcome of the Wronskian self-test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WronskianResidual {
    /// `|P Q′ − P′ Q + 1/(x²−1)|` with central-difference derivatives.
    pub residual: f64,
    /// Set when `x` is so close to 1 that `1/(x²−1)` dominates the check.
    pub near_boundary: bool,
}

/// Checks `W{P_ν, Q_ν}(x) = −1/(x²−1)` with derivatives by central
/// differences of step `h`.
pub fn legendre_wronskian_residual(nu: ComplexDegree, x: f64, h: f64) -> Result<WronskianResidual> {
    if !(h > 0.0) || !(x - h > 1.0) {
        return Err(Error::domain(
            "legendre_wronskian_residual",
            format!("need x ± h > 1 (x = {x}, h = {h})"),
        ));
    }
    let p = legendre_p(nu, x)?;
    let q = legendre_q(nu, x)?;
    let dp = (legendre_p(nu, x + h)? - legendre_p(nu, x - h)?) / (2.0 * h);
    let dq = (legendre_q(nu, x + h)? - legendre_q(nu, x - h)?) / (2.0 * h);
    let w = p * dq - dp * q;
    let residual = (w + 1.0 / (x * x - 1.0)).norm();
    Ok(WronskianResidual {
        residual,
        near_boundary: x - 1.0 < 0.01,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(re: f64, im: f64) -> ComplexDegree {
        ComplexDegree::new(c64(re, im))
    }

    fn close(got: C64, want: C64, tol: f64) -> bool {
        (got - want).norm() <= tol * want.norm().max(1e-300)
    }

    #[test]
    fn p_at_one_and_integer_degrees() {
        for nu in [deg(0.3, 4.0), deg(-7.0, 0.0), deg(2.5, -1.0)] {
            assert_eq!(legendre_p(nu, 1.0).unwrap(), c64(1.0, 0.0));
        }
        assert!(close(legendre_p(deg(1.0, 0.0), 2.0).unwrap(), c64(2.0, 0.0), 1e-14));
        // P_2(x) = (3x² − 1)/2, both regimes
        for x in [1.7, 12.0, 80.0, 1e6] {
            let want = c64((3.0 * x * x - 1.0) / 2.0, 0.0);
            assert!(close(legendre_p(deg(2.0, 0.0), x).unwrap(), want, 1e-12), "x = {x}");
        }
    }

    #[test]
    fn p_oracle() {
        // mpmath legenp(−0.5+2i, 0, 3.7, type=3)
        let v = legendre_p(deg(-0.5, 2.0), 3.7).unwrap();
        let want = c64(-2.985_277_383_286_982_78e-1, 0.0);
        assert!(close(v, want, 1e-11), "{v}");
    }

    #[test]
    fn q_closed_forms() {
        let q0 = legendre_q(deg(0.0, 0.0), 2.0).unwrap();
        assert!((q0.re - 0.5 * 3f64.ln()).abs() < 1e-14 && q0.im.abs() < 1e-15);
        let q1 = legendre_q(deg(1.0, 0.0), 2.0).unwrap();
        assert!((q1.re - (3f64.ln() - 1.0)).abs() < 1e-14);
        for x in [1.01f64, 1.2, 1.3, 3.0, 100.0] {
            let want = 0.5 * ((x + 1.0) / (x - 1.0)).ln();
            let got = legendre_q(deg(0.0, 0.0), x).unwrap();
            assert!((got.re - want).abs() < 1e-13 * want.abs().max(1.0), "x = {x}");
            // Q_1(x) = x/2 ln((x+1)/(x−1)) − 1 = Σ_{k≥1} x^{−2k}/(2k+1)
            let want1: f64 = (1..200).map(|k| x.powi(-2 * k) / (2 * k + 1) as f64).sum();
            let got1 = legendre_q(deg(1.0, 0.0), x).unwrap();
            if x > 1.1 {
                assert!((got1.re - want1).abs() < 1e-12 * want1, "x = {x}: {got1}");
            } else {
                let closed = x / 2.0 * ((x + 1.0) / (x - 1.0)).ln() - 1.0;
                assert!((got1.re - closed).abs() < 1e-13, "x = {x}: {got1}");
            }
        }
    }

    #[test]
    fn q_oracle() {
        let v = legendre_q(deg(1.5, 1.0), 5.0).unwrap();
        let want = c64(-2.941_740_679_921_029_61e-3, -2.200_128_351_158_478_58e-3);
        assert!(close(v, want, 1e-11), "{v}");
    }

    #[test]
    fn q_errors() {
        assert!(matches!(legendre_q(deg(-2.0, 0.0), 3.0), Err(Error::Pole { .. })));
        assert!(matches!(legendre_q(deg(0.5, 0.0), 1.0), Err(Error::Domain { .. })));
        assert!(matches!(legendre_p(deg(0.5, 0.0), 0.9), Err(Error::Domain { .. })));
    }

    #[test]
    fn q_regimes_meet() {
        for nu in [deg(0.3, 0.0), deg(-0.7, 0.6), deg(2.0, 3.0), deg(-1.5, 0.0), deg(0.5, -4.0)] {
            let near = q_near_one(nu.0, Q_NEAR_ONE).unwrap();
            let far = q_descending(nu.0, Q_NEAR_ONE).unwrap();
            assert!(close(near, far, 1e-11), "ν = {:?}: {near} vs {far}", nu.0);
        }
    }

    #[test]
    fn p_regimes_meet_in_overlap_band() {
        for nu in [deg(-0.5, 0.0), deg(-0.5, 0.01), deg(-0.3, 7.0), deg(1.7, -0.4), deg(0.0, 0.0)] {
            for x in [40.0, 45.0, 50.0, 55.0, 60.0] {
                let h = legendre_p_hypergeometric(nu, x).unwrap();
                let l = legendre_p_large_x(nu, x).unwrap();
                assert!(close(h, l, 1e-10), "ν = {:?}, x = {x}: {h} vs {l}", nu.0);
            }
        }
    }

    #[test]
    fn wronskian_cases() {
        let w = legendre_wronskian_residual(deg(0.0, 0.0), 2.0, 1e-5).unwrap();
        assert!(w.residual <= 1e-8, "{w:?}");
        let w = legendre_wronskian_residual(deg(0.5, 0.5), 3.0, 1e-5).unwrap();
        assert!(w.residual <= 1e-6, "{w:?}");
        let w = legendre_wronskian_residual(deg(2.0, 0.0), 1.001, 1e-7).unwrap();
        assert!(w.residual.is_finite() && w.near_boundary);
        assert!(legendre_wronskian_residual(deg(2.0, 0.0), 1.001, 0.01).is_err());
    }
}
