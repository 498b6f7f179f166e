use crate::quad::QuadOptions;
use crate::specfun::{legendre_p, legendre_q, ComplexDegree};
use crate::{Error, Result, C64};

use super::radial::{BoundedRadialFunction, RadialFunction, RadialMeasure};
use super::strip::{SpectralParameter, StripPoint};

/// Constant in front of the explicit `T_λ` formula. The transform identity
/// `T̂_λf(s) = (f̂(λ) − f̂(s)) / (λ(1−λ) − s(1−s))` holds with factor 1:
/// `(L + λ(1−λ)) T_λf = −f` for `L = d/dx (x²−1) d/dx`, and the boundary
/// term at `x = 1` supplies `f̂(λ)`. `division_calibration` in the tests
/// pins this.
pub const DIVISION_NORMALIZATION: f64 = 1.0;

/// Base absolute tolerance, scaled by `1 + ‖f‖₁` per call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformOptions {
    pub abs_tol: f64,
}

impl Default for TransformOptions {
    fn default() -> Self {
        TransformOptions { abs_tol: 1e-9 }
    }
}

impl TransformOptions {
    fn quad(&self, scale: f64) -> QuadOptions {
        QuadOptions::with_abs_tol(self.abs_tol * (1.0 + scale))
    }
}

/// `f̂(s) = ½ ∫₁^∞ f(x) P_{s−1}(x) dx`.
pub fn gelfand_transform(f: &RadialFunction, s: StripPoint) -> Result<C64> {
    gelfand_transform_with(f, s, &TransformOptions::default())
}

pub fn gelfand_transform_with(f: &RadialFunction, s: StripPoint, opts: &TransformOptions) -> Result<C64> {
    let nu = ComplexDegree::new(s.value() - 1.0);
    f.integrate_u(
        1.0,
        |u| Ok(0.5 * f.eval_u(u)? * legendre_p(nu, u.cosh())? * u.sinh()),
        &opts.quad(f.l1_norm()),
    )
}

/// `μ̂(s) = ∫ P_{s−1}(cosh 2ζ) dμ(ζ)`.
pub fn measure_gelfand(mu: &RadialMeasure, s: StripPoint) -> Result<C64> {
    let mut v = mu.atom_sum(s.value() - 1.0)?;
    if let Some(rho) = mu.density() {
        v += gelfand_transform(rho, s)?;
    }
    Ok(v)
}

/// `⟨f, g⟩ = ½ ∫₁^∞ f(x) g(x) dx`.
pub fn pair(f: &RadialFunction, g: &BoundedRadialFunction) -> Result<C64> {
    if g.is_zero() {
        return Ok(C64::from(0.0));
    }
    let extra = match g {
        BoundedRadialFunction::Radial { f: gf, .. } => gf.knots(),
        BoundedRadialFunction::Constant(_) => Vec::new(),
    };
    f.integrate_u_split(
        1.0,
        &extra,
        |u| Ok(0.5 * f.eval_u(u)? * g.eval_u(u)? * u.sinh()),
        &TransformOptions::default().quad(f.l1_norm() * g.sup_norm()),
    )
}

/// `b_λ = 2Q_{λ−1}`, with `b̂_λ(s) = (s(1−s) − λ(1−λ))⁻¹`.
///
/// `λ` and `1 − λ` give the same transform; the representative with
/// `Re λ > 1` is the integrable one and is always used.
pub fn resolvent_kernel(lambda: SpectralParameter) -> Result<RadialFunction> {
    if lambda.in_strip() {
        return Err(Error::domain(
            "resolvent_kernel",
            format!("λ = {} lies in the strip; b_λ is not integrable", lambda.value()),
        ));
    }
    let l = if lambda.value().re < 0.5 {
        lambda.reflected()
    } else {
        lambda
    };
    RadialFunction::kernel(l.value())
}

/// `𝔈[g](λ) = ⟨b_λ, g⟩`.
pub fn resolvent_transform(g: &BoundedRadialFunction, lambda: SpectralParameter) -> Result<C64> {
    let b = resolvent_kernel(lambda)?;
    if g.is_zero() {
        return Ok(C64::from(0.0));
    }
    pair(&b, g)
}

fn check_division_lambda(lambda: SpectralParameter) -> Result<ComplexDegree> {
    let re = lambda.value().re;
    if !(re > 0.0 && re < 1.0) || re == 0.5 {
        return Err(Error::domain(
            "t_lambda",
            format!("need 0 < Re λ < 1 and Re λ ≠ ½, got λ = {}", lambda.value()),
        ));
    }
    Ok(ComplexDegree::new(lambda.value() - 1.0))
}

/// `∫_{x>t} f Q_ν dx` and `∫_{x>t} f P_ν dx`.
fn tail_integrals(f: &RadialFunction, nu: ComplexDegree, t: f64, q: &QuadOptions) -> Result<(C64, C64)> {
    let a = f.integrate_u(t, |u| Ok(f.eval_u(u)? * legendre_q(nu, u.max(1e-7).cosh())? * u.sinh()), q)?;
    let b = f.integrate_u(t, |u| Ok(f.eval_u(u)? * legendre_p(nu, u.cosh())? * u.sinh()), q)?;
    Ok((a, b))
}

/// `(T_λf)(t) = P_{λ−1}(t) ∫_{x>t} f Q_{λ−1} dx − Q_{λ−1}(t) ∫_{x>t} f P_{λ−1} dx`.
pub fn t_lambda(f: &RadialFunction, lambda: SpectralParameter, t: f64) -> Result<C64> {
    let nu = check_division_lambda(lambda)?;
    if !(t > 1.0 && t.is_finite()) {
        return Err(Error::domain("t_lambda", format!("t = {t} must exceed 1")));
    }
    let (a, b) = tail_integrals(f, nu, t, &TransformOptions::default().quad(f.l1_norm()))?;
    Ok(DIVISION_NORMALIZATION * (legendre_p(nu, t)? * a - legendre_q(nu, t)? * b))
}

/// Spherical transform of `t ↦ (T_λf)(t)` at `s`, by nested quadrature.
pub fn t_lambda_transform(f: &RadialFunction, lambda: SpectralParameter, s: StripPoint) -> Result<C64> {
    let nu = check_division_lambda(lambda)?;
    let mu = ComplexDegree::new(s.value() - 1.0);
    let opts = TransformOptions::default().quad(f.l1_norm());
    let inner = QuadOptions::with_abs_tol(opts.abs_tol * 0.01);
    let (lo, hi) = f.support();
    // below the support both tails are the full integrals
    let (a0, b0) = tail_integrals(f, nu, 1.0, &inner)?;
    let h = |u: f64| -> Result<C64> {
        let x = u.max(1e-7).cosh();
        let (a, b) = if x <= lo { (a0, b0) } else { tail_integrals(f, nu, x, &inner)? };
        let v = legendre_p(nu, x)? * a - legendre_q(nu, x)? * b;
        Ok(0.5 * DIVISION_NORMALIZATION * v * legendre_p(mu, u.cosh())? * u.sinh())
    };
    // the integrand lives on [1, hi]; reuse the knot machinery of a
    // function supported there
    let carrier = match hi {
        Some(h) if h > 1.0 => RadialFunction::indicator(1.0, h)?,
        Some(_) => return Ok(C64::from(0.0)),
        None => RadialFunction::exp_decay(1.0)?,
    };
    let mut extra = f.knots();
    extra.push(lo);
    carrier.integrate_u_split(1.0, &extra, h, &opts)
}

/// `(f̂(λ) − f̂(s)) / (λ(1−λ) − s(1−s))`, outside `|Δe| < 1e−4`.
pub fn divided_difference(f: &RadialFunction, lambda: StripPoint, s: StripPoint) -> Result<C64> {
    let den = lambda.eigenvalue() - s.eigenvalue();
    if den.norm() < 1e-4 {
        return Err(Error::domain(
            "divided_difference",
            format!("|λ(1−λ) − s(1−s)| = {:.3e} is inside the removable window", den.norm()),
        ));
    }
    Ok((gelfand_transform(f, lambda)? - gelfand_transform(f, s)?) / den)
}

/// `(1/2π) ∫₀^{2π} P_ν(cosh u cosh v + sinh u sinh v cos θ) dθ` by the
/// periodic trapezoid rule, doubled until stable.
fn product_kernel(nu: ComplexDegree, u: f64, v: f64) -> Result<C64> {
    let (cc, ss) = (u.cosh() * v.cosh(), u.sinh() * v.sinh());
    let p = |th: f64| legendre_p(nu, (cc + ss * th.cos()).max(1.0));
    let mut m = 8usize;
    // trapezoid on [0, π] with m panels, endpoints halved
    let mut sum = 0.5 * (p(0.0)? + p(std::f64::consts::PI)?);
    for k in 1..m {
        sum += p(std::f64::consts::PI * k as f64 / m as f64)?;
    }
    let mut mean = sum / m as f64;
    while m < 4096 {
        let mut odd = C64::from(0.0);
        for k in (1..2 * m).step_by(2) {
            odd += p(std::f64::consts::PI * k as f64 / (2 * m) as f64)?;
        }
        sum += odd;
        m *= 2;
        let next = sum / m as f64;
        let done = (next - mean).norm() <= 1e-13 * next.norm().max(1.0);
        mean = next;
        if done {
            return Ok(mean);
        }
    }
    Err(Error::NonConvergence {
        what: "product kernel",
        estimate: 0.0,
    })
}

/// `¼ ∬ f(x) g(y) K_s(x, y) dx dy` with `K_s` the θ-mean of the product
/// formula; equals `f̂(s) ĝ(s)`.
pub fn convolve_transform(f: &RadialFunction, g: &RadialFunction, s: StripPoint) -> Result<C64> {
    let nu = ComplexDegree::new(s.value() - 1.0);
    let outer = QuadOptions::with_abs_tol(1e-9 * (1.0 + f.l1_norm() * g.l1_norm()));
    let inner = QuadOptions::with_abs_tol(outer.abs_tol * 0.1 / (1.0 + f.l1_norm()));
    f.integrate_u(
        1.0,
        |u| {
            let fu = f.eval_u(u)?;
            if fu == C64::from(0.0) {
                return Ok(fu);
            }
            let iv = g.integrate_u(
                1.0,
                |v| Ok(g.eval_u(v)? * product_kernel(nu, u, v)? * v.sinh()),
                &inner,
            )?;
            Ok(0.25 * fu * iv * u.sinh())
        },
        &outer,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn sp(re: f64, im: f64) -> StripPoint {
        StripPoint::new(c64(re, im)).unwrap()
    }

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn indicator_at_trivial_points() {
        let f = RadialFunction::indicator(1.0, 2.0).unwrap();
        assert!(close(gelfand_transform(&f, sp(1.0, 0.0)).unwrap(), c64(0.5, 0.0), 1e-12));
        assert!(close(gelfand_transform(&f, sp(0.0, 0.0)).unwrap(), c64(0.5, 0.0), 1e-12));
    }

    #[test]
    fn indicator_oracle() {
        let f = RadialFunction::indicator(1.0, 3.0).unwrap();
        let v = gelfand_transform(&f, sp(0.5, 1.0)).unwrap();
        assert!(close(v, c64(0.589066400367025067, 0.0), 1e-9), "{v}");
    }

    #[test]
    fn atom_transform() {
        let m = RadialMeasure::atom(0.5).unwrap();
        assert!(close(measure_gelfand(&m, sp(1.0, 0.0)).unwrap(), c64(1.0, 0.0), 1e-14));
        let v = measure_gelfand(&m, sp(0.5, 2.0)).unwrap();
        assert!(close(v, c64(0.217193207806578498, 0.0), 1e-12), "{v}");
        let z = RadialMeasure::atom(0.0).unwrap();
        assert!(close(measure_gelfand(&z, sp(0.3, 7.0)).unwrap(), c64(1.0, 0.0), 1e-14));
    }

    #[test]
    fn pairing_examples() {
        let one = BoundedRadialFunction::constant(c64(1.0, 0.0));
        let f = RadialFunction::indicator(1.0, 3.0).unwrap();
        assert!(close(pair(&f, &one).unwrap(), c64(1.0, 0.0), 1e-12));
        let zero = BoundedRadialFunction::constant(c64(0.0, 0.0));
        assert_eq!(pair(&f, &zero).unwrap(), c64(0.0, 0.0));
        let b = resolvent_kernel(SpectralParameter::new(c64(2.0, 0.0))).unwrap();
        assert!(close(pair(&b, &one).unwrap(), c64(0.5, 0.0), 1e-8));
    }

    #[test]
    fn kernel_examples() {
        let b = resolvent_kernel(SpectralParameter::new(c64(2.0, 0.0))).unwrap();
        let want = 2.0 * 3f64.ln() - 2.0;
        assert!(close(b.eval(2.0).unwrap(), c64(want, 0.0), 1e-13));
        let v = gelfand_transform(&b, sp(0.5, 0.3)).unwrap();
        assert!(close(v, c64(1.0 / 2.34, 0.0), 1e-8), "{v}");
        assert!(resolvent_kernel(SpectralParameter::new(c64(1.5, 0.0))).is_ok());
        assert!(matches!(
            resolvent_kernel(SpectralParameter::new(c64(0.5, 0.0))),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn resolvent_transform_examples() {
        let one = BoundedRadialFunction::constant(c64(1.0, 0.0));
        for l in [2.0, -1.0] {
            let v = resolvent_transform(&one, SpectralParameter::new(c64(l, 0.0))).unwrap();
            assert!(close(v, c64(0.5, 0.0), 1e-8), "{l}: {v}");
        }
        let zero = BoundedRadialFunction::constant(c64(0.0, 0.0));
        let v = resolvent_transform(&zero, SpectralParameter::new(c64(3.0, 1.0))).unwrap();
        assert_eq!(v, c64(0.0, 0.0));
    }

    #[test]
    fn t_lambda_pointwise() {
        let f = RadialFunction::indicator(1.0, 2.0).unwrap();
        let l = SpectralParameter::new(c64(0.3, 0.0));
        assert_eq!(t_lambda(&f, l, 2.5).unwrap(), c64(0.0, 0.0));
        let v = t_lambda(&f, l, 1.5).unwrap();
        assert!(close(v, c64(-7.29261147399034859e-2, 0.0), 1e-9), "{v}");
        assert!(t_lambda(&f, l, 1.0).is_err());
        assert!(t_lambda(&f, SpectralParameter::new(c64(0.5, 1.0)), 1.5).is_err());
        assert!(t_lambda(&f, SpectralParameter::new(c64(1.0, 1.0)), 1.5).is_err());
    }

    #[test]
    fn division_calibration() {
        let f = RadialFunction::indicator(1.0, 2.0).unwrap();
        let l = SpectralParameter::new(c64(0.3, 0.0));
        let s = sp(0.6, 0.4);
        let lhs = t_lambda_transform(&f, l, s).unwrap();
        let rhs = divided_difference(&f, l.as_strip_point().unwrap(), s).unwrap();
        assert!(close(lhs, rhs, 1e-5), "{lhs} vs {rhs}");
    }

    #[test]
    fn convolution_examples() {
        let f = RadialFunction::indicator(1.0, 2.0).unwrap();
        let g = RadialFunction::indicator(1.0, 3.0).unwrap();
        let v = convolve_transform(&f, &f, sp(1.0, 0.0)).unwrap();
        assert!(close(v, c64(0.25, 0.0), 1e-9), "{v}");
        let s = sp(0.5, 0.5);
        let v = convolve_transform(&f, &g, s).unwrap();
        let w = gelfand_transform(&f, s).unwrap() * gelfand_transform(&g, s).unwrap();
        assert!(close(v, w, 1e-6), "{v} vs {w}");
    }

    #[test]
    fn narrow_bump_is_approximate_identity() {
        let eps = 1e-3;
        let bump = RadialFunction::indicator(1.0, 1.0 + eps).unwrap().scaled(c64(2.0 / eps, 0.0));
        let f = RadialFunction::exp_decay(1.5).unwrap();
        let s = sp(0.3, 2.0);
        let v = convolve_transform(&f, &bump, s).unwrap();
        let w = gelfand_transform(&f, s).unwrap();
        assert!(close(v, w, 1e-3), "{v} vs {w}");
    }
}
