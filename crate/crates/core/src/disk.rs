//! The disk side: `SU(1,1)` acting by Möbius maps, circle averages, the
//! `μ`-mean-value operator, Poisson extension of trigonometric
//! polynomials, contour integrals over `g(γ_r)` and the growth bound
//! `|f(z)| ≤ c (1 − |z|²)⁻¹`.
//!
//! A hyperbolic radius `ζ` is the Euclidean circle radius `tanh ζ` and the
//! radial coordinate `x = cosh 2ζ`.

use std::f64::consts::PI;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::quad::QuadOptions;
use crate::transform::RadialMeasure;
use crate::{c64, Error, Result, C64};

/// `z ↦ (a z + b) / (b̄ z + ā)` with `|a|² − |b|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    a: C64,
    b: C64,
}

impl MobiusMap {
    /// Rescales `(a, b)` onto `|a|² − |b|² = 1`.
    pub fn new(a: C64, b: C64) -> Result<Self> {
        let d = a.norm_sqr() - b.norm_sqr();
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::domain("MobiusMap", format!("|a|² − |b|² = {d} must be positive")));
        }
        let k = d.sqrt().recip();
        Ok(MobiusMap { a: a * k, b: b * k })
    }

    pub fn identity() -> Self {
        MobiusMap { a: c64(1.0, 0.0), b: c64(0.0, 0.0) }
    }

    /// `z ↦ e^{iφ} z`.
    pub fn rotation(phi: f64) -> Self {
        MobiusMap { a: C64::from_polar(1.0, phi / 2.0), b: c64(0.0, 0.0) }
    }

    /// `a = cosh ζ`, `b = sinh ζ`: sends 0 to `tanh ζ`.
    pub fn boost(zeta: f64) -> Self {
        MobiusMap { a: c64(zeta.cosh(), 0.0), b: c64(zeta.sinh(), 0.0) }
    }

    /// The map sending 0 to `w`, `|w| < 1`.
    pub fn translation(w: C64) -> Result<Self> {
        check_disk("MobiusMap::translation", w)?;
        Self::new(c64(1.0, 0.0), w)
    }

    pub fn a(&self) -> C64 {
        self.a
    }

    pub fn b(&self) -> C64 {
        self.b
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        let (a, b, c, d) = (self.a, self.b, other.a, other.b);
        let na = a * c + b * d.conj();
        let nb = a * d + b * c.conj();
        // renormalize against drift; the determinant is 1 up to rounding
        let k = (na.norm_sqr() - nb.norm_sqr()).sqrt().recip();
        MobiusMap { a: na * k, b: nb * k }
    }

    pub fn inverse(&self) -> MobiusMap {
        MobiusMap { a: self.a.conj(), b: -self.b }
    }

    fn raw(&self, z: C64) -> C64 {
        (self.a * z + self.b) / (self.b.conj() * z + self.a.conj())
    }

    pub fn apply(&self, z: C64) -> Result<C64> {
        check_disk("mobius_apply", z)?;
        Ok(self.raw(z))
    }

    /// `g'(z) = 1 / (b̄ z + ā)²`.
    pub fn derivative(&self, z: C64) -> C64 {
        let d = self.b.conj() * z + self.a.conj();
        (d * d).inv()
    }

    /// `k_φ a_ζ k_θ` with `ζ ~ U(0, 2)` and uniform angles.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let phi = rng.gen_range(0.0..2.0 * PI);
        let zeta = rng.gen_range(0.0..2.0);
        let theta = rng.gen_range(0.0..2.0 * PI);
        Self::rotation(phi).compose(&Self::boost(zeta)).compose(&Self::rotation(theta))
    }
}

/// `count` random maps from a ChaCha8 stream seeded with `seed`.
pub fn random_mobius_maps(seed: u64, count: usize) -> Vec<MobiusMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| MobiusMap::random(&mut rng)).collect()
}

fn check_disk(function: &'static str, z: C64) -> Result<()> {
    if !(z.norm() < 1.0) {
        return Err(Error::domain(function, format!("|z| = {} is not < 1", z.norm())));
    }
    Ok(())
}

pub fn mobius_apply(g: &MobiusMap, z: C64) -> Result<C64> {
    g.apply(z)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiskTag {
    HolomorphicTest,
    HarmonicTest,
    Custom,
}

type DiskFn = dyn Fn(C64) -> C64 + Send + Sync;

/// A function on the open disk, shareable across threads.
#[derive(Clone)]
pub struct DiskFunction {
    name: String,
    tag: DiskTag,
    f: Arc<DiskFn>,
}

impl fmt::Debug for DiskFunction {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        fm.debug_struct("DiskFunction").field("name", &self.name).field("tag", &self.tag).finish()
    }
}

impl DiskFunction {
    pub fn new(name: impl Into<String>, tag: DiskTag, f: impl Fn(C64) -> C64 + Send + Sync + 'static) -> Self {
        DiskFunction { name: name.into(), tag, f: Arc::new(f) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tag(&self) -> DiskTag {
        self.tag
    }

    pub fn eval(&self, z: C64) -> Result<C64> {
        check_disk("DiskFunction", z)?;
        Ok((self.f)(z))
    }

    pub fn constant(c: C64) -> Self {
        Self::new(format!("const:{c}"), DiskTag::HolomorphicTest, move |_| c)
    }

    /// `Σ c_k z^k`.
    pub fn holomorphic_poly(coeffs: Vec<C64>) -> Self {
        let name = format!("holo:poly:{}", coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(":"));
        Self::new(name, DiskTag::HolomorphicTest, move |z| {
            coeffs.iter().rev().fold(C64::from(0.0), |acc, c| acc * z + c)
        })
    }

    pub fn conj_z() -> Self {
        Self::new("conjz", DiskTag::Custom, |z| z.conj())
    }

    /// `|z|²`, subharmonic.
    pub fn abs2() -> Self {
        Self::new("abs2", DiskTag::Custom, |z| C64::from(z.norm_sqr()))
    }

    /// `(1 − |z|²)⁻¹`, the extremal growth rate.
    pub fn inv_growth() -> Self {
        Self::new("invgrowth", DiskTag::Custom, |z| C64::from(1.0 / (1.0 - z.norm_sqr())))
    }

    pub fn poisson(b: BoundaryFunction) -> Self {
        let name = format!("poisson[{} terms]", b.coeffs.len());
        Self::new(name, DiskTag::HarmonicTest, move |z| b.extend_unchecked(z))
    }
}

/// A trigonometric polynomial `b(θ) = Σ c_k e^{ikθ}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryFunction {
    coeffs: Vec<(i64, C64)>,
}

impl BoundaryFunction {
    pub fn new(mut coeffs: Vec<(i64, C64)>) -> Self {
        coeffs.sort_by_key(|(k, _)| *k);
        BoundaryFunction { coeffs }
    }

    /// `cos kθ`.
    pub fn cos(k: i64) -> Self {
        if k == 0 {
            return Self::new(vec![(0, c64(1.0, 0.0))]);
        }
        Self::new(vec![(-k, c64(0.5, 0.0)), (k, c64(0.5, 0.0))])
    }

    /// Reads whitespace- or comma-separated `k re im` lines; `#` starts a comment.
    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let mut coeffs = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
            let bad = || Error::Parse(format!("{}:{}: expected `k re im`", path.display(), n + 1));
            if cols.len() != 3 {
                return Err(bad());
            }
            let k = cols[0].parse::<i64>().map_err(|_| bad())?;
            let re = cols[1].parse::<f64>().map_err(|_| bad())?;
            let im = cols[2].parse::<f64>().map_err(|_| bad())?;
            coeffs.push((k, c64(re, im)));
        }
        Ok(Self::new(coeffs))
    }

    pub fn coeffs(&self) -> &[(i64, C64)] {
        &self.coeffs
    }

    /// `c_{−k} = conj(c_k)` for every `k`.
    pub fn is_real(&self) -> bool {
        let get = |k: i64| {
            self.coeffs.iter().filter(|(j, _)| *j == k).map(|(_, c)| *c).sum::<C64>()
        };
        self.coeffs.iter().all(|(k, _)| (get(-*k) - get(*k).conj()).norm() <= 1e-15 * (1.0 + get(*k).norm()))
    }

    /// `Σ |c_k|`, a bound for the extension.
    pub fn bound(&self) -> f64 {
        self.coeffs.iter().map(|(_, c)| c.norm()).sum()
    }

    pub fn eval(&self, theta: f64) -> C64 {
        self.coeffs.iter().map(|(k, c)| c * C64::from_polar(1.0, *k as f64 * theta)).sum()
    }

    fn extend_unchecked(&self, z: C64) -> C64 {
        // z^k for k ≥ 0 and z̄^{|k|} for k < 0
        self.coeffs
            .iter()
            .map(|(k, c)| if *k >= 0 { c * z.powi(*k as i32) } else { c * z.conj().powi(-*k as i32) })
            .sum()
    }
}

/// `Σ c_k r^{|k|} e^{ikθ}` at `z = r e^{iθ}`.
pub fn poisson_extend(b: &BoundaryFunction, z: C64) -> Result<C64> {
    check_disk("poisson_extend", z)?;
    Ok(b.extend_unchecked(z))
}

/// Trapezoid mean of `f ∘ g` over the circle of radius `tanh ζ`.
pub fn circle_average(f: &DiskFunction, g: &MobiusMap, zeta: f64, n: usize) -> Result<C64> {
    if n < 16 || !(zeta >= 0.0 && zeta.is_finite()) {
        return Err(Error::domain("circle_average", "need n ≥ 16 and finite ζ ≥ 0"));
    }
    let r = zeta.tanh();
    let mut acc = C64::from(0.0);
    for k in 0..n {
        let w = C64::from_polar(r, 2.0 * PI * k as f64 / n as f64);
        acc += f.eval(g.apply(w)?)?;
    }
    Ok(acc / n as f64)
}

/// `∫ circle_average(f, g, ζ) dμ(ζ)`.
pub fn mu_average(f: &DiskFunction, mu: &RadialMeasure, g: &MobiusMap, n: usize) -> Result<C64> {
    let mut acc = C64::from(0.0);
    for (zeta, w) in mu.atoms() {
        acc += w * circle_average(f, g, *zeta, n)?;
    }
    if let Some(rho) = mu.density() {
        // dμ = ρ(x) ½dx with x = cosh u, ζ = u/2
        let opts = QuadOptions::with_abs_tol(1e-12 * (1.0 + rho.l1_norm()));
        acc += rho.integrate_u(1.0, |u| Ok(0.5 * rho.eval_u(u)? * circle_average(f, g, 0.5 * u, n)? * u.sinh()), &opts)?;
    }
    Ok(acc)
}

/// `max_g |∫ circle_average(f, g, ζ) dμ(ζ) − f(g·0)|`.
pub fn mu_mean_value_residual(f: &DiskFunction, mu: &RadialMeasure, gs: &[MobiusMap], n: usize) -> Result<f64> {
    let mut worst = 0.0f64;
    for g in gs {
        let lhs = mu_average(f, mu, g, n)?;
        worst = worst.max((lhs - f.eval(g.apply(C64::from(0.0))?)?).norm());
    }
    Ok(worst)
}

/// `∮ f(z) dz` over `θ ↦ g(r e^{iθ})`, periodic trapezoid with `n` nodes.
pub fn morera_contour_integral(f: &DiskFunction, g: &MobiusMap, r: f64, n: usize) -> Result<C64> {
    if !(r > 0.0 && r < 1.0) || n < 32 {
        return Err(Error::domain("morera_contour_integral", "need 0 < r < 1 and n ≥ 32"));
    }
    let mut acc = C64::from(0.0);
    for k in 0..n {
        let w = C64::from_polar(r, 2.0 * PI * k as f64 / n as f64);
        let dz = g.derivative(w) * C64::i() * w;
        acc += f.eval(g.apply(w)?)? * dz;
    }
    Ok(acc * (2.0 * PI / n as f64))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthVerdict {
    pub holds: bool,
    /// `max |f(z)| (1 − |z|²)` over the samples.
    pub max_weighted: f64,
    pub argmax: Option<C64>,
    pub c: f64,
}

/// Tests `|f(z)| (1 − |z|²) ≤ c` on every sample.
pub fn growth_check(f: &DiskFunction, c: f64, samples: &[C64]) -> Result<GrowthVerdict> {
    let mut best = (0.0f64, None);
    for &z in samples {
        let v = f.eval(z)?.norm() * (1.0 - z.norm_sqr());
        if best.1.is_none() || v > best.0 {
            best = (v, Some(z));
        }
    }
    Ok(GrowthVerdict { holds: best.0 <= c, max_weighted: best.0, argmax: best.1, c })
}
