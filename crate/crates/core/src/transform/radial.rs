use std::sync::Arc;

use crate::quad::{integrate, integrate_to_infinity, QuadOptions};
use crate::specfun::{legendre_p, legendre_q, ComplexDegree};
use crate::{Error, Result, C64};

/// Below this `u` the logarithmic singularity of `Q` at `x = 1` is
/// evaluated at `U_FLOOR` instead; `cosh u − 1` has no digits left there.
const U_FLOOR: f64 = 1e-7;

/// A closed-form or sampled building block of a [`RadialFunction`].
#[derive(Debug, Clone, PartialEq)]
pub enum Profile {
    /// `1_{[a, b]}(x)`.
    Indicator { a: f64, b: f64 },
    /// `e^{−α(x − 1)}`.
    ExpDecay { alpha: f64 },
    /// `2 Q_{λ−1}(x)`, stored with `Re λ > 1`.
    ResolventKernel { lambda: C64 },
    Sampled(Arc<SampledProfile>),
}

impl Profile {
    fn eval(&self, x: f64) -> Result<C64> {
        match self {
            Profile::Indicator { a, b } => Ok(C64::from(if x >= *a && x <= *b { 1.0 } else { 0.0 })),
            Profile::ExpDecay { alpha } => Ok(C64::from((-alpha * (x - 1.0)).exp())),
            Profile::ResolventKernel { lambda } => {
                Ok(2.0 * legendre_q(ComplexDegree::new(lambda - 1.0), x)?)
            }
            Profile::Sampled(p) => Ok(C64::from(p.eval(x))),
        }
    }

    fn eval_u(&self, u: f64) -> Result<C64> {
        match self {
            Profile::ResolventKernel { .. } => self.eval(u.max(U_FLOOR).cosh()),
            _ => self.eval(u.cosh()),
        }
    }

    fn support(&self) -> (f64, Option<f64>) {
        match self {
            Profile::Indicator { a, b } => (*a, Some(*b)),
            Profile::ExpDecay { .. } | Profile::ResolventKernel { .. } => (1.0, None),
            Profile::Sampled(p) => (p.x[0], Some(*p.x.last().unwrap())),
        }
    }

    fn breakpoints(&self, out: &mut Vec<f64>) {
        match self {
            Profile::Indicator { a, b } => out.extend([*a, *b]),
            Profile::Sampled(p) => out.extend(p.x.iter().copied()),
            _ => {}
        }
    }

    fn sup(&self) -> Option<f64> {
        match self {
            Profile::Indicator { .. } | Profile::ExpDecay { .. } => Some(1.0),
            Profile::ResolventKernel { .. } => None,
            Profile::Sampled(p) => Some(p.sup),
        }
    }

    fn is_real(&self) -> bool {
        match self {
            Profile::ResolventKernel { lambda } => lambda.im == 0.0,
            _ => true,
        }
    }
}

/// Values on strictly increasing nodes `x₀ < … < x_{n−1}` in `[1, ∞)`.
///
/// Piecewise cubic Lagrange interpolation between nodes, linear in the last
/// panel, zero below `x₀`, and the power tail `v_{n−1} (x/x_{n−1})^{−p}`
/// beyond the last node. The tail is not integrated; construction checks
/// that it carries at most `1e−12` of the L¹ mass.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledProfile {
    x: Vec<f64>,
    v: Vec<f64>,
    tail_exponent: f64,
    l1: f64,
    sup: f64,
}

impl SampledProfile {
    pub fn new(x: Vec<f64>, v: Vec<f64>, tail_exponent: f64) -> Result<Self> {
        let bad = |r: &str| Err(Error::domain("sampled", r.to_string()));
        if x.len() != v.len() || x.len() < 2 {
            return bad("need at least two (x, value) pairs");
        }
        if !(x[0] >= 1.0) || x.iter().chain(&v).any(|t| !t.is_finite()) {
            return bad("nodes must be finite and ≥ 1");
        }
        if x.windows(2).any(|w| w[1] <= w[0]) {
            return bad("nodes must be strictly increasing");
        }
        if !(tail_exponent > 1.0) {
            return bad("tail exponent must exceed 1");
        }
        let mut p = SampledProfile {
            x,
            v,
            tail_exponent,
            l1: 0.0,
            sup: 0.0,
        };
        let opts = QuadOptions::with_abs_tol(1e-13);
        for i in 0..p.x.len() - 1 {
            let r = integrate(|t| Ok(C64::from(p.eval(t).abs())), p.x[i], p.x[i + 1], &opts)?;
            p.l1 += r.value.re;
            p.sup = p.sup.max(p.panel_max(i));
        }
        let n = p.x.len();
        let tail = p.v[n - 1].abs() * p.x[n - 1] / (tail_exponent - 1.0);
        if tail > 1e-12 * p.l1 && tail > 0.0 {
            return Err(Error::domain(
                "sampled",
                format!("tail mass {tail:.3e} exceeds 1e-12 of the L1 norm {:.3e}", p.l1),
            ));
        }
        Ok(p)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.x
    }

    pub fn values(&self) -> &[f64] {
        &self.v
    }

    pub fn tail_exponent(&self) -> f64 {
        self.tail_exponent
    }

    fn stencil(&self, i: usize) -> std::ops::Range<usize> {
        let n = self.x.len();
        if n < 4 || i + 2 == n {
            i..i + 2
        } else {
            let j = i.saturating_sub(1).min(n - 4);
            j..j + 4
        }
    }

    fn lagrange(&self, idx: std::ops::Range<usize>, t: f64) -> f64 {
        let mut acc = 0.0;
        for j in idx.clone() {
            let mut w = self.v[j];
            for k in idx.clone() {
                if k != j {
                    w *= (t - self.x[k]) / (self.x[j] - self.x[k]);
                }
            }
            acc += w;
        }
        acc
    }

    pub fn eval(&self, t: f64) -> f64 {
        let n = self.x.len();
        if t < self.x[0] {
            return 0.0;
        }
        if t > self.x[n - 1] {
            return self.v[n - 1] * (t / self.x[n - 1]).powf(-self.tail_exponent);
        }
        let i = match self.x.partition_point(|&xi| xi <= t) {
            0 => 0,
            k => (k - 1).min(n - 2),
        };
        self.lagrange(self.stencil(i), t)
    }

    /// Maximum of `|interpolant|` on panel `i`, from the endpoints and the
    /// critical points of the cubic.
    fn panel_max(&self, i: usize) -> f64 {
        let (a, b) = (self.x[i], self.x[i + 1]);
        let idx = self.stencil(i);
        let mut m = self.v[i].abs().max(self.v[i + 1].abs());
        if idx.len() == 4 {
            let y: Vec<f64> = (0..4)
                .map(|k| self.lagrange(idx.clone(), a + (b - a) * k as f64 / 3.0))
                .collect();
            let d1 = y[1] - y[0];
            let d2 = y[2] - 2.0 * y[1] + y[0];
            let d3 = y[3] - 3.0 * y[2] + 3.0 * y[1] - y[0];
            // p(k) = y0 + a1 k + a2 k² + a3 k³ for k ∈ [0, 3]
            let a3 = d3 / 6.0;
            let a2 = d2 / 2.0 - d3 / 2.0;
            let a1 = d1 - d2 / 2.0 + d3 / 3.0;
            let mut roots = Vec::new();
            if a3.abs() > 1e-300 {
                let disc = 4.0 * a2 * a2 - 12.0 * a3 * a1;
                if disc >= 0.0 {
                    let sq = disc.sqrt();
                    roots.push((-2.0 * a2 + sq) / (6.0 * a3));
                    roots.push((-2.0 * a2 - sq) / (6.0 * a3));
                }
            } else if a2.abs() > 1e-300 {
                roots.push(-a1 / (2.0 * a2));
            }
            for k in roots {
                if (0.0..=3.0).contains(&k) {
                    m = m.max(self.lagrange(idx.clone(), a + (b - a) * k / 3.0).abs());
                }
            }
        }
        m * (1.0 + 1e-14)
    }
}

/// Finite complex combination `Σ c_k φ_k` of [`Profile`]s, immutable after
/// construction, with its L¹ norm `∫₁^∞ |f| dx` cached.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction {
    terms: Vec<(C64, Profile)>,
    l1_norm: f64,
}

impl RadialFunction {
    pub fn indicator(a: f64, b: f64) -> Result<Self> {
        if !(a >= 1.0 && a < b && b.is_finite()) {
            return Err(Error::domain("indicator", format!("need 1 ≤ a < b < ∞, got [{a}, {b}]")));
        }
        Ok(Self::single(Profile::Indicator { a, b }, b - a))
    }

    pub fn exp_decay(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::domain("exp_decay", format!("need α > 0, got {alpha}")));
        }
        Ok(Self::single(Profile::ExpDecay { alpha }, 1.0 / alpha))
    }

    pub fn sampled(profile: SampledProfile) -> Self {
        let l1 = profile.l1;
        Self::single(Profile::Sampled(Arc::new(profile)), l1)
    }

    /// `2Q_{λ−1}` for `Re λ > 1`; callers reflect `λ` first.
    pub(crate) fn kernel(lambda: C64) -> Result<Self> {
        let mut f = Self::single(Profile::ResolventKernel { lambda }, 0.0);
        f.l1_norm = f.abs_integral()?;
        Ok(f)
    }

    fn single(p: Profile, l1: f64) -> Self {
        RadialFunction {
            terms: vec![(C64::from(1.0), p)],
            l1_norm: l1,
        }
    }

    /// `Σ c_k f_k`; the L¹ norm is recomputed by quadrature.
    pub fn combine(parts: &[(C64, &RadialFunction)]) -> Result<Self> {
        let terms: Vec<(C64, Profile)> = parts
            .iter()
            .flat_map(|(c, f)| f.terms.iter().map(move |(d, p)| (c * d, p.clone())))
            .filter(|(c, _)| *c != C64::from(0.0))
            .collect();
        let mut f = RadialFunction { terms, l1_norm: 0.0 };
        f.l1_norm = match parts {
            _ if f.terms.is_empty() => 0.0,
            [(c, g)] => c.norm() * g.l1_norm,
            _ => f.abs_integral()?,
        };
        Ok(f)
    }

    pub fn scaled(&self, c: C64) -> Self {
        RadialFunction {
            terms: self.terms.iter().map(|(d, p)| (c * d, p.clone())).collect(),
            l1_norm: c.norm() * self.l1_norm,
        }
    }

    pub fn terms(&self) -> &[(C64, Profile)] {
        &self.terms
    }

    pub fn l1_norm(&self) -> f64 {
        self.l1_norm
    }

    pub fn is_real_valued(&self) -> bool {
        self.terms.iter().all(|(c, p)| c.im == 0.0 && p.is_real())
    }

    pub fn eval(&self, x: f64) -> Result<C64> {
        self.terms.iter().try_fold(C64::from(0.0), |acc, (c, p)| Ok(acc + c * p.eval(x)?))
    }

    /// `f(cosh u)`, with the kernel singularity at `u = 0` floored.
    pub fn eval_u(&self, u: f64) -> Result<C64> {
        self.terms.iter().try_fold(C64::from(0.0), |acc, (c, p)| Ok(acc + c * p.eval_u(u)?))
    }

    /// Smallest `x` of the support and the largest, if bounded.
    pub fn support(&self) -> (f64, Option<f64>) {
        let mut lo = f64::INFINITY;
        let mut hi = Some(1.0f64);
        for (_, p) in &self.terms {
            let (a, b) = p.support();
            lo = lo.min(a);
            hi = match (hi, b) {
                (Some(h), Some(b)) => Some(h.max(b)),
                _ => None,
            };
        }
        if self.terms.is_empty() {
            (1.0, Some(1.0))
        } else {
            (lo, hi)
        }
    }

    /// Upper bound of `|f|`, `None` when a term is unbounded.
    pub(crate) fn sup_bound(&self) -> Option<f64> {
        self.terms
            .iter()
            .try_fold(0.0, |acc, (c, p)| p.sup().map(|s| acc + c.norm() * s))
    }

    /// `∫ h(u) du` over the support of `f` intersected with `x ≥ x_start`,
    /// split at the kinks of `f`.
    pub(crate) fn integrate_u<H>(&self, x_start: f64, h: H, opts: &QuadOptions) -> Result<C64>
    where
        H: FnMut(f64) -> Result<C64>,
    {
        self.integrate_u_split(x_start, &[], h, opts)
    }

    /// As [`RadialFunction::integrate_u`], also splitting at `extra` knots.
    pub(crate) fn integrate_u_split<H>(
        &self,
        x_start: f64,
        extra: &[f64],
        mut h: H,
        opts: &QuadOptions,
    ) -> Result<C64>
    where
        H: FnMut(f64) -> Result<C64>,
    {
        let (lo, hi) = self.support();
        let lo = lo.max(x_start);
        if let Some(hi) = hi {
            if hi <= lo {
                return Ok(C64::from(0.0));
            }
        }
        let mut knots = self.knots();
        knots.extend_from_slice(extra);
        knots.push(lo);
        if let Some(hi) = hi {
            knots.push(hi);
        }
        knots.retain(|&k| k >= lo && hi.is_none_or(|h| k <= h));
        knots.sort_by(f64::total_cmp);
        knots.dedup();
        let us: Vec<f64> = knots.iter().map(|k| k.acosh()).collect();
        let mut sub = *opts;
        sub.abs_tol = opts.abs_tol / us.len().max(1) as f64;
        let mut total = C64::from(0.0);
        for w in us.windows(2) {
            total += integrate(&mut h, w[0], w[1], &sub)?.value;
        }
        if hi.is_none() {
            total += integrate_to_infinity(&mut h, *us.last().unwrap(), &sub)?.value;
        }
        Ok(total)
    }

    pub(crate) fn knots(&self) -> Vec<f64> {
        let mut knots = Vec::new();
        for (_, p) in &self.terms {
            p.breakpoints(&mut knots);
        }
        knots
    }

    fn abs_integral(&self) -> Result<f64> {
        let opts = QuadOptions::with_abs_tol(1e-11);
        let v = self.integrate_u(1.0, |u| Ok(C64::from(self.eval_u(u)?.norm() * u.sinh())), &opts)?;
        Ok(v.re)
    }
}

/// An element of `L∞(G//K)`: a constant or a bounded [`RadialFunction`].
#[derive(Debug, Clone, PartialEq)]
pub enum BoundedRadialFunction {
    Constant(C64),
    Radial { f: RadialFunction, sup_norm: f64 },
}

impl BoundedRadialFunction {
    pub fn constant(c: C64) -> Self {
        BoundedRadialFunction::Constant(c)
    }

    pub fn from_radial(f: RadialFunction) -> Result<Self> {
        let sup_norm = f
            .sup_bound()
            .ok_or_else(|| Error::domain("bounded", "resolvent kernels are unbounded at x = 1"))?;
        Ok(BoundedRadialFunction::Radial { f, sup_norm })
    }

    pub fn sup_norm(&self) -> f64 {
        match self {
            BoundedRadialFunction::Constant(c) => c.norm(),
            BoundedRadialFunction::Radial { sup_norm, .. } => *sup_norm,
        }
    }

    pub fn eval(&self, x: f64) -> Result<C64> {
        match self {
            BoundedRadialFunction::Constant(c) => Ok(*c),
            BoundedRadialFunction::Radial { f, .. } => f.eval(x),
        }
    }

    pub(crate) fn eval_u(&self, u: f64) -> Result<C64> {
        match self {
            BoundedRadialFunction::Constant(c) => Ok(*c),
            BoundedRadialFunction::Radial { f, .. } => f.eval_u(u),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            BoundedRadialFunction::Constant(c) => *c == C64::from(0.0),
            BoundedRadialFunction::Radial { f, .. } => f.terms.is_empty(),
        }
    }
}

/// A finite radial measure: atoms at `ζ_k ≥ 0` plus an optional density.
///
/// The density is a [`RadialFunction`] `ρ` in the `x = cosh 2ζ` coordinate,
/// read as `dμ = ρ(x) · ½ dx`, so its mass is `ρ̂(1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialMeasure {
    atoms: Vec<(f64, C64)>,
    density: Option<RadialFunction>,
    total_mass: C64,
}

impl RadialMeasure {
    pub fn new(atoms: Vec<(f64, C64)>, density: Option<RadialFunction>) -> Result<Self> {
        if atoms.iter().any(|(z, w)| !(*z >= 0.0 && z.is_finite()) || !w.is_finite()) {
            return Err(Error::domain("RadialMeasure", "atoms need finite ζ ≥ 0"));
        }
        let mut mass: C64 = atoms.iter().map(|(_, w)| w).sum();
        if let Some(rho) = &density {
            let opts = QuadOptions::with_abs_tol(1e-13 * (1.0 + rho.l1_norm()));
            mass += rho.integrate_u(1.0, |u| Ok(0.5 * rho.eval_u(u)? * u.sinh()), &opts)?;
        }
        Ok(RadialMeasure {
            atoms,
            density,
            total_mass: mass,
        })
    }

    /// Unit point mass at `ζ`.
    pub fn atom(zeta: f64) -> Result<Self> {
        Self::new(vec![(zeta, C64::from(1.0))], None)
    }

    pub fn atoms(&self) -> &[(f64, C64)] {
        &self.atoms
    }

    pub fn density(&self) -> Option<&RadialFunction> {
        self.density.as_ref()
    }

    pub fn total_mass(&self) -> C64 {
        self.total_mass
    }

    pub fn has_atom_at_zero(&self) -> bool {
        self.atoms.iter().any(|(z, w)| *z < 1e-12 && *w != C64::from(0.0))
    }

    /// Total variation `Σ|w_k| + ½∫|ρ|`.
    pub fn total_variation(&self) -> f64 {
        let a: f64 = self.atoms.iter().map(|(_, w)| w.norm()).sum();
        a + self.density.as_ref().map_or(0.0, |r| 0.5 * r.l1_norm())
    }

    /// All weights real and nonnegative, density real.
    pub fn is_positive(&self) -> bool {
        self.atoms.iter().all(|(_, w)| w.im == 0.0 && w.re >= 0.0)
            && self.density.as_ref().is_none_or(|r| r.is_real_valued())
    }

    /// Largest `ζ` carrying mass, `None` for an unbounded density.
    pub fn support_radius(&self) -> Option<f64> {
        let za = self.atoms.iter().map(|(z, _)| *z).fold(0.0, f64::max);
        match &self.density {
            None => Some(za),
            Some(r) => r.support().1.map(|x| za.max(0.5 * x.acosh())),
        }
    }

    pub(crate) fn atom_sum(&self, s_minus_one: C64) -> Result<C64> {
        let nu = ComplexDegree::new(s_minus_one);
        self.atoms.iter().try_fold(C64::from(0.0), |acc, (z, w)| {
            Ok(acc + w * legendre_p(nu, (2.0 * z).cosh())?)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn indicator_validation() {
        assert!(RadialFunction::indicator(0.5, 2.0).is_err());
        assert!(RadialFunction::indicator(2.0, 2.0).is_err());
        assert_eq!(RadialFunction::indicator(1.0, 3.0).unwrap().l1_norm(), 2.0);
    }

    #[test]
    fn combination_norm_counts_cancellation() {
        let a = RadialFunction::indicator(1.0, 3.0).unwrap();
        let b = RadialFunction::indicator(2.0, 3.0).unwrap();
        let d = RadialFunction::combine(&[(c64(1.0, 0.0), &a), (c64(-1.0, 0.0), &b)]).unwrap();
        assert!((d.l1_norm() - 1.0).abs() < 1e-10);
        assert_eq!(d.eval(2.5).unwrap(), c64(0.0, 0.0));
    }

    #[test]
    fn sampled_interpolates_cubics_exactly() {
        let x: Vec<f64> = (0..40).map(|i| 1.0 + 0.1 * i as f64).collect();
        let mut v: Vec<f64> = x.iter().map(|t| (t - 1.0) * (4.9 - t) * (t - 2.2)).collect();
        *v.last_mut().unwrap() = 0.0;
        let p = SampledProfile::new(x, v, 3.0).unwrap();
        for &t in &[1.05, 2.37, 4.11] {
            let want = (t - 1.0) * (4.9 - t) * (t - 2.2);
            assert!((p.eval(t) - want).abs() < 1e-12);
        }
        assert!(p.sup >= p.eval(1.7).abs());
    }

    #[test]
    fn sampled_rejects_heavy_tail() {
        let x = vec![1.0, 2.0, 3.0, 4.0];
        let v = vec![1.0, 1.0, 1.0, 1.0];
        assert!(matches!(SampledProfile::new(x, v, 2.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn measure_mass_and_atoms() {
        let rho = RadialFunction::indicator(1.0, 3.0).unwrap().scaled(c64(0.25, 0.0));
        let m = RadialMeasure::new(vec![(0.0, c64(0.5, 0.0))], Some(rho)).unwrap();
        assert!((m.total_mass() - c64(0.75, 0.0)).norm() < 1e-12);
        assert!(m.has_atom_at_zero());
    }

    #[test]
    fn bounded_rejects_kernel() {
        let k = RadialFunction::kernel(c64(2.0, 0.0)).unwrap();
        assert!(BoundedRadialFunction::from_radial(k).is_err());
    }
}
