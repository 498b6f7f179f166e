//! Machine-checkable diagnostics for the Wiener-type hypotheses: the decay
//! functionals `δ∞`, `δ₀`, hull scans over the strip, the `μ̂ ≠ 1`
//! condition and the `−x log(1 − μ̂(x))` chain for radial measures.
//!
//! A `limsup` cannot be computed from samples. Every diagnostic returns
//! the full curve and a proxy, the maximum over the 20% of nodes nearest
//! the limit point.

use crate::par::{self, Execution};
use crate::transform::{gelfand_transform, measure_gelfand, RadialFunction, RadialMeasure, StripPoint};
use crate::{c64, Error, Result};

/// Which end of an increasing grid the limit is taken at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitEnd {
    Lower,
    Upper,
}

/// Status of one diagnostic node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeFlag {
    Ok,
    /// The transform vanished to machine zero; the value is `−∞`.
    Vanished,
    /// `1 − μ̂(x) ≤ 0` numerically; the value is `−∞`.
    NonPositive,
    /// Evaluation failed with the given error code; the value is `−∞`.
    Failed(&'static str),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayDiagnostic {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub flags: Vec<NodeFlag>,
    pub limit: LimitEnd,
    /// Maximum of the finite values in the tail window, `−∞` if none.
    pub limsup_proxy: f64,
}

impl DecayDiagnostic {
    fn new(grid: Vec<f64>, cells: Vec<(f64, NodeFlag)>, limit: LimitEnd) -> Self {
        let (values, flags): (Vec<f64>, Vec<NodeFlag>) = cells.into_iter().unzip();
        let mut d = DecayDiagnostic {
            grid,
            values,
            flags,
            limit,
            limsup_proxy: f64::NEG_INFINITY,
        };
        d.limsup_proxy = d
            .tail_window()
            .map(|i| d.values[i])
            .filter(|v| v.is_finite())
            .fold(f64::NEG_INFINITY, f64::max);
        d
    }

    /// Indices of the 20% of nodes nearest the limit point (at least one).
    pub fn tail_window(&self) -> std::ops::Range<usize> {
        let n = self.grid.len();
        let k = (n as f64 * 0.2).ceil().max(1.0) as usize;
        match self.limit {
            LimitEnd::Upper => n.saturating_sub(k)..n,
            LimitEnd::Lower => 0..k.min(n),
        }
    }

    /// `−limsup`, the decay-rate estimate `δ`.
    pub fn delta_estimate(&self) -> f64 {
        -self.limsup_proxy
    }

    /// Value at the grid node closest to `x`.
    pub fn value_near(&self, x: f64) -> Option<f64> {
        let i = (0..self.grid.len()).min_by(|&a, &b| {
            (self.grid[a] - x).abs().total_cmp(&(self.grid[b] - x).abs())
        })?;
        Some(self.values[i])
    }

    pub fn all_flagged(&self) -> bool {
        self.flags.iter().all(|f| *f != NodeFlag::Ok)
    }
}

fn log_spaced(lo: f64, hi: f64, n: usize, include_hi: bool) -> Vec<f64> {
    let steps = if include_hi { n - 1 } else { n } as f64;
    (0..n).map(|i| lo * (hi / lo).powf(i as f64 / steps)).collect()
}

/// `weight · log|F|`, with the vanishing and failure flags.
fn weighted_log(weight: f64, value: Result<f64>) -> (f64, NodeFlag) {
    match value {
        Ok(m) if m > f64::MIN_POSITIVE && m.is_finite() => (weight * m.ln(), NodeFlag::Ok),
        Ok(_) => (f64::NEG_INFINITY, NodeFlag::Vanished),
        Err(e) => (f64::NEG_INFINITY, NodeFlag::Failed(e.code())),
    }
}

/// Samples `e^{−πt} log|f̂(½ + it)|` on `n` log-spaced `t ∈ [t_max/1000, t_max]`.
///
/// `δ∞(f)` is `−limsup` of this curve as `t → ∞`.
pub fn delta_inf_diagnostic(f: &RadialFunction, t_max: f64, n: usize) -> Result<DecayDiagnostic> {
    if !(t_max > 0.0 && t_max.is_finite()) || n < 8 {
        return Err(Error::domain("delta_inf", "need t_max > 0 and n ≥ 8"));
    }
    let grid = log_spaced(t_max * 1e-3, t_max, n, true);
    let cells = par::map(Execution::default(), &grid, |&t| {
        let v = StripPoint::new(c64(0.5, t)).and_then(|s| gelfand_transform(f, s));
        weighted_log((-std::f64::consts::PI * t).exp(), v.map(|z| z.norm()))
    });
    Ok(DecayDiagnostic::new(grid, cells, LimitEnd::Upper))
}

/// Samples `x log|f̂(x)|` on `n` log-spaced real `x ∈ [x_min, ½)`.
///
/// `δ₀(f)` is `−limsup` of this curve as `x → 0⁺`.
pub fn delta_zero_diagnostic(f: &RadialFunction, x_min: f64, n: usize) -> Result<DecayDiagnostic> {
    check_x_min(x_min, n)?;
    let grid = log_spaced(x_min, 0.5, n, false);
    let cells = par::map(Execution::default(), &grid, |&x| {
        let v = StripPoint::real(x).and_then(|s| gelfand_transform(f, s));
        weighted_log(x, v.map(|z| z.norm()))
    });
    Ok(DecayDiagnostic::new(grid, cells, LimitEnd::Lower))
}

fn check_x_min(x_min: f64, n: usize) -> Result<()> {
    if !(x_min > 0.0 && x_min < 0.5) || n < 2 {
        return Err(Error::domain("delta_zero", "need 0 < x_min < ½ and n ≥ 2"));
    }
    Ok(())
}

/// Grid geometry and execution for [`hull_scan_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HullOptions {
    pub im_max: f64,
    /// Scan all of `[0, 1] × [−im_max, im_max]` instead of the canonical
    /// half; reported points are still canonicalized.
    pub full_strip: bool,
    pub exec: Execution,
}

impl Default for HullOptions {
    fn default() -> Self {
        HullOptions {
            im_max: 10.0,
            full_strip: false,
            exec: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HullReport {
    pub grid: Vec<StripPoint>,
    /// `max_f |f̂(s)|` per grid point, `NaN` where evaluation failed.
    pub max_moduli: Vec<f64>,
    pub common_zero_points: Vec<StripPoint>,
    pub failures: usize,
    pub tol: f64,
}

/// Grid points `(Re, Im)` as integer steps of `½/(n−1)` and `im_max/(n−1)`.
fn hull_grid(n: usize, full: bool, conj_symmetric: bool) -> Vec<(i64, i64)> {
    let m = n as i64 - 1;
    let (re_hi, im_lo) = if full { (2 * m, -m) } else { (m, if conj_symmetric { 0 } else { -m }) };
    let mut pts = Vec::new();
    for k in im_lo..=m {
        for j in 0..=re_hi {
            // the critical line keeps Im ≥ 0 only
            if !full && j == m && k < 0 {
                continue;
            }
            pts.push((j, k));
        }
    }
    pts
}

/// Canonical representative of grid index `(j, k)` on the full-strip lattice.
fn canonical_index(n: usize, (j, k): (i64, i64), conj_symmetric: bool) -> (i64, i64) {
    let m = n as i64 - 1;
    let (j, k) = if j > m { (2 * m - j, -k) } else { (j, k) };
    if (j == m || conj_symmetric) && k < 0 {
        (j, -k)
    } else {
        (j, k)
    }
}

/// Points of the canonical strip where every `f̂` has modulus below `tol`.
pub fn hull_scan(fs: &[RadialFunction], grid_resolution: usize, tol: f64) -> Result<HullReport> {
    hull_scan_with(fs, grid_resolution, tol, &HullOptions::default())
}

pub fn hull_scan_with(
    fs: &[RadialFunction],
    grid_resolution: usize,
    tol: f64,
    opts: &HullOptions,
) -> Result<HullReport> {
    if fs.is_empty() || !(tol > 0.0) || grid_resolution < 2 || !(opts.im_max > 0.0) {
        return Err(Error::domain("hull_scan", "need functions, tol > 0, resolution ≥ 2, im_max > 0"));
    }
    let n = grid_resolution;
    let conj = fs.iter().all(|f| f.is_real_valued());
    let idx = hull_grid(n, opts.full_strip, conj);
    let (dr, di) = (0.5 / (n - 1) as f64, opts.im_max / (n - 1) as f64);
    let point = |(j, k): (i64, i64)| StripPoint::new(c64(j as f64 * dr, k as f64 * di));
    let moduli = par::map(opts.exec, &idx, |&jk| -> f64 {
        let Ok(s) = point(jk) else { return f64::NAN };
        let mut worst = 0.0f64;
        for f in fs {
            match gelfand_transform(f, s) {
                Ok(v) => worst = worst.max(v.norm()),
                Err(_) => return f64::NAN,
            }
        }
        worst
    });
    let grid: Vec<StripPoint> = idx.iter().map(|&jk| point(jk)).collect::<Result<_>>()?;
    let mut zeros: Vec<(i64, i64)> = idx
        .iter()
        .zip(&moduli)
        .filter(|(_, m)| **m < tol)
        .map(|(&jk, _)| canonical_index(n, jk, conj))
        .collect();
    zeros.sort_by_key(|&(j, k)| (k, j));
    zeros.dedup();
    Ok(HullReport {
        common_zero_points: zeros.into_iter().map(point).collect::<Result<_>>()?,
        failures: moduli.iter().filter(|m| m.is_nan()).count(),
        grid,
        max_moduli: moduli,
        tol,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Theorem2Report {
    pub total_mass: crate::C64,
    /// (i) `|μ(𝔻) − 1| ≤ 1e−10`.
    pub unit_mass: bool,
    /// (ii) an atom at `ζ = 0`; the hypothesis requires `false`.
    pub atom_at_zero: bool,
    /// (iii) minimum of `|μ̂(s) − 1|` over the canonical grid outside the
    /// 0.05-neighbourhood of `s = 0`, and where it is attained.
    pub min_distance_from_one: f64,
    pub argmin: Option<StripPoint>,
    pub separated: bool,
    /// `(x, |μ̂(x) − 1|)` along the real row of the grid.
    pub real_segment: Vec<(f64, f64)>,
    /// (iv) `x log|1 − μ̂(x)|` towards `x → 0`.
    pub decay: DecayDiagnostic,
    pub tol: f64,
}

impl Theorem2Report {
    pub fn passes(&self) -> bool {
        self.unit_mass && !self.atom_at_zero && self.separated
    }
}

const CORNER_RADIUS: f64 = 0.05;

/// Checks the hypotheses `μ(𝔻) = 1`, no atom at 0, `μ̂ ≠ 1` on the strip,
/// and reports the `x log|1 − μ̂(x)|` curve.
pub fn theorem2_hypotheses(mu: &RadialMeasure, grid_resolution: usize, tol: f64) -> Result<Theorem2Report> {
    if grid_resolution < 2 || !(tol > 0.0) {
        return Err(Error::domain("theorem2_hypotheses", "need resolution ≥ 2 and tol > 0"));
    }
    let n = grid_resolution;
    let conj = mu.is_positive();
    let idx = hull_grid(n, false, conj);
    let (dr, di) = (0.5 / (n - 1) as f64, 10.0 / (n - 1) as f64);
    let pts: Vec<StripPoint> = idx
        .iter()
        .map(|&(j, k)| StripPoint::new(c64(j as f64 * dr, k as f64 * di)))
        .collect::<Result<_>>()?;
    let dist = par::try_map(Execution::default(), &pts, |&s| {
        measure_gelfand(mu, s).map(|v| (v - 1.0).norm())
    })?;
    let mut min = f64::INFINITY;
    let mut argmin = None;
    let mut real_segment = Vec::new();
    for (s, d) in pts.iter().zip(&dist) {
        if s.value().im == 0.0 {
            real_segment.push((s.value().re, *d));
        }
        if s.value().norm() >= CORNER_RADIUS && *d < min {
            min = *d;
            argmin = Some(*s);
        }
    }
    let xs = log_spaced(1e-4, 0.5, 24, false);
    let cells = par::map(Execution::default(), &xs, |&x| {
        let v = StripPoint::real(x).and_then(|s| measure_gelfand(mu, s));
        weighted_log(x, v.map(|z| (1.0 - z).norm()))
    });
    let mass = mu.total_mass();
    Ok(Theorem2Report {
        total_mass: mass,
        unit_mass: (mass - 1.0).norm() <= 1e-10,
        atom_at_zero: mu.has_atom_at_zero(),
        min_distance_from_one: min,
        argmin,
        separated: min >= tol,
        real_segment,
        decay: DecayDiagnostic::new(xs, cells, LimitEnd::Lower),
        tol,
    })
}

/// The curve `−x log(1 − μ̂(x))` on `x_grid ⊂ (0, ½)`.
///
/// Nodes where `1 − μ̂(x) ≤ 0` or `μ̂(x)` is not real to `1e−9` are flagged
/// [`NodeFlag::NonPositive`].
pub fn corollary3_decay(mu: &RadialMeasure, x_grid: &[f64]) -> Result<DecayDiagnostic> {
    if x_grid.is_empty() || x_grid.iter().any(|&x| !(x > 0.0 && x < 0.5)) {
        return Err(Error::domain("corollary3_decay", "grid must lie in (0, ½)"));
    }
    let mut grid = x_grid.to_vec();
    grid.sort_by(f64::total_cmp);
    let cells = par::map(Execution::default(), &grid, |&x| {
        match StripPoint::real(x).and_then(|s| measure_gelfand(mu, s)) {
            Ok(v) if v.im.abs() <= 1e-9 && 1.0 - v.re > 0.0 => (-x * (1.0 - v.re).ln(), NodeFlag::Ok),
            Ok(_) => (f64::NEG_INFINITY, NodeFlag::NonPositive),
            Err(e) => (f64::NEG_INFINITY, NodeFlag::Failed(e.code())),
        }
    });
    Ok(DecayDiagnostic::new(grid, cells, LimitEnd::Lower))
}
