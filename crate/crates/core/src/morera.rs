//! The two-circle functions `J(r, s) = ₂F₁(2 − is, 3/2; 3; −4r(1−r)⁻²)`
//! and a zero finder for analytic functions on rectangles: argument-
//! principle counting, quadrisection and multiplicity-aware Newton polish.
//!
//! Scans certify a finite window only; reports carry their window and
//! tolerances.

use std::f64::consts::PI;

use crate::par::{self, Execution};
use crate::specfun::{hyp2f1, hyp2f1_euler};
use crate::{c64, Error, Result, C64};

/// `|F|` below this on a contour node aborts counting.
pub const BOUNDARY_ZERO: f64 = 1e-12;
/// Polish target for reported zeros.
pub const POLISH_TOL: f64 = 1e-9;
/// Step of the finite-difference derivative.
pub const FD_STEP: f64 = 1e-6;

fn check_radius(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::domain("morera_j", format!("need 0 < r < 1, got {r}")));
    }
    Ok(-4.0 * r / ((1.0 - r) * (1.0 - r)))
}

/// `J(r, s) = ₂F₁(2 − is, 3/2; 3; −4r/(1 − r)²)`.
pub fn morera_j(r: f64, s: C64) -> Result<C64> {
    let z = check_radius(r)?;
    hyp2f1(c64(2.0, 0.0) - C64::i() * s, c64(1.5, 0.0), c64(3.0, 0.0), c64(z, 0.0))
}

/// `J(r, s)` through Euler's transformation, for consistency checks.
pub fn morera_j_euler(r: f64, s: C64) -> Result<C64> {
    let z = check_radius(r)?;
    hyp2f1_euler(c64(2.0, 0.0) - C64::i() * s, c64(1.5, 0.0), c64(3.0, 0.0), c64(z, 0.0))
}

/// Closed axis-aligned rectangle with nonempty interior.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rectangle {
    lo: C64,
    hi: C64,
}

impl Rectangle {
    pub fn new(lo: C64, hi: C64) -> Result<Self> {
        let finite = lo.is_finite() && hi.is_finite();
        if !finite || !(hi.re > lo.re && hi.im > lo.im) {
            return Err(Error::domain("Rectangle", format!("corners {lo}, {hi} span no interior")));
        }
        Ok(Rectangle { lo, hi })
    }

    /// `[re0, re1] × [im0, im1]`.
    pub fn from_bounds(re0: f64, re1: f64, im0: f64, im1: f64) -> Result<Self> {
        Self::new(c64(re0, im0), c64(re1, im1))
    }

    pub fn lo(&self) -> C64 {
        self.lo
    }

    pub fn hi(&self) -> C64 {
        self.hi
    }

    pub fn center(&self) -> C64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn diameter(&self) -> f64 {
        (self.hi - self.lo).norm()
    }

    pub fn contains(&self, z: C64) -> bool {
        z.re >= self.lo.re && z.re <= self.hi.re && z.im >= self.lo.im && z.im <= self.hi.im
    }

    /// Counter-clockwise corners starting at `lo`.
    fn corners(&self) -> [C64; 4] {
        [self.lo, c64(self.hi.re, self.lo.im), self.hi, c64(self.lo.re, self.hi.im)]
    }

    /// Cuts at fractions `fx` of the width and `fy` of the height.
    pub fn quadrisect(&self, fx: f64, fy: f64) -> [Rectangle; 4] {
        let xm = self.lo.re + fx * (self.hi.re - self.lo.re);
        let ym = self.lo.im + fy * (self.hi.im - self.lo.im);
        let r = |a: f64, b: f64, c: f64, d: f64| Rectangle { lo: c64(a, c), hi: c64(b, d) };
        [
            r(self.lo.re, xm, self.lo.im, ym),
            r(xm, self.hi.re, self.lo.im, ym),
            r(self.lo.re, xm, ym, self.hi.im),
            r(xm, self.hi.re, ym, self.hi.im),
        ]
    }

    /// Left and right parts, cut at fraction `f` of the width.
    pub fn split_vertical(&self, f: f64) -> [Rectangle; 2] {
        let xm = self.lo.re + f * (self.hi.re - self.lo.re);
        [
            Rectangle { lo: self.lo, hi: c64(xm, self.hi.im) },
            Rectangle { lo: c64(xm, self.lo.im), hi: self.hi },
        ]
    }
}

fn eval_checked<F>(f: &F, z: C64) -> Result<C64>
where
    F: Fn(C64) -> Result<C64>,
{
    let v = f(z)?;
    if !(v.norm() >= BOUNDARY_ZERO) {
        return Err(Error::BoundaryZero { at: z });
    }
    Ok(v)
}

/// Phase change of `F` from `a` to `b`, bisecting until each step turns
/// by less than `π/2`.
fn edge_phase<F>(f: &F, a: C64, fa: C64, b: C64, fb: C64, depth: u32) -> Result<f64>
where
    F: Fn(C64) -> Result<C64>,
{
    let d = (fb / fa).arg();
    if d.abs() < PI / 2.0 {
        return Ok(d);
    }
    if depth == 0 {
        return Err(Error::Budget { what: "argument principle refinement" });
    }
    let m = 0.5 * (a + b);
    let fm = eval_checked(f, m)?;
    Ok(edge_phase(f, a, fa, m, fm, depth - 1)? + edge_phase(f, m, fm, b, fb, depth - 1)?)
}

/// Number of zeros of `F` inside `rect`, with multiplicity, from the
/// winding of `F` along the boundary sampled at `n_min` or more nodes.
pub fn argument_principle_count<F>(f: &F, rect: &Rectangle, n_min: usize) -> Result<i64>
where
    F: Fn(C64) -> Result<C64>,
{
    let per_edge = n_min.max(4).div_ceil(4);
    let c = rect.corners();
    let mut total = 0.0;
    let mut z0 = c[0];
    let mut f0 = eval_checked(f, z0)?;
    let start = f0;
    for e in 0..4 {
        let (a, b) = (c[e], c[(e + 1) % 4]);
        for k in 1..=per_edge {
            let z1 = if k == per_edge { b } else { a + (b - a) * (k as f64 / per_edge as f64) };
            let f1 = if e == 3 && k == per_edge { start } else { eval_checked(f, z1)? };
            total += edge_phase(f, z0, f0, z1, f1, 40)?;
            z0 = z1;
            f0 = f1;
        }
    }
    let w = total / (2.0 * PI);
    let n = w.round();
    if (w - n).abs() > 1e-3 {
        return Err(Error::NonConvergence { what: "winding number", estimate: (w - n).abs() });
    }
    Ok(n as i64)
}

/// A polished zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocatedZero {
    pub location: C64,
    /// `|F(location)|`.
    pub residual: f64,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroReport {
    pub rect: Rectangle,
    pub winding_count: i64,
    pub zeros: Vec<LocatedZero>,
    /// Multiplicities of the polished zeros add up to `winding_count`.
    pub refined: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocateOptions {
    /// Boundary nodes per rectangle before adaptive refinement.
    pub n_min: usize,
    pub max_depth: usize,
    pub exec: Execution,
}

impl Default for LocateOptions {
    fn default() -> Self {
        LocateOptions {
            n_min: 64,
            max_depth: 60,
            exec: Execution::default(),
        }
    }
}

/// Cut positions tried in turn; off-centre so that zeros on a symmetry
/// line of the window do not land on a cut.
const CUTS: [(f64, f64); 6] = [
    (0.4873, 0.5127),
    (0.5127, 0.4873),
    (0.45, 0.55),
    (0.55, 0.45),
    (0.4217, 0.5791),
    (0.6029, 0.3961),
];

/// Splits `cell` into counted children whose counts add up to `count`.
fn split_counted<F>(f: &F, cell: &Rectangle, count: i64, n_min: usize) -> Result<Vec<(Rectangle, i64)>>
where
    F: Fn(C64) -> Result<C64>,
{
    let mut last = Error::NonConvergence { what: "quadrisection", estimate: count as f64 };
    'cuts: for (fx, fy) in CUTS {
        let mut out = Vec::with_capacity(4);
        for q in cell.quadrisect(fx, fy) {
            match argument_principle_count(f, &q, n_min) {
                Ok(0) => {}
                Ok(c) => out.push((q, c)),
                Err(e @ (Error::BoundaryZero { .. } | Error::NonConvergence { .. })) => {
                    last = e;
                    continue 'cuts;
                }
                Err(e) => return Err(e),
            }
        }
        if out.iter().map(|(_, c)| c).sum::<i64>() == count {
            return Ok(out);
        }
    }
    Err(last)
}

/// `F'(z)` from central differences along `1` and `i`, averaged.
pub fn fd_derivative<F>(f: &F, z: C64) -> Result<C64>
where
    F: Fn(C64) -> Result<C64>,
{
    let h = FD_STEP;
    let dx = (f(z + h)? - f(z - h)?) / (2.0 * h);
    let dy = (f(z + C64::i() * h)? - f(z - C64::i() * h)?) / (c64(0.0, 2.0 * h));
    Ok(0.5 * (dx + dy))
}

/// Newton for a zero of multiplicity `m` from `z`.
fn polish<F>(f: &F, mut z: C64, m: i64) -> Result<C64>
where
    F: Fn(C64) -> Result<C64>,
{
    let mut fz = f(z)?;
    for _ in 0..60 {
        if fz == C64::from(0.0) {
            break;
        }
        let d = fd_derivative(f, z)?;
        if d == C64::from(0.0) || !d.is_finite() {
            break;
        }
        let step = m as f64 * fz / d;
        let zn = z - step;
        let fzn = f(zn)?;
        if fzn.norm() >= fz.norm() && fz.norm() < POLISH_TOL {
            break;
        }
        z = zn;
        fz = fzn;
        if step.norm() <= 1e-15 * z.norm().max(1.0) {
            break;
        }
    }
    Ok(z)
}

/// Counts, isolates and polishes the zeros of `F` in `rect`.
///
/// Cells with a nonzero count are quadrisected until their diameter drops
/// below `tol`; Newton then runs from each cell centre with the cell's
/// count as multiplicity. Zeros whose residual misses [`POLISH_TOL`] are
/// dropped, leaving `refined` false.
pub fn locate_zeros<F>(f: &F, rect: &Rectangle, tol: f64) -> Result<ZeroReport>
where
    F: Fn(C64) -> Result<C64> + Sync,
{
    locate_zeros_with(f, rect, tol, &LocateOptions::default())
}

pub fn locate_zeros_with<F>(f: &F, rect: &Rectangle, tol: f64, opts: &LocateOptions) -> Result<ZeroReport>
where
    F: Fn(C64) -> Result<C64> + Sync,
{
    if !(tol > 0.0) {
        return Err(Error::domain("locate_zeros", "tol must be positive"));
    }
    let total = argument_principle_count(f, rect, opts.n_min)?;
    let mut frontier = if total > 0 { vec![(*rect, total)] } else { Vec::new() };
    let mut leaves = Vec::new();
    let mut depth = 0;
    while !frontier.is_empty() {
        if depth == opts.max_depth {
            return Err(Error::Budget { what: "zero isolation depth" });
        }
        depth += 1;
        let (done, open): (Vec<_>, Vec<_>) = frontier.into_iter().partition(|(r, _)| r.diameter() < tol);
        leaves.extend(done);
        let children = par::try_map(opts.exec, &open, |(r, c)| split_counted(f, r, *c, opts.n_min))?;
        frontier = children.into_iter().flatten().collect();
    }
    let polished = par::try_map(opts.exec, &leaves, |(cell, m)| -> Result<LocatedZero> {
        let z = polish(f, cell.center(), *m)?;
        Ok(LocatedZero { location: z, residual: f(z)?.norm(), multiplicity: *m })
    })?;
    let mut zeros: Vec<LocatedZero> = Vec::new();
    for z in polished {
        if !(z.residual < POLISH_TOL) || !rect.contains(z.location) {
            continue;
        }
        match zeros.iter_mut().find(|w| (w.location - z.location).norm() < 1e-8) {
            Some(w) => w.multiplicity += z.multiplicity,
            None => zeros.push(z),
        }
    }
    zeros.sort_by(|a, b| a.location.re.total_cmp(&b.location.re).then(a.location.im.total_cmp(&b.location.im)));
    let found: i64 = zeros.iter().map(|z| z.multiplicity).sum();
    Ok(ZeroReport { rect: *rect, winding_count: total, refined: found == total, zeros })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommonZeroReport {
    pub r1: f64,
    pub r2: f64,
    pub window: Rectangle,
    pub match_tol: f64,
    pub cell_tol: f64,
    pub zeros1: ZeroReport,
    pub zeros2: ZeroReport,
    /// `(z₁, z₂, |z₁ − z₂|)` for matched zeros.
    pub common: Vec<(C64, C64, f64)>,
}

impl CommonZeroReport {
    pub fn verdict(&self) -> &'static str {
        if self.common.is_empty() {
            "no common zero found in window"
        } else {
            "common zero found in window"
        }
    }
}

/// Default cell diameter for zero isolation in scans.
pub const SCAN_CELL_TOL: f64 = 1e-3;

/// Zeros of `J(r₁, ·)` and `J(r₂, ·)` on `window`, matched within `match_tol`.
pub fn common_zero_scan(r1: f64, r2: f64, window: &Rectangle, match_tol: f64) -> Result<CommonZeroReport> {
    common_zero_scan_with(r1, r2, window, match_tol, &LocateOptions::default())
}

pub fn common_zero_scan_with(
    r1: f64,
    r2: f64,
    window: &Rectangle,
    match_tol: f64,
    opts: &LocateOptions,
) -> Result<CommonZeroReport> {
    check_radius(r1)?;
    check_radius(r2)?;
    if !(match_tol > 0.0) {
        return Err(Error::domain("common_zero_scan", "match_tol must be positive"));
    }
    let j1 = |s: C64| morera_j(r1, s);
    let j2 = |s: C64| morera_j(r2, s);
    let zeros1 = locate_zeros_with(&j1, window, SCAN_CELL_TOL, opts)?;
    let zeros2 = locate_zeros_with(&j2, window, SCAN_CELL_TOL, opts)?;
    let common = zeros1
        .zeros
        .iter()
        .filter_map(|a| {
            zeros2
                .zeros
                .iter()
                .map(|b| (a.location, b.location, (a.location - b.location).norm()))
                .filter(|(_, _, d)| *d <= match_tol)
                .min_by(|x, y| x.2.total_cmp(&y.2))
        })
        .collect();
    Ok(CommonZeroReport { r1, r2, window: *window, match_tol, cell_tol: SCAN_CELL_TOL, zeros1, zeros2, common })
}

/// [`common_zero_scan`] over a list of `(r₁, r₂)` pairs, in input order.
pub fn common_zero_batch(
    pairs: &[(f64, f64)],
    window: &Rectangle,
    match_tol: f64,
    exec: Execution,
) -> Vec<Result<CommonZeroReport>> {
    let inner = LocateOptions { exec: Execution::Sequential, ..Default::default() };
    par::map(exec, pairs, |&(a, b)| common_zero_scan_with(a, b, window, match_tol, &inner))
}
