//! Gauss hypergeometric function `₂F₁(a, b; c; z)` on the principal branch.
//!
//! Evaluation picks one of six representations (the defining series and
//! the five classical linear transformations) by estimating, for every
//! candidate whose expansion variable satisfies `|ζ| ≤ 0.9`, how many terms
//! its series needs and how large the intermediate terms get. Connection
//! formulas that degenerate when `c − a − b` or `a − b` is an integer are
//! evaluated as the mean over a small circle in `a`, which is exact for the
//! analytic dependence on `a` up to `ρ^M`.

use std::f64::consts::{LN_10, PI};

use super::gamma::{cpow as pow, gamma_ratio, is_nonpositive_integer};
use super::EPS;
use crate::{c64, Error, Result, C64};

const MAX_TERMS: usize = 20_000;
/// Largest `|ζ|` for which a series is considered.
const MAX_EXPANSION_MODULUS: f64 = 0.9;
/// Radius of the perturbation circle in `a` for degenerate connections.
const PERTURB_RADIUS: f64 = 0.05;
const PERTURB_POINTS: usize = 16;
/// Polynomial cases up to this degree are summed exactly.
const MAX_POLY_DEGREE: f64 = 2000.0;

/// Representation used to evaluate `₂F₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transform {
    /// Defining power series in `z`.
    Direct,
    /// `(1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1))`.
    Pfaff,
    /// Connection around `z = 1`, variable `1 − z`.
    OneMinus,
    /// Connection around `z = ∞`, variable `1/z`.
    Inverse,
    /// Connection around `z = ∞`, variable `1/(1 − z)`.
    InvOneMinus,
    /// Connection around `z = 1`, variable `1 − 1/z`.
    OneMinusInv,
}

impl Transform {
    pub const ALL: [Transform; 6] = [
        Transform::Direct,
        Transform::Pfaff,
        Transform::OneMinus,
        Transform::Inverse,
        Transform::InvOneMinus,
        Transform::OneMinusInv,
    ];

    /// Expansion variable of the representation.
    pub fn variable(self, z: C64) -> C64 {
        let one = c64(1.0, 0.0);
        match self {
            Transform::Direct => z,
            Transform::Pfaff => z / (z - 1.0),
            Transform::OneMinus => one - z,
            Transform::Inverse => one / z,
            Transform::InvOneMinus => one / (one - z),
            Transform::OneMinusInv => one - one / z,
        }
    }

    fn is_valid_for(self, z: C64) -> bool {
        match self {
            // |arg z| < π is required for the z^{−a} factors.
            Transform::OneMinusInv => z.re > 0.0,
            _ => true,
        }
    }

    /// The quantity whose integrality makes the connection degenerate.
    fn degeneracy(self, a: C64, b: C64, c: C64) -> Option<C64> {
        match self {
            Transform::Direct | Transform::Pfaff => None,
            Transform::OneMinus | Transform::OneMinusInv => Some(c - a - b),
            Transform::Inverse | Transform::InvOneMinus => Some(a - b),
        }
    }
}

fn near_integer(w: C64, within: f64) -> bool {
    (w - c64(w.re.round(), 0.0)).norm() < within
}

fn check_args(a: C64, b: C64, c: C64, z: C64) -> Result<()> {
    let _ = (a, b);
    if is_nonpositive_integer(c) {
        return Err(Error::Pole {
            function: "hyp2f1",
            at: c,
        });
    }
    if z.im == 0.0 && z.re >= 1.0 {
        return Err(Error::BranchCut {
            function: "hyp2f1",
            at: z,
        });
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain("hyp2f1", format!("non-finite argument {z}")));
    }
    Ok(())
}

/// Defining power series; requires `|z| < 1` unless the series terminates.
pub fn hyp2f1_series(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    check_args(a, b, c, z)?;
    series(a, b, c, z)
}

fn series(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    let mut sum = c64(1.0, 0.0);
    let mut term = c64(1.0, 0.0);
    let mut small = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let den = (c + nf) * (nf + 1.0);
        if den.norm() == 0.0 {
            return Err(Error::Pole {
                function: "hyp2f1",
                at: c,
            });
        }
        term *= (a + nf) * (b + nf) / den * z;
        if term.norm() == 0.0 {
            return Ok(sum);
        }
        sum += term;
        if term.norm() <= EPS * sum.norm() {
            small += 1;
            if small >= 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence {
        what: "hyp2f1 series",
        estimate: term.norm() / sum.norm(),
    })
}

/// Estimated cost of a series: (digits lost to the largest term, term count).
fn series_cost(a: C64, b: C64, c: C64, z: C64) -> (f64, usize) {
    let zn = z.norm();
    let mut lm = 0.0f64;
    let mut peak = 0.0f64;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let num = (a + nf).norm() * (b + nf).norm();
        if num == 0.0 || zn == 0.0 {
            return (peak / LN_10, n);
        }
        let r = num / ((c + nf).norm().max(1e-300) * (nf + 1.0)) * zn;
        lm += r.ln();
        peak = peak.max(lm);
        if r < 1.0 && lm < peak - 37.0 {
            return (peak / LN_10, n);
        }
    }
    (peak / LN_10, usize::MAX)
}

/// The series (parameters and variable) a representation sums.
fn component_series(t: Transform, a: C64, b: C64, c: C64, z: C64) -> Vec<[C64; 4]> {
    let zeta = t.variable(z);
    match t {
        Transform::Direct => vec![[a, b, c, z]],
        Transform::Pfaff => vec![pfaff_params(a, b, c, z)],
        Transform::OneMinus => vec![
            [a, b, a + b - c + 1.0, zeta],
            [c - a, c - b, c - a - b + 1.0, zeta],
        ],
        Transform::Inverse => vec![
            [a, a - c + 1.0, a - b + 1.0, zeta],
            [b, b - c + 1.0, b - a + 1.0, zeta],
        ],
        Transform::InvOneMinus => vec![[a, c - b, a - b + 1.0, zeta], [b, c - a, b - a + 1.0, zeta]],
        Transform::OneMinusInv => vec![
            [a, a - c + 1.0, a + b - c + 1.0, zeta],
            [c - a, 1.0 - a, c - a - b + 1.0, zeta],
        ],
    }
}

/// Parameters of the cheaper of the two Pfaff variants, as `[p, q, c, w]`.
fn pfaff_params(a: C64, b: C64, c: C64, z: C64) -> [C64; 4] {
    let w = z / (z - 1.0);
    let (pa, na) = series_cost(a, c - b, c, w);
    let (pb, nb) = series_cost(b, c - a, c, w);
    if score(pa, na, false) <= score(pb, nb, false) {
        [a, c - b, c, w]
    } else {
        [b, c - a, c, w]
    }
}

fn score(digits: f64, terms: usize, perturbed: bool) -> f64 {
    if terms == usize::MAX {
        return f64::INFINITY;
    }
    let work = if perturbed {
        (terms * PERTURB_POINTS) as f64
    } else {
        terms as f64
    };
    digits + work / 100.0
}

/// Picks the representation with the best estimated cost.
fn select(a: C64, b: C64, c: C64, z: C64) -> Option<Transform> {
    let mut best: Option<(f64, Transform)> = None;
    for t in Transform::ALL {
        if !t.is_valid_for(z) || t.variable(z).norm() > MAX_EXPANSION_MODULUS {
            continue;
        }
        let perturbed = t
            .degeneracy(a, b, c)
            .is_some_and(|d| near_integer(d, PERTURB_RADIUS / 2.0));
        let mut digits = 0.0f64;
        let mut terms = 0usize;
        for [p, q, r, zeta] in component_series(t, a, b, c, z) {
            let (d, n) = series_cost(p, q, r, zeta);
            digits = digits.max(d);
            terms = terms.saturating_add(n);
        }
        let s = score(digits, terms, perturbed);
        if best.is_none_or(|(bs, _)| s < bs) {
            best = Some((s, t));
        }
    }
    best.map(|(_, t)| t)
}

/// Evaluates one representation without degeneracy handling.
fn eval_raw(t: Transform, a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    let one = c64(1.0, 0.0);
    let zeta = t.variable(z);
    match t {
        Transform::Direct => series(a, b, c, z),
        Transform::Pfaff => {
            let [p, q, r, w] = pfaff_params(a, b, c, z);
            Ok(pow(one - z, -p) * series(p, q, r, w)?)
        }
        Transform::OneMinus => {
            let s = c - a - b;
            let k1 = gamma_ratio(&[c, s], &[c - a, c - b])?;
            let k2 = gamma_ratio(&[c, -s], &[a, b])?;
            let mut v = c64(0.0, 0.0);
            if k1.norm() != 0.0 {
                v += k1 * series(a, b, one - s, zeta)?;
            }
            if k2.norm() != 0.0 {
                v += k2 * pow(zeta, s) * series(c - a, c - b, s + 1.0, zeta)?;
            }
            Ok(v)
        }
        Transform::Inverse | Transform::InvOneMinus => {
            let k1 = gamma_ratio(&[c, b - a], &[b, c - a])?;
            let k2 = gamma_ratio(&[c, a - b], &[a, c - b])?;
            let (base, s1, s2) = if t == Transform::Inverse {
                (
                    -z,
                    [a, a - c + 1.0, a - b + 1.0],
                    [b, b - c + 1.0, b - a + 1.0],
                )
            } else {
                (one - z, [a, c - b, a - b + 1.0], [b, c - a, b - a + 1.0])
            };
            let mut v = c64(0.0, 0.0);
            if k1.norm() != 0.0 {
                v += k1 * pow(base, -a) * series(s1[0], s1[1], s1[2], zeta)?;
            }
            if k2.norm() != 0.0 {
                v += k2 * pow(base, -b) * series(s2[0], s2[1], s2[2], zeta)?;
            }
            Ok(v)
        }
        Transform::OneMinusInv => {
            let s = c - a - b;
            let k1 = gamma_ratio(&[c, s], &[c - a, c - b])?;
            let k2 = gamma_ratio(&[c, -s], &[a, b])?;
            let mut v = c64(0.0, 0.0);
            if k1.norm() != 0.0 {
                v += k1 * pow(z, -a) * series(a, a - c + 1.0, one - s, zeta)?;
            }
            if k2.norm() != 0.0 {
                v += k2 * pow(one - z, s) * pow(z, a - c) * series(c - a, one - a, s + 1.0, zeta)?;
            }
            Ok(v)
        }
    }
}

/// Evaluates through a given representation, averaging over a circle in `a`
/// when the connection coefficients are (nearly) singular.
pub fn hyp2f1_with(t: Transform, a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    check_args(a, b, c, z)?;
    if z.norm() == 0.0 {
        return Ok(c64(1.0, 0.0));
    }
    let degenerate = t
        .degeneracy(a, b, c)
        .is_some_and(|d| near_integer(d, PERTURB_RADIUS / 2.0));
    if !degenerate {
        return eval_raw(t, a, b, c, z);
    }
    let mut acc = c64(0.0, 0.0);
    for k in 0..PERTURB_POINTS {
        let phase = 2.0 * PI * (k as f64 + 0.5) / PERTURB_POINTS as f64;
        let da = C64::from_polar(PERTURB_RADIUS, phase);
        acc += eval_raw(t, a + da, b, c, z)?;
    }
    Ok(acc / PERTURB_POINTS as f64)
}

fn polynomial_degree(a: C64, b: C64) -> Option<f64> {
    [a, b]
        .into_iter()
        .filter(|&p| is_nonpositive_integer(p) && -p.re <= MAX_POLY_DEGREE)
        .map(|p| -p.re)
        .reduce(f64::min)
}

/// Principal-branch `₂F₁(a, b; c; z)`.
///
/// Fails with a pole error when `c ∈ {0, −1, …}`, a branch-cut error when
/// `z ∈ [1, ∞)`, and a non-convergence error when no representation has an
/// expansion variable of modulus at most 0.9 (neighbourhoods of
/// `e^{±iπ/3}`).
pub fn hyp2f1(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    check_args(a, b, c, z)?;
    if z.norm() == 0.0 {
        return Ok(c64(1.0, 0.0));
    }
    if let Some(degree) = polynomial_degree(a, b) {
        // Terminating series: exact finite sum.
        let mut sum = c64(1.0, 0.0);
        let mut term = c64(1.0, 0.0);
        for n in 0..degree as usize {
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
            sum += term;
        }
        return Ok(sum);
    }
    match select(a, b, c, z) {
        Some(t) => hyp2f1_with(t, a, b, c, z),
        None => series(a, b, c, z).map_err(|_| Error::NonConvergence {
            what: "hyp2f1: no convergent representation",
            estimate: f64::NAN,
        }),
    }
}

/// Pfaff-transformed evaluation `(1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1))`.
pub fn hyp2f1_pfaff(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    hyp2f1_with(Transform::Pfaff, a, b, c, z)
}

/// Euler-transformed evaluation `(1−z)^{c−a−b} ₂F₁(c−a, c−b; c; z)`, with the
/// inner function evaluated through [`hyp2f1`]. An independent route for
/// cross-checking.
pub fn hyp2f1_euler(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    check_args(a, b, c, z)?;
    Ok(pow(1.0 - z, c - a - b) * hyp2f1(c - a, c - b, c, z)?)
}
