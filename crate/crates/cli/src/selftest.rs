//! A fast cross-module invariant suite.

use su11::disk::{morera_contour_integral, mu_mean_value_residual, random_mobius_maps, BoundaryFunction, DiskFunction, MobiusMap};
use su11::morera::{argument_principle_count, locate_zeros, morera_j, Rectangle};
use su11::specfun::{hyp2f1, legendre_p, legendre_q, legendre_wronskian_residual, ComplexDegree};
use su11::tauberian::{corollary3_decay, delta_inf_diagnostic, theorem2_hypotheses};
use su11::transform::{
    convolve_transform, divided_difference, gelfand_transform, resolvent_kernel, resolvent_transform, t_lambda_transform,
    BoundedRadialFunction, RadialFunction, RadialMeasure, SpectralParameter, StripPoint,
};
use su11::{c64, Result, C64};

use crate::commands::header;
use crate::report::{real, Section};
use crate::Cli;

type Check = (&'static str, &'static str, fn() -> Result<(bool, f64)>);

fn sp(re: f64, im: f64) -> StripPoint {
    StripPoint::new(c64(re, im)).unwrap()
}

fn within(v: C64, want: C64, tol: f64) -> (bool, f64) {
    let d = (v - want).norm();
    (d <= tol, d)
}

const CHECKS: &[Check] = &[
    ("transform_p0_is_one", "1e-12", || {
        Ok(within(gelfand_transform(&RadialFunction::indicator(1.0, 2.0)?, sp(1.0, 0.0))?, c64(0.5, 0.0), 1e-12))
    }),
    ("transform_oracle", "1e-9", || {
        let v = gelfand_transform(&RadialFunction::indicator(1.0, 3.0)?, sp(0.5, 1.0))?;
        Ok(within(v, c64(0.589066400367025067, 0.0), 1e-9))
    }),
    ("transform_symmetry", "1e-9", || {
        let f = RadialFunction::exp_decay(1.3)?;
        let s = sp(0.2, 1.7);
        Ok(within(gelfand_transform(&f, s)?, gelfand_transform(&f, s.involution())?, 1e-9))
    }),
    ("resolvent_contract", "1e-6", || {
        let lam = SpectralParameter::new(c64(3.0, 1.0));
        let b = resolvent_kernel(lam)?;
        let s = sp(0.25, 2.5);
        let v = gelfand_transform(&b, s)? * (s.eigenvalue() - lam.eigenvalue());
        Ok(within(v, c64(1.0, 0.0), 1e-6))
    }),
    ("resolvent_reflection", "1e-8", || {
        let one = BoundedRadialFunction::constant(c64(1.0, 0.0));
        Ok(within(resolvent_transform(&one, SpectralParameter::new(c64(-1.0, 0.0)))?, c64(0.5, 0.0), 1e-8))
    }),
    ("division_identity", "1e-5", || {
        let f = RadialFunction::indicator(1.0, 2.0)?;
        let lam = SpectralParameter::new(c64(0.25, 0.6));
        let s = sp(0.6, 0.4);
        Ok(within(t_lambda_transform(&f, lam, s)?, divided_difference(&f, lam.as_strip_point()?, s)?, 1e-5))
    }),
    ("convolution_multiplicative", "1e-4", || {
        let f = RadialFunction::indicator(1.0, 2.0)?;
        let g = RadialFunction::indicator(1.0, 3.0)?;
        let s = sp(0.5, 0.5);
        Ok(within(convolve_transform(&f, &g, s)?, gelfand_transform(&f, s)? * gelfand_transform(&g, s)?, 1e-4))
    }),
    ("legendre_wronskian", "1e-6", || {
        let w = legendre_wronskian_residual(ComplexDegree::new(c64(-0.5, 2.0)), 3.0, 1e-3)?;
        Ok((w.residual <= 1e-6, w.residual))
    }),
    ("legendre_reflection", "1e-10", || {
        let nu = ComplexDegree::new(c64(0.3, 1.1));
        Ok(within(legendre_p(nu, 4.5)?, legendre_p(nu.reflected(), 4.5)?, 1e-10))
    }),
    ("closed_forms", "1e-10", || {
        let q0 = legendre_q(ComplexDegree::real(0.0), 2.0)? - 0.5 * 3f64.ln();
        let q1 = legendre_q(ComplexDegree::real(1.0), 2.0)? - (3f64.ln() - 1.0);
        let f = hyp2f1(c64(1.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0), c64(-1.0, 0.0))? - 2f64.ln();
        let d = q0.norm().max(q1.norm()).max(f.norm());
        Ok((d <= 1e-10, d))
    }),
    ("delta_inf_proxy", "1e-3", || {
        let d = delta_inf_diagnostic(&RadialFunction::indicator(1.0, 2.0)?, 8.0, 16)?;
        Ok((d.limsup_proxy.abs() <= 1e-3, d.limsup_proxy))
    }),
    ("corollary3_chain", ">= -1e-9, <= 0.01", || {
        let d = corollary3_decay(&RadialMeasure::atom(0.5)?, &[1e-4, 1e-3, 1e-2, 1e-1])?;
        let min = d.values.iter().copied().fold(f64::INFINITY, f64::min);
        Ok((min >= -1e-9 && d.values[0] <= 0.01, d.values[0]))
    }),
    ("theorem2_verdicts", "1e-6", || {
        let good = theorem2_hypotheses(&RadialMeasure::atom(0.5)?, 6, 1e-6)?;
        let bad = theorem2_hypotheses(&RadialMeasure::atom(0.0)?, 6, 1e-6)?;
        Ok((good.passes() && !bad.passes(), good.min_distance_from_one))
    }),
    ("mean_value_harmonic", "1e-6", || {
        let f = DiskFunction::poisson(BoundaryFunction::cos(2));
        let r = mu_mean_value_residual(&f, &RadialMeasure::atom(0.5)?, &random_mobius_maps(1, 5), 256)?;
        Ok((r <= 1e-6, r))
    }),
    ("mean_value_subharmonic", ">= 0.2", || {
        let r = mu_mean_value_residual(&DiskFunction::abs2(), &RadialMeasure::atom(0.5)?, &[MobiusMap::identity()], 256)?;
        Ok((r >= 0.2, r))
    }),
    ("contour_conj_z", "1e-9", || {
        let v = morera_contour_integral(&DiskFunction::conj_z(), &MobiusMap::identity(), 0.4, 64)?;
        Ok(within(v, c64(0.0, 2.0 * std::f64::consts::PI * 0.16), 1e-9))
    }),
    ("argument_principle", "exact", || {
        let f = |s: C64| Ok((s - 0.3) * (s - 0.7));
        let n = argument_principle_count(&f, &Rectangle::from_bounds(0.0, 1.0, -1.0, 1.0)?, 32)?;
        Ok((n == 2, n as f64))
    }),
    ("j_zero", "1e-8", || {
        let f = |s: C64| morera_j(0.5, s);
        let rep = locate_zeros(&f, &Rectangle::from_bounds(3.0, 4.0, -1.0, 0.0)?, 1e-3)?;
        let d = rep.zeros.first().map_or(f64::INFINITY, |z| (z.location - c64(3.454431599584156, -0.5)).norm());
        Ok((rep.refined && d < 1e-8, d))
    }),
];

pub fn run(cli: &Cli) -> Result<(crate::report::Report, Option<String>)> {
    let mut rows = Vec::new();
    let mut failed = Vec::new();
    for (name, tol, check) in CHECKS {
        let (status, detail) = match check() {
            Ok((true, d)) => ("pass", real(d)),
            Ok((false, d)) => ("fail", real(d)),
            Err(e) => ("fail", e.code().to_string()),
        };
        if status == "fail" {
            failed.push(*name);
        }
        rows.push(vec![name.to_string(), tol.to_string(), status.to_string(), detail]);
    }
    let mut r = header(cli, "selftest", vec![("checks", CHECKS.len().to_string())], vec![("per_check", "tolerance column".into())]);
    r.add(
        Section::new("result")
            .kv("passed", (CHECKS.len() - failed.len()).to_string())
            .kv("failed", failed.len().to_string())
            .table(&["check", "tolerance", "status", "detail"], rows),
    );
    let why = if failed.is_empty() { None } else { Some(format!("failed checks: {}", failed.join(", "))) };
    Ok((r, why))
}
