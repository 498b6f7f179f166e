use su11::disk::{growth_check, morera_contour_integral, mu_average, random_mobius_maps, MobiusMap};
use su11::morera::{common_zero_batch, common_zero_scan_with, locate_zeros_with, morera_j, morera_j_euler, LocateOptions};
use su11::par::Execution;
use su11::tauberian::{
    corollary3_decay, delta_inf_diagnostic, delta_zero_diagnostic, hull_scan_with, theorem2_hypotheses,
    DecayDiagnostic, HullOptions, NodeFlag,
};
use su11::transform::{
    convolve_transform, divided_difference, gelfand_transform, gelfand_transform_with, measure_gelfand,
    parse_complex, parse_measure, parse_radial, resolvent_kernel, t_lambda, t_lambda_transform, SpectralParameter,
    StripPoint, TransformOptions,
};
use su11::{c64, Error, Result, C64};

use crate::report::{complex, real, Report, Section};
use crate::specs;
use crate::{Cli, Command};

pub struct CliError {
    pub code: &'static str,
    pub message: String,
    pub exit: u8,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let exit = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        CliError { code: e.code(), message: e.to_string(), exit }
    }
}

pub struct Outcome {
    pub report: Option<Report>,
    pub error: Option<CliError>,
}

/// A report and whether its check passed.
type Checked = (Report, Option<String>);

pub fn run(cli: &Cli) -> Outcome {
    let res = match &cli.cmd {
        Command::Transform(a) => transform(cli, a),
        Command::MeasureTransform(a) => measure_transform(cli, a),
        Command::ResolventCheck(a) => resolvent_check(cli, a),
        Command::TlambdaCheck(a) => tlambda_check(cli, a),
        Command::ConvolveCheck(a) => convolve_check(cli, a),
        Command::DecayInf(a) => decay_inf(cli, a),
        Command::DecayZero(a) => decay_zero(cli, a),
        Command::Hull(a) => hull(cli, a),
        Command::Thm2Check(a) => thm2(cli, a),
        Command::Cor3Check(a) => cor3(cli, a),
        Command::MoreraJ(a) => morera(cli, a),
        Command::ZeroScan(a) => zero_scan(cli, a),
        Command::CommonZeroScan(a) => common_zero(cli, a),
        Command::HarmonicCheck(a) => harmonic(cli, a),
        Command::Contour(a) => contour(cli, a),
        Command::GrowthCheck(a) => growth(cli, a),
        Command::Selftest => crate::selftest::run(cli),
    };
    match res {
        Ok((report, None)) => Outcome { report: Some(report), error: None },
        Ok((report, Some(why))) => Outcome {
            report: Some(report),
            error: Some(CliError { code: "E_CHECK", message: why, exit: 3 }),
        },
        Err(e) => Outcome { report: None, error: Some(e.into()) },
    }
}

pub fn header(cli: &Cli, command: &str, config: Vec<(&str, String)>, tolerances: Vec<(&str, String)>) -> Report {
    let mut r = Report::default();
    r.add(
        Section::new("run")
            .kv("tool", format!("su11 {}", env!("CARGO_PKG_VERSION")))
            .kv("command", command)
            .kv("seed", cli.seed.to_string())
            .kv("parallel", cfg!(feature = "parallel").to_string()),
    );
    let mut c = Section::new("config");
    for (k, v) in config {
        c.push(k, v);
    }
    r.add(c);
    let mut t = Section::new("tolerances");
    for (k, v) in tolerances {
        t.push(k, v);
    }
    r.add(t);
    r
}

fn list(xs: &[String]) -> String {
    xs.join(" ")
}

fn reals(xs: &[f64]) -> String {
    xs.iter().map(|x| real(*x)).collect::<Vec<_>>().join(" ")
}

fn strip(s: &str) -> Result<StripPoint> {
    StripPoint::new(parse_complex(s)?)
}

fn quad_tol() -> (&'static str, String) {
    ("quadrature_abs_tol", "1e-9 * (1 + l1_norm)".into())
}

fn verdict(ok: bool, what: impl FnOnce() -> String) -> Option<String> {
    if ok {
        None
    } else {
        Some(what())
    }
}

fn transform(cli: &Cli, a: &crate::TransformArgs) -> Result<Checked> {
    let f = parse_radial(&a.f)?;
    let opts = TransformOptions { abs_tol: a.abs_tol };
    let mut rows = Vec::new();
    for s in &a.s {
        let p = strip(s)?;
        rows.push(vec![complex(p.value()), complex(gelfand_transform_with(&f, p, &opts)?)]);
    }
    let mut r = header(
        cli,
        "transform",
        vec![("f", a.f.clone()), ("s", list(&a.s))],
        vec![("quadrature_abs_tol", format!("{} * (1 + l1_norm)", real(a.abs_tol)))],
    );
    r.add(Section::new("result").kv("l1_norm", real(f.l1_norm())).table(&["s", "value"], rows));
    Ok((r, None))
}

fn measure_transform(cli: &Cli, a: &crate::MeasureTransformArgs) -> Result<Checked> {
    let mu = parse_measure(&a.mu)?;
    let mut rows = Vec::new();
    for s in &a.s {
        let p = strip(s)?;
        rows.push(vec![complex(p.value()), complex(measure_gelfand(&mu, p)?)]);
    }
    let mut r = header(cli, "measure-transform", vec![("mu", a.mu.clone()), ("s", list(&a.s))], vec![quad_tol()]);
    r.add(
        Section::new("result")
            .kv("total_mass", complex(mu.total_mass()))
            .kv("atom_at_zero", mu.has_atom_at_zero().to_string())
            .table(&["s", "value"], rows),
    );
    Ok((r, None))
}

fn resolvent_check(cli: &Cli, a: &crate::ResolventArgs) -> Result<Checked> {
    let (nre, nim) = specs::grid(&a.grid)?;
    let mut pts = Vec::new();
    for k in 0..nim {
        for j in 0..nre {
            pts.push(StripPoint::new(c64(0.5 * j as f64 / (nre - 1) as f64, a.im_max * k as f64 / (nim - 1) as f64))?);
        }
    }
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    for l in &a.lambda {
        let lam = SpectralParameter::new(parse_complex(l)?);
        let b = resolvent_kernel(lam)?;
        let vals = su11::par::try_map(Execution::default(), &pts, |&s| gelfand_transform(&b, s))?;
        for (s, v) in pts.iter().zip(vals) {
            let res = (v * (s.eigenvalue() - lam.eigenvalue()) - 1.0).norm();
            worst = worst.max(res);
            rows.push(vec![complex(lam.value()), complex(s.value()), complex(v), real(res)]);
        }
    }
    let mut r = header(
        cli,
        "resolvent-check",
        vec![("lambda", list(&a.lambda)), ("grid", a.grid.clone()), ("im_max", real(a.im_max))],
        vec![quad_tol(), ("residual_tol", real(a.tol))],
    );
    let ok = worst <= a.tol;
    r.add(
        Section::new("result")
            .kv("max_residual", real(worst))
            .kv("pass", ok.to_string())
            .table(&["lambda", "s", "transform", "residual"], rows),
    );
    Ok((r, verdict(ok, || format!("max residual {} exceeds {}", real(worst), real(a.tol)))))
}

fn default_division_points() -> Vec<String> {
    let mut v = Vec::new();
    for im in [0.4, 1.5] {
        for re in [0.1, 0.3, 0.5, 0.7, 0.9] {
            v.push(complex(c64(re, im)));
        }
    }
    v
}

fn tlambda_check(cli: &Cli, a: &crate::TlambdaArgs) -> Result<Checked> {
    let f = parse_radial(&a.f)?;
    let lam = SpectralParameter::new(parse_complex(&a.lambda)?);
    let lp = lam.as_strip_point()?;
    let s_list = if a.s.is_empty() { default_division_points() } else { a.s.clone() };
    let pts = s_list.iter().map(|s| strip(s)).collect::<Result<Vec<_>>>()?;
    let cells = su11::par::try_map(Execution::default(), &pts, |&s| -> Result<Option<(C64, C64)>> {
        if (lp.eigenvalue() - s.eigenvalue()).norm() < 1e-4 {
            return Ok(None);
        }
        Ok(Some((t_lambda_transform(&f, lam, s)?, divided_difference(&f, lp, s)?)))
    })?;
    let mut worst = 0.0f64;
    let mut rows = Vec::new();
    for (s, c) in pts.iter().zip(cells) {
        match c {
            Some((x, y)) => {
                worst = worst.max((x - y).norm());
                rows.push(vec![complex(s.value()), complex(x), complex(y), real((x - y).norm()), "checked".into()]);
            }
            None => rows.push(vec![complex(s.value()), "".into(), "".into(), "".into(), "skipped".into()]),
        }
    }
    let mut r = header(
        cli,
        "tlambda-check",
        vec![("f", a.f.clone()), ("lambda", a.lambda.clone()), ("s", list(&s_list)), ("t", reals(&a.t))],
        vec![quad_tol(), ("agreement_tol", real(a.tol)), ("removable_window", "1e-4".into())],
    );
    let ok = worst <= a.tol;
    let mut sec = Section::new("result")
        .kv("normalization", real(su11::transform::DIVISION_NORMALIZATION))
        .kv("max_abs_diff", real(worst))
        .kv("pass", ok.to_string());
    for t in &a.t {
        sec.push(&format!("t_lambda({})", real(*t)), complex(t_lambda(&f, lam, *t)?));
    }
    r.add(sec.table(&["s", "transform_of_t_lambda", "divided_difference", "abs_diff", "status"], rows));
    Ok((r, verdict(ok, || format!("max difference {} exceeds {}", real(worst), real(a.tol)))))
}

fn convolve_check(cli: &Cli, a: &crate::ConvolveArgs) -> Result<Checked> {
    let f = parse_radial(&a.f)?;
    let g = parse_radial(&a.g)?;
    let s_list: Vec<String> = if a.s.is_empty() {
        ["1+0i", "0.5+0.5i", "0.25+1i", "0+2i", "0.4+3i"].iter().map(|s| s.to_string()).collect()
    } else {
        a.s.clone()
    };
    let pts = s_list.iter().map(|s| strip(s)).collect::<Result<Vec<_>>>()?;
    let cells = su11::par::try_map(Execution::default(), &pts, |&s| -> Result<(C64, C64)> {
        Ok((convolve_transform(&f, &g, s)?, gelfand_transform(&f, s)? * gelfand_transform(&g, s)?))
    })?;
    let mut worst = 0.0f64;
    let rows = pts
        .iter()
        .zip(cells)
        .map(|(s, (x, y))| {
            worst = worst.max((x - y).norm());
            vec![complex(s.value()), complex(x), complex(y), real((x - y).norm())]
        })
        .collect();
    let mut r = header(
        cli,
        "convolve-check",
        vec![("f", a.f.clone()), ("g", a.g.clone()), ("s", list(&s_list))],
        vec![quad_tol(), ("theta_trapezoid_rel_tol", "1e-13".into()), ("agreement_tol", real(a.tol))],
    );
    let ok = worst <= a.tol;
    r.add(
        Section::new("result")
            .kv("max_abs_diff", real(worst))
            .kv("pass", ok.to_string())
            .table(&["s", "convolution", "product", "abs_diff"], rows),
    );
    Ok((r, verdict(ok, || format!("max difference {} exceeds {}", real(worst), real(a.tol)))))
}

fn flag(f: &NodeFlag) -> String {
    match f {
        NodeFlag::Ok => "ok".into(),
        NodeFlag::Vanished => "vanished".into(),
        NodeFlag::NonPositive => "nonpositive".into(),
        NodeFlag::Failed(code) => format!("failed:{code}"),
    }
}

fn diagnostic_section(name: &str, axis: &str, d: &DecayDiagnostic, with_delta: bool) -> Section {
    let rows = d
        .grid
        .iter()
        .zip(&d.values)
        .zip(&d.flags)
        .map(|((x, v), f)| vec![real(*x), real(*v), flag(f)])
        .collect();
    let w = d.tail_window();
    let mut s = Section::new(name).kv("limsup_proxy", real(d.limsup_proxy));
    if with_delta {
        s.push("delta_estimate", real(d.delta_estimate()));
    }
    s.kv("tail_window", format!("{}..{}", w.start, w.end))
        .kv("flagged_nodes", d.flags.iter().filter(|f| **f != NodeFlag::Ok).count().to_string())
        .table(&[axis, "value", "flag"], rows)
}

fn decay_inf(cli: &Cli, a: &crate::DecayInfArgs) -> Result<Checked> {
    let f = parse_radial(&a.f)?;
    let d = delta_inf_diagnostic(&f, a.t_max, a.n)?;
    let mut r = header(
        cli,
        "decay-inf",
        vec![("f", a.f.clone()), ("t_max", real(a.t_max)), ("n", a.n.to_string())],
        vec![quad_tol()],
    );
    r.add(diagnostic_section("result", "t", &d, true).kv("curve", "exp(-pi t) log|f^(1/2 + i t)|"));
    Ok((r, None))
}

fn decay_zero(cli: &Cli, a: &crate::DecayZeroArgs) -> Result<Checked> {
    let f = parse_radial(&a.f)?;
    let d = delta_zero_diagnostic(&f, a.x_min, a.n)?;
    let mut r = header(
        cli,
        "decay-zero",
        vec![("f", a.f.clone()), ("x_min", real(a.x_min)), ("n", a.n.to_string())],
        vec![quad_tol()],
    );
    r.add(diagnostic_section("result", "x", &d, true).kv("curve", "x log|f^(x)|"));
    Ok((r, None))
}

fn hull(cli: &Cli, a: &crate::HullArgs) -> Result<Checked> {
    let fs = a.f.iter().map(|s| parse_radial(s)).collect::<Result<Vec<_>>>()?;
    let opts = HullOptions { im_max: a.im_max, full_strip: a.full_strip, exec: Execution::default() };
    let rep = hull_scan_with(&fs, a.grid, a.tol, &opts)?;
    let rows = rep
        .common_zero_points
        .iter()
        .map(|s| {
            let m = rep
                .grid
                .iter()
                .zip(&rep.max_moduli)
                .filter(|(g, _)| g.canonical() == *s)
                .map(|(_, m)| *m)
                .fold(f64::INFINITY, f64::min);
            vec![complex(s.value()), real(m)]
        })
        .collect();
    let mut r = header(
        cli,
        "hull",
        vec![
            ("f", list(&a.f)),
            ("grid", a.grid.to_string()),
            ("im_max", real(a.im_max)),
            ("full_strip", a.full_strip.to_string()),
        ],
        vec![quad_tol(), ("zero_tol", real(a.tol))],
    );
    r.add(
        Section::new("result")
            .kv("grid_points", rep.grid.len().to_string())
            .kv("evaluation_failures", rep.failures.to_string())
            .kv("common_zero_count", rep.common_zero_points.len().to_string())
            .table(&["s", "max_modulus"], rows),
    );
    Ok((r, None))
}

fn thm2(cli: &Cli, a: &crate::Thm2Args) -> Result<Checked> {
    let mu = parse_measure(&a.mu)?;
    let rep = theorem2_hypotheses(&mu, a.grid, a.tol)?;
    let mut r = header(
        cli,
        "thm2-check",
        vec![("mu", a.mu.clone()), ("grid", a.grid.to_string()), ("im_max", "10".into())],
        vec![
            quad_tol(),
            ("unit_mass_tol", "1e-10".into()),
            ("separation_tol", real(a.tol)),
            ("corner_radius", "0.05".into()),
        ],
    );
    r.add(
        Section::new("verdicts")
            .kv("total_mass", complex(rep.total_mass))
            .kv("i_unit_mass", rep.unit_mass.to_string())
            .kv("ii_atom_at_zero", rep.atom_at_zero.to_string())
            .kv("iii_min_abs_mu_hat_minus_one", real(rep.min_distance_from_one))
            .kv("iii_argmin", rep.argmin.map_or("none".into(), |s| complex(s.value())))
            .kv("iii_separated", rep.separated.to_string())
            .kv("hypotheses_hold", rep.passes().to_string()),
    );
    let seg: Vec<String> = rep.real_segment.iter().map(|(x, d)| format!("{}:{}", real(*x), real(*d))).collect();
    r.add(Section::new("real_segment").kv("x:abs_mu_hat_minus_one", seg.join(" ")));
    r.add(diagnostic_section("iv_decay", "x", &rep.decay, false).kv("curve", "x log|1 - mu^(x)|"));
    Ok((r, None))
}

fn cor3(cli: &Cli, a: &crate::Cor3Args) -> Result<Checked> {
    let mu = parse_measure(&a.mu)?;
    let xs = if a.x.is_empty() { (0..=30).map(|k| 1e-4 * 10f64.powf(k as f64 / 10.0)).collect() } else { a.x.clone() };
    let d = corollary3_decay(&mu, &xs)?;
    let finite: Vec<f64> = d.values.iter().copied().filter(|v| v.is_finite()).collect();
    let min = finite.iter().copied().fold(f64::INFINITY, f64::min);
    let mut r = header(cli, "cor3-check", vec![("mu", a.mu.clone()), ("x", reals(&xs))], vec![quad_tol(), ("sign_tol", "1e-9".into())]);
    r.add(
        diagnostic_section("result", "x", &d, false)
            .kv("curve", "-x log(1 - mu^(x))")
            .kv("min_value", real(min))
            .kv("nonnegative", (min >= -1e-9).to_string())
            .kv("value_at_smallest_x", real(d.values[0])),
    );
    Ok((r, None))
}

fn morera(cli: &Cli, a: &crate::MoreraJArgs) -> Result<Checked> {
    let mut rows = Vec::new();
    for s in &a.s {
        let z = parse_complex(s)?;
        let (v, e) = (morera_j(a.r, z)?, morera_j_euler(a.r, z)?);
        rows.push(vec![complex(z), complex(v), complex(e), real((v - e).norm())]);
    }
    let mut r = header(cli, "morera-j", vec![("r", real(a.r)), ("s", list(&a.s))], vec![]);
    r.add(Section::new("result").table(&["s", "value", "euler", "abs_diff"], rows));
    Ok((r, None))
}

fn zero_rows(z: &su11::morera::ZeroReport) -> Vec<Vec<String>> {
    z.zeros
        .iter()
        .map(|z| vec![complex(z.location), real(z.residual), z.multiplicity.to_string()])
        .collect()
}

fn window_text(w: &su11::morera::Rectangle) -> String {
    format!("[{}, {}] x [{}, {}]", real(w.lo().re), real(w.hi().re), real(w.lo().im), real(w.hi().im))
}

fn zero_scan(cli: &Cli, a: &crate::ZeroScanArgs) -> Result<Checked> {
    let w = specs::window(&a.window)?;
    let opts = LocateOptions { n_min: a.n_min, ..Default::default() };
    let f = |s: C64| morera_j(a.r, s);
    let rep = locate_zeros_with(&f, &w, a.tol, &opts)?;
    let mut r = header(
        cli,
        "zero-scan",
        vec![("r", real(a.r)), ("window", window_text(&w)), ("n_min", a.n_min.to_string())],
        vec![
            ("cell_tol", real(a.tol)),
            ("polish_tol", real(su11::morera::POLISH_TOL)),
            ("boundary_zero_tol", real(su11::morera::BOUNDARY_ZERO)),
            ("fd_step", real(su11::morera::FD_STEP)),
        ],
    );
    r.add(
        Section::new("result")
            .kv("winding_count", rep.winding_count.to_string())
            .kv("refined", rep.refined.to_string())
            .table(&["location", "residual", "multiplicity"], zero_rows(&rep)),
    );
    Ok((r, None))
}

fn common_zero(cli: &Cli, a: &crate::CommonZeroArgs) -> Result<Checked> {
    let w = specs::window(&a.window)?;
    let opts = LocateOptions { n_min: a.n_min, ..Default::default() };
    let tols = vec![
        ("match_tol", real(a.match_tol)),
        ("cell_tol", real(su11::morera::SCAN_CELL_TOL)),
        ("polish_tol", real(su11::morera::POLISH_TOL)),
        ("boundary_zero_tol", real(su11::morera::BOUNDARY_ZERO)),
    ];
    if let Some(path) = &a.pairs {
        let pairs = specs::pairs(path)?;
        let reps = common_zero_batch(&pairs, &w, a.match_tol, Execution::default());
        let mut rows = Vec::new();
        for (p, rep) in pairs.iter().zip(reps) {
            let rep = rep?;
            rows.push(vec![
                real(p.0),
                real(p.1),
                rep.zeros1.zeros.len().to_string(),
                rep.zeros2.zeros.len().to_string(),
                rep.common.len().to_string(),
                rep.verdict().into(),
            ]);
        }
        let mut r = header(
            cli,
            "common-zero-scan",
            vec![("pairs", path.display().to_string()), ("window", window_text(&w)), ("n_min", a.n_min.to_string())],
            tols,
        );
        r.add(Section::new("batch").table(&["r1", "r2", "zeros1", "zeros2", "common", "verdict"], rows));
        return Ok((r, None));
    }
    let (r1, r2) = (a.r1.unwrap_or_default(), a.r2.unwrap_or_default());
    let rep = common_zero_scan_with(r1, r2, &w, a.match_tol, &opts)?;
    let mut r = header(
        cli,
        "common-zero-scan",
        vec![("r1", real(r1)), ("r2", real(r2)), ("window", window_text(&w)), ("n_min", a.n_min.to_string())],
        tols,
    );
    let common: Vec<Vec<String>> =
        rep.common.iter().map(|(x, y, d)| vec![complex(*x), complex(*y), real(*d)]).collect();
    r.add(
        Section::new("summary")
            .kv("verdict", rep.verdict())
            .kv("winding1", rep.zeros1.winding_count.to_string())
            .kv("winding2", rep.zeros2.winding_count.to_string())
            .kv("refined", (rep.zeros1.refined && rep.zeros2.refined).to_string())
            .kv("common_count", rep.common.len().to_string())
            .table(&["zero1", "zero2", "distance"], common),
    );
    r.add(Section::new("zeros1").table(&["location", "residual", "multiplicity"], zero_rows(&rep.zeros1)));
    r.add(Section::new("zeros2").table(&["location", "residual", "multiplicity"], zero_rows(&rep.zeros2)));
    Ok((r, None))
}

fn group_elements(cli: &Cli, identity: bool, count: usize) -> Vec<MobiusMap> {
    if identity {
        vec![MobiusMap::identity()]
    } else {
        random_mobius_maps(cli.seed, count)
    }
}

fn harmonic(cli: &Cli, a: &crate::HarmonicArgs) -> Result<Checked> {
    let f = specs::disk_function(&a.f)?;
    let mu = parse_measure(&a.mu)?;
    let gs = group_elements(cli, a.identity, a.count);
    let res = su11::par::try_map(Execution::default(), &gs, |g| -> Result<f64> {
        Ok((mu_average(&f, &mu, g, a.n)? - f.eval(g.apply(C64::from(0.0))?)?).norm())
    })?;
    let worst = res.iter().copied().fold(0.0, f64::max);
    let rows = gs
        .iter()
        .zip(&res)
        .enumerate()
        .map(|(i, (g, v))| vec![i.to_string(), complex(g.a()), complex(g.b()), real(*v)])
        .collect();
    let mut r = header(
        cli,
        "harmonic-check",
        vec![
            ("f", a.f.clone()),
            ("mu", a.mu.clone()),
            ("count", a.count.to_string()),
            ("identity", a.identity.to_string()),
            ("n", a.n.to_string()),
        ],
        vec![("residual_tol", real(a.tol)), ("density_quadrature_abs_tol", "1e-12 * (1 + l1_norm)".into())],
    );
    r.add(
        Section::new("result")
            .kv("max_residual", real(worst))
            .kv("mean_value_property", (worst <= a.tol).to_string())
            .table(&["g", "a", "b", "residual"], rows),
    );
    Ok((r, None))
}

fn contour(cli: &Cli, a: &crate::ContourArgs) -> Result<Checked> {
    let f = specs::disk_function(&a.f)?;
    let gs = group_elements(cli, a.identity, a.count);
    let vals = gs.iter().map(|g| morera_contour_integral(&f, g, a.r, a.n)).collect::<Result<Vec<_>>>()?;
    let worst = vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let rows = gs
        .iter()
        .zip(&vals)
        .enumerate()
        .map(|(i, (g, v))| vec![i.to_string(), complex(g.a()), complex(g.b()), complex(*v), real(v.norm())])
        .collect();
    let mut r = header(
        cli,
        "contour",
        vec![
            ("f", a.f.clone()),
            ("r", real(a.r)),
            ("count", a.count.to_string()),
            ("identity", a.identity.to_string()),
            ("n", a.n.to_string()),
        ],
        vec![],
    );
    r.add(Section::new("result").kv("max_modulus", real(worst)).table(&["g", "a", "b", "integral", "modulus"], rows));
    Ok((r, None))
}

fn growth(cli: &Cli, a: &crate::GrowthArgs) -> Result<Checked> {
    let f = specs::disk_function(&a.f)?;
    let zs: Vec<C64> = if a.z.is_empty() {
        let radii = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99];
        radii
            .iter()
            .flat_map(|&r| (0..8).map(move |k| C64::from_polar(r, std::f64::consts::PI * k as f64 / 4.0)))
            .collect()
    } else {
        a.z.iter().map(|s| parse_complex(s)).collect::<Result<_>>()?
    };
    let v = growth_check(&f, a.c, &zs)?;
    let rows = zs
        .iter()
        .map(|&z| Ok(vec![complex(z), real(f.eval(z)?.norm() * (1.0 - z.norm_sqr()))]))
        .collect::<Result<Vec<_>>>()?;
    let mut r = header(cli, "growth-check", vec![("f", a.f.clone()), ("c", real(a.c)), ("samples", zs.len().to_string())], vec![]);
    r.add(
        Section::new("result")
            .kv("holds", v.holds.to_string())
            .kv("max_weighted", real(v.max_weighted))
            .kv("argmax", v.argmax.map_or("none".into(), complex))
            .table(&["z", "weighted"], rows),
    );
    Ok((r, None))
}
