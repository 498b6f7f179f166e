use std::path::Path;

use crate::{c64, Error, Result, C64};

use super::ops::resolvent_kernel;
use super::radial::{BoundedRadialFunction, RadialFunction, RadialMeasure, SampledProfile};
use super::strip::SpectralParameter;

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn real(tok: &str) -> Result<f64> {
    tok.trim()
        .parse::<f64>()
        .map_err(|_| perr(format!("expected a number, got `{tok}`")))
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` (also `i`, `-i`, exponents).
pub fn parse_complex(text: &str) -> Result<C64> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || perr(format!("expected a complex number like 2+0.5i, got `{text}`"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return real(&t).map(|x| c64(x, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let coef = |s: &str| match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => s.parse::<f64>().map_err(|_| bad()),
    };
    match split {
        Some(k) => Ok(c64(body[..k].parse::<f64>().map_err(|_| bad())?, coef(&body[k..])?)),
        None => Ok(c64(0.0, coef(body)?)),
    }
}

/// Splits `coef*rest`; the coefficient defaults to 1.
fn weighted(term: &str) -> Result<(C64, &str)> {
    match term.split_once('*') {
        Some((c, rest)) => Ok((parse_complex(c)?, rest.trim())),
        None => Ok((c64(1.0, 0.0), term.trim())),
    }
}

fn atom_function(spec: &str) -> Result<RadialFunction> {
    let (head, rest) = spec.split_once(':').ok_or_else(|| perr(format!("unknown function `{spec}`")))?;
    let args: Vec<&str> = rest.split(':').collect();
    let want = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(perr(format!("`{head}` takes {n} argument(s)")))
        }
    };
    match head {
        "indicator" => {
            want(2)?;
            RadialFunction::indicator(real(args[0])?, real(args[1])?)
        }
        "expdecay" => {
            want(1)?;
            RadialFunction::exp_decay(real(args[0])?)
        }
        "blambda" => {
            want(2)?;
            resolvent_kernel(SpectralParameter::new(c64(real(args[0])?, real(args[1])?)))
        }
        "sampled" => Ok(RadialFunction::sampled(read_sampled(rest)?)),
        _ => Err(perr(format!("unknown function `{head}`"))),
    }
}

/// Parses a radial function: comma-separated terms `[c*]name:args`, e.g.
/// `indicator:1:2,-1*indicator:2:3`.
pub fn parse_radial(spec: &str) -> Result<RadialFunction> {
    let mut parts = Vec::new();
    for term in spec.split(',') {
        let (c, body) = weighted(term)?;
        parts.push((c, atom_function(body)?));
    }
    match parts.as_slice() {
        [] => Err(perr("empty function")),
        [(c, f)] if *c == c64(1.0, 0.0) => Ok(f.clone()),
        _ => {
            let refs: Vec<(C64, &RadialFunction)> = parts.iter().map(|(c, f)| (*c, f)).collect();
            RadialFunction::combine(&refs)
        }
    }
}

/// `const:c` or any bounded radial function.
pub fn parse_bounded(spec: &str) -> Result<BoundedRadialFunction> {
    match spec.trim().strip_prefix("const:") {
        Some(c) => Ok(BoundedRadialFunction::constant(parse_complex(c)?)),
        None => BoundedRadialFunction::from_radial(parse_radial(spec)?),
    }
}

/// Parses a measure: comma-separated `[w*]atom:zeta` and `[c*]density:<f>`
/// terms, e.g. `0.5*atom:0.3,0.5*atom:0.7`.
pub fn parse_measure(spec: &str) -> Result<RadialMeasure> {
    let mut atoms = Vec::new();
    let mut dens: Vec<(C64, RadialFunction)> = Vec::new();
    for term in spec.split(',') {
        let (c, body) = weighted(term)?;
        if let Some(z) = body.strip_prefix("atom:") {
            atoms.push((real(z)?, c));
        } else if let Some(f) = body.strip_prefix("density:") {
            dens.push((c, atom_function(f)?));
        } else {
            return Err(perr(format!("unknown measure term `{body}`")));
        }
    }
    let density = match dens.len() {
        0 => None,
        1 if dens[0].0 == c64(1.0, 0.0) => Some(dens.pop().unwrap().1),
        _ => {
            let refs: Vec<(C64, &RadialFunction)> = dens.iter().map(|(c, f)| (*c, f)).collect();
            Some(RadialFunction::combine(&refs)?)
        }
    };
    RadialMeasure::new(atoms, density)
}

/// Reads `x value` lines (whitespace or comma separated) with a
/// `# tail_exponent=<p>` header.
pub fn read_sampled(path: impl AsRef<Path>) -> Result<SampledProfile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| perr(format!("{}: {e}", path.display())))?;
    let mut tail = None;
    let (mut xs, mut vs) = (Vec::new(), Vec::new());
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(c) = line.strip_prefix('#') {
            if let Some(p) = c.trim().strip_prefix("tail_exponent=") {
                tail = Some(real(p)?);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
        if cols.len() != 2 {
            return Err(perr(format!("{}:{}: expected two columns", path.display(), n + 1)));
        }
        xs.push(real(cols[0])?);
        vs.push(real(cols[1])?);
    }
    let tail = tail.ok_or_else(|| perr(format!("{}: missing `# tail_exponent=<p>` header", path.display())))?;
    SampledProfile::new(xs, vs, tail)
}
