//! Command-line specifiers that the library does not parse itself.

use std::path::Path;

use su11::disk::{BoundaryFunction, DiskFunction};
use su11::morera::Rectangle;
use su11::transform::parse_complex;
use su11::{Error, Result};

/// `holo:poly:c0:c1:…`, `conjz`, `invgrowth`, `abs2`, `const:c`,
/// `cos:k` (Poisson extension of `cos kθ`) or `poisson:<path>`.
pub fn disk_function(spec: &str) -> Result<DiskFunction> {
    let bad = || Error::Parse(format!("unknown disk function `{spec}`"));
    match spec {
        "conjz" => return Ok(DiskFunction::conj_z()),
        "invgrowth" => return Ok(DiskFunction::inv_growth()),
        "abs2" => return Ok(DiskFunction::abs2()),
        _ => {}
    }
    let (head, rest) = spec.split_once(':').ok_or_else(bad)?;
    match head {
        "holo" => {
            let coeffs = rest.strip_prefix("poly:").ok_or_else(bad)?;
            let cs = coeffs.split(':').map(parse_complex).collect::<Result<Vec<_>>>()?;
            Ok(DiskFunction::holomorphic_poly(cs))
        }
        "const" => Ok(DiskFunction::constant(parse_complex(rest)?)),
        "cos" => {
            let k = rest.parse::<i64>().map_err(|_| bad())?;
            Ok(DiskFunction::poisson(BoundaryFunction::cos(k)))
        }
        "poisson" => Ok(DiskFunction::poisson(BoundaryFunction::read(rest)?)),
        _ => Err(bad()),
    }
}

/// `re0:re1:im0:im1`.
pub fn window(spec: &str) -> Result<Rectangle> {
    let v: Vec<f64> = spec
        .split(':')
        .map(|t| t.parse::<f64>().map_err(|_| Error::Parse(format!("bad window `{spec}`"))))
        .collect::<Result<_>>()?;
    if v.len() != 4 {
        return Err(Error::Parse(format!("window `{spec}` needs re0:re1:im0:im1")));
    }
    Rectangle::from_bounds(v[0], v[1], v[2], v[3])
}

/// `NxM` grid sizes.
pub fn grid(spec: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("grid `{spec}` must look like 5x5"));
    let (a, b) = spec.split_once('x').ok_or_else(bad)?;
    let a = a.parse::<usize>().map_err(|_| bad())?;
    let b = b.parse::<usize>().map_err(|_| bad())?;
    if a < 2 || b < 2 {
        return Err(bad());
    }
    Ok((a, b))
}

/// Two-column `(r1, r2)` list, `#` comments.
pub fn pairs(path: &Path) -> Result<Vec<(f64, f64)>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || Error::Parse(format!("{}:{}: expected `r1 r2`", path.display(), n + 1));
        let cols: Vec<&str> = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
        if cols.len() != 2 {
            return Err(bad());
        }
        out.push((cols[0].parse().map_err(|_| bad())?, cols[1].parse().map_err(|_| bad())?));
    }
    Ok(out)
}
