//! Report model and the two output formats.
//!
//! Structured text is line-oriented `key = value` under `[section]`
//! headers; tables list `columns = …` followed by one `row = …` per row.
//! CSV prints the run, config and tolerance sections as `# key = value`
//! comments, then the main table.

use std::fmt::Write;

use su11::C64;

/// Twelve significant digits, fixed notation in `[1e−5, 1e12)`, trailing
/// zeros trimmed.
pub fn real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let a = x.abs();
    if (1e-5..1e12).contains(&a) {
        let mag = a.log10().floor() as i32;
        let dec = (11 - mag).max(0) as usize;
        let s = format!("{x:.dec$}");
        // rounding may carry into a new digit; re-derive once
        let s = if s.trim_start_matches('-').replace('.', "").trim_start_matches('0').len() > 12 {
            format!("{x:.prec$}", prec = dec.saturating_sub(1))
        } else {
            s
        };
        trim(s)
    } else {
        let s = format!("{x:.11e}");
        let (m, e) = s.split_once('e').unwrap();
        format!("{}e{e}", trim(m.to_string()))
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        if t == "-0" { "0".into() } else { t.into() }
    } else {
        s
    }
}

/// `a+bi` / `a-bi`.
pub fn complex(z: C64) -> String {
    let im = real(z.im.abs());
    let sign = if z.im.is_sign_negative() && z.im != 0.0 { '-' } else { '+' };
    format!("{}{sign}{im}i", real(z.re))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Default)]
pub struct Section {
    pub name: String,
    pub entries: Vec<(String, String)>,
    pub table: Option<Table>,
}

impl Section {
    pub fn new(name: &str) -> Self {
        Section { name: name.into(), ..Default::default() }
    }

    pub fn kv(mut self, k: &str, v: impl Into<String>) -> Self {
        self.entries.push((k.into(), v.into()));
        self
    }

    pub fn push(&mut self, k: &str, v: impl Into<String>) {
        self.entries.push((k.into(), v.into()));
    }

    pub fn table(mut self, columns: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.table = Some(Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows });
        self
    }
}

#[derive(Debug, Default)]
pub struct Report {
    pub sections: Vec<Section>,
}

const HEADER_SECTIONS: [&str; 3] = ["run", "config", "tolerances"];

impl Report {
    pub fn add(&mut self, s: Section) {
        self.sections.push(s);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Csv => self.csv(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            let _ = writeln!(out, "[{}]", s.name);
            for (k, v) in &s.entries {
                let _ = writeln!(out, "{k} = {v}");
            }
            if let Some(t) = &s.table {
                let _ = writeln!(out, "columns = {}", t.columns.join(", "));
                for r in &t.rows {
                    let _ = writeln!(out, "row = {}", r.join(", "));
                }
            }
            out.push('\n');
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            if HEADER_SECTIONS.contains(&s.name.as_str()) || s.table.is_none() {
                for (k, v) in &s.entries {
                    let _ = writeln!(out, "# {}.{k} = {v}", s.name);
                }
            }
        }
        // the first table is the payload; a report without one lists its
        // result entries as key,value rows
        match self.sections.iter().find(|s| s.table.is_some()) {
            Some(s) => {
                let t = s.table.as_ref().unwrap();
                for (k, v) in &s.entries {
                    let _ = writeln!(out, "# {}.{k} = {v}", s.name);
                }
                let _ = writeln!(out, "{}", t.columns.join(","));
                for r in &t.rows {
                    let _ = writeln!(out, "{}", r.join(","));
                }
            }
            None => {
                let _ = writeln!(out, "key,value");
                for s in self.sections.iter().filter(|s| !HEADER_SECTIONS.contains(&s.name.as_str())) {
                    for (k, v) in &s.entries {
                        let _ = writeln!(out, "{}.{k},{v}", s.name);
                    }
                }
            }
        }
        out
    }
}
