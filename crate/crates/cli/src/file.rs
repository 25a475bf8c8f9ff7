//! The function file: a JSON document holding `lambda`, the coefficients of
//! `h` and `g` as `[re, im]` pairs, and a free-form string map.
//!
//! Writing is canonical (fixed key order, two-space indent, every number
//! printed with 17 significant digits), so parse followed by write returns
//! the input byte for byte whenever the input was itself written here.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use omega_core::{AnalyticSeries, Complex64, HarmonicMap};
use serde::Deserialize;

const NORMALIZATION_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    pub lambda: f64,
    pub h_coeffs: Vec<[f64; 2]>,
    pub g_coeffs: Vec<[f64; 2]>,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FileError(pub String);

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FileError {}

fn field_error(field: &str, msg: impl std::fmt::Display) -> FileError {
    FileError(format!("field `{field}`: {msg}"))
}

fn check_finite(field: &str, coeffs: &[[f64; 2]]) -> Result<(), FileError> {
    for (k, c) in coeffs.iter().enumerate() {
        if !(c[0].is_finite() && c[1].is_finite()) {
            return Err(field_error(&format!("{field}[{k}]"), "coefficients must be finite"));
        }
    }
    Ok(())
}

fn near(c: [f64; 2], re: f64) -> bool {
    (c[0] - re).abs() <= NORMALIZATION_TOL && c[1].abs() <= NORMALIZATION_TOL
}

impl FunctionFile {
    /// Parses and validates a function file.
    pub fn parse(text: &str) -> Result<Self, FileError> {
        let file: FunctionFile = serde_json::from_str(text).map_err(|e| FileError(format!("malformed file: {e}")))?;
        file.validate()?;
        Ok(file)
    }

    pub fn validate(&self) -> Result<(), FileError> {
        if !(self.lambda > 0.0 && self.lambda.is_finite()) {
            return Err(field_error("lambda", format!("must be positive and finite, got {}", self.lambda)));
        }
        check_finite("h_coeffs", &self.h_coeffs)?;
        check_finite("g_coeffs", &self.g_coeffs)?;
        if self.h_coeffs.len() < 2 {
            return Err(field_error("h_coeffs", "needs at least the entries for z^0 and z^1"));
        }
        if !near(self.h_coeffs[0], 0.0) {
            return Err(field_error("h_coeffs[0]", format!("h(0) must vanish, got {:?}", self.h_coeffs[0])));
        }
        if !near(self.h_coeffs[1], 1.0) {
            return Err(field_error("h_coeffs[1]", format!("h'(0) must equal 1, got {:?}", self.h_coeffs[1])));
        }
        if let Some(&c) = self.g_coeffs.first() {
            if !near(c, 0.0) {
                return Err(field_error("g_coeffs[0]", format!("g(0) must vanish, got {c:?}")));
            }
        }
        if let Some(&c) = self.g_coeffs.get(1) {
            if !near(c, 0.0) {
                return Err(field_error(
                    "g_coeffs[1]",
                    format!("co-analytic linear term must vanish, got {c:?}"),
                ));
            }
        }
        Ok(())
    }

    pub fn from_map(f: &HarmonicMap, lambda: f64, meta: BTreeMap<String, String>) -> Self {
        let pairs = |s: &AnalyticSeries| {
            let mut v: Vec<[f64; 2]> = s.coeffs().iter().map(|c| [c.re, c.im]).collect();
            v.resize(v.len().max(2), [0.0, 0.0]);
            v
        };
        FunctionFile {
            lambda,
            h_coeffs: pairs(f.h()),
            g_coeffs: pairs(f.g()),
            meta,
        }
    }

    /// The map described by the file. The normalization entries are taken
    /// verbatim, so a file within tolerance of normalized stays within it.
    pub fn to_map(&self) -> Result<HarmonicMap, FileError> {
        let series = |v: &[[f64; 2]]| AnalyticSeries::new(v.iter().map(|c| Complex64::new(c[0], c[1])).collect());
        HarmonicMap::new(series(&self.h_coeffs), series(&self.g_coeffs)).map_err(|e| FileError(e.to_string()))
    }

    /// Canonical text form.
    pub fn to_canonical(&self) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"lambda\": {},", number(self.lambda));
        write_pairs(&mut out, "h_coeffs", &self.h_coeffs);
        out.push_str(",\n");
        write_pairs(&mut out, "g_coeffs", &self.g_coeffs);
        out.push_str(",\n  \"meta\": {");
        if self.meta.is_empty() {
            out.push('}');
        } else {
            out.push('\n');
            let entries: Vec<String> = self
                .meta
                .iter()
                .map(|(k, v)| format!("    {}: {}", json_string(k), json_string(v)))
                .collect();
            out.push_str(&entries.join(",\n"));
            out.push_str("\n  }");
        }
        out.push_str("\n}\n");
        out
    }
}

/// 17 significant digits in scientific notation, valid as a JSON number.
pub fn number(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn write_pairs(out: &mut String, key: &str, pairs: &[[f64; 2]]) {
    let _ = write!(out, "  \"{key}\": [");
    if pairs.is_empty() {
        out.push(']');
        return;
    }
    out.push('\n');
    let rows: Vec<String> = pairs
        .iter()
        .map(|c| format!("    [{}, {}]", number(c[0]), number(c[1])))
        .collect();
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ]");
}
