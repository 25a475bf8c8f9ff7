//! `omega`: check function files against the class, build the catalog's
//! named examples, certify radii and plot boundary curves.
//!
//! Exit codes: 0 member (or threshold holds), 2 boundary-sharp, 1 non-member
//! (or threshold fails), 3 bad input.

pub mod file;
pub mod svg;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use omega_core::catalog::{
    hyper_condition, make_example, poly_condition, CatalogParams, ConditionReport, ExampleName, HyperCondition,
    PolyCondition,
};
use omega_core::geometry::{boundary_curve_audit, harmonic_radius_certify, image_of_circle, RadiusKind};
use omega_core::membership::{harmonic_membership, harmonic_membership_with, stable_family_check};
use omega_core::specfun::HypergeomParams;
use omega_core::{ClassParams, Complex64, Error, HarmonicMap, Verdict};
use serde_json::json;

use crate::file::FunctionFile;

pub const EXIT_MEMBER: i32 = 0;
pub const EXIT_NON_MEMBER: i32 = 1;
pub const EXIT_SHARP: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

const IMAGE_RINGS: [f64; 3] = [0.25, 0.5, 0.75];

#[derive(Parser, Debug)]
#[command(name = "omega", version, about = "Membership checks for normalized harmonic maps of the unit disk")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify membership of the map in a function file.
    Check {
        path: PathBuf,
        /// Override the file's lambda.
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long)]
        json: bool,
        /// Also compare against the sampled stable family.
        #[arg(long)]
        zeta_samples: Option<usize>,
        /// Boundary grid size (at least 64 per degree).
        #[arg(long)]
        angles: Option<usize>,
    },
    /// Write a named example as a function file.
    Example {
        name: String,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        /// Real part of eta.
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        eta: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        eta_im: f64,
        /// Index of the sharp functions f_a, f_b.
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long)]
        c: Option<f64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, default_value_t = omega_core::series::DEFAULT_TRUNCATION)]
        truncation: usize,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the starlike or convex radius of a member.
    Radius {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Starlike)]
        kind: Kind,
        #[arg(long, default_value_t = omega_core::geometry::DEFAULT_RADIUS_TOL)]
        tol: f64,
        #[arg(long, default_value_t = omega_core::membership::DEFAULT_ZETA_SAMPLES)]
        zeta_samples: usize,
    },
    /// Audit the boundary curve of a member and optionally export it.
    Curve {
        path: PathBuf,
        #[arg(long, default_value_t = 4096)]
        samples: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Evaluate one of the closed-form thresholds.
    Hyper {
        /// 213, 214, 215 for the hypergeometric thresholds, 216, 217, 218 for the polynomial ones
        #[arg(long)]
        which: u32,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long)]
        c: Option<f64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        eta: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        eta_im: f64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Starlike,
    Convex,
}

/// A failed command: message for stderr plus exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotMember(_) => EXIT_NON_MEMBER,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(i32, String), Failure>;

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_MEMBER };
        }
    };
    match dispatch(cli.command) {
        Ok((code, text)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            let _ = out.flush();
            code
        }
        Err(f) => {
            eprintln!("omega: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Check {
            path,
            lambda,
            json,
            zeta_samples,
            angles,
        } => check(&path, lambda, json, zeta_samples, angles),
        Command::Example {
            name,
            lambda,
            eta,
            eta_im,
            n,
            a,
            b,
            c,
            s,
            truncation,
            out,
        } => {
            let name = ExampleName::parse(&name).ok_or_else(|| {
                let known: Vec<&str> = ExampleName::ALL.iter().map(|n| n.as_str()).collect();
                Failure::input(format!("unknown example `{name}` (known: {})", known.join(", ")))
            })?;
            let eta = Complex64::new(eta, eta_im);
            let mut params = CatalogParams::new(name, lambda).eta(eta).index(n).truncation(truncation);
            if let (Some(a), Some(b), Some(c)) = (a, b, c) {
                params = params.hyper(HypergeomParams::new(a, b, c)?);
            }
            if let (Some(s), Some(c)) = (s, c) {
                params = params.poly(s, c);
            }
            let f = make_example(&params)?;
            let text = FunctionFile::from_map(&f, lambda, example_meta(&params, a, b, c, s)).to_canonical();
            match out {
                Some(path) => {
                    write_atomic(&path, &text)?;
                    Ok((EXIT_MEMBER, format!("wrote {}\n", path.display())))
                }
                None => Ok((EXIT_MEMBER, text)),
            }
        }
        Command::Radius {
            path,
            kind,
            tol,
            zeta_samples,
        } => radius(&path, kind, tol, zeta_samples),
        Command::Curve { path, samples, csv, svg } => curve(&path, samples, csv.as_deref(), svg.as_deref()),
        Command::Hyper {
            which,
            a,
            b,
            c,
            s,
            lambda,
            eta,
            eta_im,
        } => hyper(which, a, b, c, s, lambda, Complex64::new(eta, eta_im)),
    }
}

fn load(path: &Path) -> Result<(FunctionFile, HarmonicMap), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let file = FunctionFile::parse(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let map = file.to_map().map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Ok((file, map))
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Member => EXIT_MEMBER,
        Verdict::BoundarySharp => EXIT_SHARP,
        Verdict::NonMember | Verdict::Inconclusive => EXIT_NON_MEMBER,
    }
}

/// Shortest round-trip form, switching to exponent notation for very small
/// or very large magnitudes.
fn num(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || !a.is_finite() || (1e-4..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn finite_or_null(x: f64) -> serde_json::Value {
    if x.is_finite() {
        json!(x)
    } else {
        serde_json::Value::Null
    }
}

fn check(path: &Path, lambda: Option<f64>, as_json: bool, zeta_samples: Option<usize>, angles: Option<usize>) -> Outcome {
    let (file, f) = load(path)?;
    let p = ClassParams::new(lambda.unwrap_or(file.lambda))?;
    let report = match angles {
        Some(n) => harmonic_membership_with(&f, &p, n)?,
        None => harmonic_membership(&f, &p)?,
    };
    let family = zeta_samples.map(|m| stable_family_check(&f, &p, m)).transpose()?;
    let code = verdict_code(report.verdict);
    if as_json {
        let mut value = json!({
            "verdict": report.verdict.as_str(),
            "measured_sup": finite_or_null(report.measured_sup),
            "margin": finite_or_null(report.margin),
            "witness_angle": finite_or_null(report.witness_angle),
            "lambda": p.lambda,
        });
        if let Some(fam) = &family {
            value["stable_family"] = json!({
                "zeta_samples": fam.per_zeta.len(),
                "family_max": finite_or_null(fam.family_max),
                "grid_max": finite_or_null(fam.grid_max),
                "gap": finite_or_null(fam.gap),
                "grid_gap": finite_or_null(fam.grid_gap),
                "sampling_bound": finite_or_null(fam.sampling_bound),
                "consistent": fam.consistent,
            });
        }
        return Ok((code, format!("{value}\n")));
    }
    let mut out = String::new();
    let _ = writeln!(out, "verdict:        {}", report.verdict.as_str());
    let _ = writeln!(out, "lambda:         {}", num(p.lambda));
    let _ = writeln!(out, "measured_sup:   {}", num(report.measured_sup));
    let _ = writeln!(out, "margin:         {}", num(report.margin));
    let _ = writeln!(out, "witness_angle:  {}", num(report.witness_angle));
    if let Some(fam) = &family {
        let _ = writeln!(out, "family_max:     {} (refined from {} zeta samples)", num(fam.family_max), fam.per_zeta.len());
        let _ = writeln!(out, "family_gap:     {}", num(fam.gap));
        let _ = writeln!(out, "grid_gap:       {} (phase-grid bound {})", num(fam.grid_gap), num(fam.sampling_bound));
        let _ = writeln!(out, "consistent:     {}", fam.consistent);
    }
    Ok((code, out))
}

fn require_member(f: &HarmonicMap, p: &ClassParams) -> Result<(), Failure> {
    let r = harmonic_membership(f, p)?;
    if r.verdict.is_member() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_NON_MEMBER,
            message: format!("not a member: {} (sup {})", r.verdict.as_str(), r.measured_sup),
        })
    }
}

fn radius(path: &Path, kind: Kind, tol: f64, zeta_samples: usize) -> Outcome {
    let (file, f) = load(path)?;
    let p = ClassParams::new(file.lambda)?;
    require_member(&f, &p)?;
    let kind = match kind {
        Kind::Starlike => RadiusKind::Starlike,
        Kind::Convex => RadiusKind::Convex,
    };
    let r = harmonic_radius_certify(&f, &p, kind, tol, zeta_samples)?;
    let c = r.certificate;
    let mut out = String::new();
    let label = match kind {
        RadiusKind::Starlike => "starlike",
        RadiusKind::Convex => "convex",
    };
    let _ = writeln!(out, "kind:           {label}");
    let _ = writeln!(out, "radius:         {}", num(c.radius));
    let _ = writeln!(out, "inner_margin:   {}", num(c.inner_margin));
    match c.outer_witness {
        Some((wr, wt)) => {
            let _ = writeln!(out, "outer_witness:  r = {}, theta = {}", num(wr), num(wt));
        }
        None => {
            let _ = writeln!(out, "outer_witness:  none (capped at 1)");
        }
    }
    let _ = writeln!(out, "zeta_index:     {} of {}", r.zeta_index, r.per_zeta.len());
    let _ = writeln!(out, "floor:          {}", num(r.floor));
    let _ = writeln!(out, "meets_floor:    {}", r.meets_floor);
    if kind == RadiusKind::Starlike {
        let _ = writeln!(out, "univalent in:   |z| < {}", num(c.radius));
    }
    Ok((EXIT_MEMBER, out))
}

fn csv_text(audit: &omega_core::geometry::CurveAudit) -> String {
    let mut out = String::from("theta,re,im\n");
    for (k, w) in audit.samples.iter().enumerate() {
        let _ = writeln!(
            out,
            "{},{},{}",
            file::number(audit.theta(k)),
            file::number(w.re),
            file::number(w.im)
        );
    }
    out
}

fn curve(path: &Path, samples: usize, csv: Option<&Path>, svg_path: Option<&Path>) -> Outcome {
    let (file, f) = load(path)?;
    let p = ClassParams::new(file.lambda)?;
    require_member(&f, &p)?;
    let audit = boundary_curve_audit(&f, &p, samples)?;
    if let Some(path) = csv {
        write_atomic(path, &csv_text(&audit))?;
    }
    if let Some(path) = svg_path {
        let rings: Vec<Vec<Complex64>> = IMAGE_RINGS.iter().map(|&r| image_of_circle(&f, r, samples)).collect();
        write_atomic(path, &svg::render(&audit.samples, &rings))?;
    }
    let mut out = String::new();
    let _ = writeln!(out, "samples:            {}", audit.samples.len());
    let _ = writeln!(out, "polygonal_length:   {} (bound {})", num(audit.polygonal_length), num(audit.length_bound));
    let _ = writeln!(out, "max_lipschitz:      {} (bound {})", num(audit.max_lipschitz_ratio), num(audit.lipschitz_bound));
    let _ = writeln!(out, "min_pairwise_gap:   {}", num(audit.min_pairwise_gap));
    let _ = writeln!(out, "max_modulus:        {}", num(audit.max_modulus));
    Ok((EXIT_MEMBER, out))
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::input(format!("missing --{flag}")))
}

fn hyper(which: u32, a: Option<f64>, b: Option<f64>, c: Option<f64>, s: Option<u64>, lambda: f64, eta: Complex64) -> Outcome {
    let report: ConditionReport = match which {
        213..=215 => {
            let p = HypergeomParams::new(need(a, "a")?, need(b, "b")?, need(c, "c")?)?;
            let cond = match which {
                213 => HyperCondition::Gauss,
                214 => HyperCondition::Shifted,
                _ => HyperCondition::Weighted,
            };
            hyper_condition(cond, &p, eta, lambda)?
        }
        216..=218 => {
            let cond = match which {
                216 => PolyCondition::Gauss,
                217 => PolyCondition::Shifted,
                _ => PolyCondition::Weighted,
            };
            poly_condition(cond, need(s, "s")?, need(c, "c")?, eta, lambda)?
        }
        _ => return Err(Failure::input(format!("--which must be one of 213..218, got {which}"))),
    };
    let mut out = String::new();
    let _ = writeln!(out, "lhs:      {}", num(report.lhs));
    let _ = writeln!(out, "rhs:      {}", num(report.rhs));
    let _ = writeln!(out, "holds:    {}", report.holds);
    if report.equality {
        let _ = writeln!(out, "note:     lhs equals rhs; the inequality is strict");
    }
    Ok((if report.holds { EXIT_MEMBER } else { EXIT_NON_MEMBER }, out))
}

fn example_meta(
    params: &CatalogParams,
    a: Option<f64>,
    b: Option<f64>,
    c: Option<f64>,
    s: Option<u64>,
) -> BTreeMap<String, String> {
    let mut meta = BTreeMap::new();
    meta.insert("example".to_string(), params.name.as_str().to_string());
    let name = params.name;
    let uses_eta = !matches!(name, ExampleName::Eq13 | ExampleName::FA | ExampleName::FB);
    if uses_eta {
        meta.insert("eta".to_string(), format!("{} {}", params.eta.re, params.eta.im));
    }
    if matches!(name, ExampleName::FA | ExampleName::FB) {
        meta.insert("n".to_string(), params.n.to_string());
    }
    if matches!(name, ExampleName::F4 | ExampleName::F5 | ExampleName::F6) {
        for (k, v) in [("a", a), ("b", b), ("c", c)] {
            if let Some(v) = v {
                meta.insert(k.to_string(), v.to_string());
            }
        }
        meta.insert("truncation".to_string(), params.truncation.to_string());
    }
    if matches!(name, ExampleName::P1 | ExampleName::P2 | ExampleName::P3) {
        if let Some(s) = s {
            meta.insert("s".to_string(), s.to_string());
        }
        if let Some(c) = c {
            meta.insert("c".to_string(), c.to_string());
        }
    }
    meta
}

/// Writes through a temporary file in the target directory and renames it
/// into place.
fn write_atomic(path: &Path, text: &str) -> Result<(), Failure> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let fail = |e: &dyn std::fmt::Display| Failure::input(format!("cannot write {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| fail(&e))?;
    tmp.write_all(text.as_bytes()).map_err(|e| fail(&e))?;
    tmp.persist(path).map_err(|e| fail(&e.error))?;
    Ok(())
}
