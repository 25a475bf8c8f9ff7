//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes the same description of a map (catalog name, lambda,
//! eta as modulus and argument, sharp-function index) and returns a JSON
//! string, so the page needs no generated type glue.

use std::f64::consts::TAU;

use omega_core::catalog::{make_example, CatalogParams, ExampleName};
use omega_core::geometry::{harmonic_radius_certify, image_of_circle, RadiusKind, DEFAULT_RADIUS_TOL};
use omega_core::membership::harmonic_membership;
use omega_core::specfun::HypergeomParams;
use omega_core::{ClassParams, Complex64, HarmonicMap};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const RADIUS_ZETA_SAMPLES: usize = 32;
const RINGS: [f64; 3] = [0.25, 0.5, 0.75];

pub fn build(name: &str, lambda: f64, eta_abs: f64, eta_arg: f64, n: usize) -> Result<HarmonicMap, String> {
    let which = ExampleName::parse(name).ok_or_else(|| format!("unknown example `{name}`"))?;
    let mut params = CatalogParams::new(which, lambda)
        .eta(Complex64::from_polar(eta_abs, eta_arg))
        .index(n);
    // fixed demo parameters for the hypergeometric and polynomial families
    match which {
        ExampleName::F4 | ExampleName::F5 | ExampleName::F6 => {
            params = params.hyper(HypergeomParams::new(1.0, 1.0, 4.0).map_err(|e| e.to_string())?);
        }
        ExampleName::P1 | ExampleName::P2 | ExampleName::P3 => params = params.poly(2, 4.0),
        _ => {}
    }
    make_example(&params).map_err(|e| e.to_string())
}

fn finite(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

fn flat(points: &[Complex64]) -> Vec<f64> {
    points.iter().flat_map(|z| [z.re, z.im]).collect()
}

pub fn membership_report(name: &str, lambda: f64, eta_abs: f64, eta_arg: f64, n: usize) -> Result<String, String> {
    let f = build(name, lambda, eta_abs, eta_arg, n)?;
    let p = ClassParams::new(lambda).map_err(|e| e.to_string())?;
    let r = harmonic_membership(&f, &p).map_err(|e| e.to_string())?;
    Ok(json!({
        "verdict": r.verdict.as_str(),
        "measured_sup": finite(r.measured_sup),
        "margin": finite(r.margin),
        "witness_angle": finite(r.witness_angle),
        "coefficient_sum": finite(f.coefficient_sum()),
        "degree": f.degree(),
    })
    .to_string())
}

/// Image of the unit circle and of the circles `|z| = 0.25, 0.5, 0.75` as
/// flat `[re, im, re, im, ...]` arrays.
pub fn boundary_images(
    name: &str,
    lambda: f64,
    eta_abs: f64,
    eta_arg: f64,
    n: usize,
    samples: usize,
) -> Result<String, String> {
    let f = build(name, lambda, eta_abs, eta_arg, n)?;
    let samples = samples.clamp(16, 1 << 14);
    let boundary = image_of_circle(&f, 1.0, samples);
    let rings: Vec<Value> = RINGS
        .iter()
        .map(|&r| json!({ "r": r, "points": flat(&image_of_circle(&f, r, samples)) }))
        .collect();
    let witness = harmonic_membership(&f, &ClassParams::new(lambda).map_err(|e| e.to_string())?)
        .map(|r| f.eval(Complex64::from_polar(1.0, r.witness_angle.rem_euclid(TAU))))
        .map_err(|e| e.to_string())?;
    Ok(json!({
        "boundary": flat(&boundary),
        "rings": rings,
        "witness": [witness.re, witness.im],
    })
    .to_string())
}

/// Starlike and convex radii over a sampled stable family, with the class
/// floors. Non-members get `null` radii.
pub fn radii_report(name: &str, lambda: f64, eta_abs: f64, eta_arg: f64, n: usize) -> Result<String, String> {
    let f = build(name, lambda, eta_abs, eta_arg, n)?;
    let p = ClassParams::new(lambda).map_err(|e| e.to_string())?;
    let verdict = harmonic_membership(&f, &p).map_err(|e| e.to_string())?.verdict;
    let mut out = json!({ "verdict": verdict.as_str() });
    for (key, kind) in [("starlike", RadiusKind::Starlike), ("convex", RadiusKind::Convex)] {
        out[format!("{key}_floor")] = json!(kind.floor(lambda));
        out[key] = if verdict.is_member() {
            let r = harmonic_radius_certify(&f, &p, kind, DEFAULT_RADIUS_TOL, RADIUS_ZETA_SAMPLES)
                .map_err(|e| e.to_string())?;
            json!(r.certificate.radius)
        } else {
            Value::Null
        };
    }
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn membership(name: &str, lambda: f64, eta_abs: f64, eta_arg: f64, n: usize) -> Result<String, JsValue> {
    membership_report(name, lambda, eta_abs, eta_arg, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn images(name: &str, lambda: f64, eta_abs: f64, eta_arg: f64, n: usize, samples: usize) -> Result<String, JsValue> {
    boundary_images(name, lambda, eta_abs, eta_arg, n, samples).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn radii(name: &str, lambda: f64, eta_abs: f64, eta_arg: f64, n: usize) -> Result<String, JsValue> {
    radii_report(name, lambda, eta_abs, eta_arg, n).map_err(|e| JsValue::from_str(&e))
}
