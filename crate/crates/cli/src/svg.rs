//! Minimal SVG output: closed paths for image curves, a reference unit
//! circle and the two axes. The y axis is flipped so the picture matches the
//! usual orientation of the complex plane.

use std::fmt::Write as _;

use omega_core::Complex64;

fn bounds(paths: &[&[Complex64]]) -> (f64, f64, f64, f64) {
    let mut b = (-1.0f64, 1.0f64, -1.0f64, 1.0f64);
    for z in paths.iter().flat_map(|p| p.iter()) {
        b.0 = b.0.min(z.re);
        b.1 = b.1.max(z.re);
        b.2 = b.2.min(z.im);
        b.3 = b.3.max(z.im);
    }
    b
}

fn path_data(points: &[Complex64]) -> String {
    let mut d = String::new();
    for (k, z) in points.iter().enumerate() {
        let _ = write!(d, "{}{:.6} {:.6} ", if k == 0 { 'M' } else { 'L' }, z.re, -z.im);
    }
    d.push('Z');
    d
}

/// Draws `curve` on top of the `rings`, both given as closed point loops.
pub fn render(curve: &[Complex64], rings: &[Vec<Complex64>]) -> String {
    let mut all: Vec<&[Complex64]> = rings.iter().map(|r| r.as_slice()).collect();
    all.push(curve);
    let (x0, x1, y0, y1) = bounds(&all);
    let pad = 0.05 * (x1 - x0).max(y1 - y0);
    let (x0, x1, y0, y1) = (x0 - pad, x1 + pad, y0 - pad, y1 + pad);
    let stroke = 0.003 * (x1 - x0).max(y1 - y0);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="800" height="800" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        x0,
        -y1,
        x1 - x0,
        y1 - y0
    );
    let _ = writeln!(
        out,
        r##"<line x1="{x0:.6}" y1="0" x2="{x1:.6}" y2="0" stroke="#bbbbbb" stroke-width="{stroke:.6}"/>"##
    );
    let _ = writeln!(
        out,
        r##"<line x1="0" y1="{:.6}" x2="0" y2="{:.6}" stroke="#bbbbbb" stroke-width="{stroke:.6}"/>"##,
        -y1, -y0
    );
    let _ = writeln!(
        out,
        r##"<circle cx="0" cy="0" r="1" fill="none" stroke="#dddddd" stroke-width="{stroke:.6}"/>"##
    );
    for ring in rings {
        let _ = writeln!(
            out,
            r##"<path d="{}" fill="none" stroke="#7a9cc6" stroke-width="{stroke:.6}"/>"##,
            path_data(ring)
        );
    }
    let _ = writeln!(
        out,
        r##"<path d="{}" fill="none" stroke="#b22222" stroke-width="{:.6}"/>"##,
        path_data(curve),
        2.0 * stroke
    );
    out.push_str("</svg>\n");
    out
}
