//! Maximum scans of real functions of the boundary angle.
//!
//! A uniform grid locates the candidate peaks; each of the strongest local
//! maxima is then polished by golden-section search inside its grid cell.
//! The scan is sequential and deterministic. Ties go to the smallest angle.

use std::f64::consts::TAU;

/// Number of grid peaks polished by golden-section search.
const REFINED_PEAKS: usize = 8;
const GOLDEN_ITERATIONS: usize = 64;

/// Result of a boundary scan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanMax {
    pub value: f64,
    /// Angle of the maximum, in `[0, 2 pi)`.
    pub angle: f64,
}

fn wrap(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Maximizes `f` over `[0, 2 pi)` using `angles` grid points plus refinement.
pub fn scan_max(f: impl Fn(f64) -> f64, angles: usize) -> ScanMax {
    let m = angles.max(1);
    let step = TAU / m as f64;
    let values: Vec<f64> = (0..m).map(|k| f(step * k as f64)).collect();
    refine_max(f, &values)
}

/// Same as [`scan_max`] when `values[k] = f(2 pi k / values.len())` has
/// already been evaluated.
pub fn refine_max(f: impl Fn(f64) -> f64, values: &[f64]) -> ScanMax {
    let m = values.len();
    if m == 0 {
        return ScanMax {
            value: f(0.0),
            angle: 0.0,
        };
    }
    let step = TAU / m as f64;
    let mut best = ScanMax {
        value: f64::NEG_INFINITY,
        angle: 0.0,
    };
    for (k, &v) in values.iter().enumerate() {
        if v > best.value || v.is_nan() {
            best = ScanMax {
                value: v,
                angle: step * k as f64,
            };
            if v.is_nan() {
                return best;
            }
        }
    }
    if m < 3 {
        return best;
    }

    let mut peaks: Vec<usize> = (0..m)
        .filter(|&k| {
            let prev = values[(k + m - 1) % m];
            let next = values[(k + 1) % m];
            values[k] >= prev && values[k] >= next
        })
        .collect();
    peaks.sort_by(|&i, &j| values[j].total_cmp(&values[i]).then(i.cmp(&j)));
    peaks.truncate(REFINED_PEAKS);

    for k in peaks {
        let centre = step * k as f64;
        let (value, angle) = golden_max(&f, centre - step, centre + step);
        if value > best.value {
            best = ScanMax {
                value,
                angle: wrap(angle),
            };
        }
    }
    best
}

/// Minimizes `f`; the returned `value` is the minimum.
pub fn scan_min(f: impl Fn(f64) -> f64, angles: usize) -> ScanMax {
    let neg = scan_max(|t| -f(t), angles);
    ScanMax {
        value: -neg.value,
        angle: neg.angle,
    }
}

fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut best = if fc >= fd { (fc, c) } else { (fd, d) };
    for _ in 0..GOLDEN_ITERATIONS {
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
            if fc > best.0 {
                best = (fc, c);
            }
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
            if fd > best.0 {
                best = (fd, d);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_off_grid_peak() {
        let peak = 1.234_567;
        let r = scan_max(|t| (t - peak).cos(), 16);
        assert!((r.value - 1.0).abs() < 1e-15);
        assert!((r.angle - peak).abs() < 1e-7);
    }

    #[test]
    fn picks_the_taller_of_two_close_peaks() {
        // two bumps; the grid samples the lower one better
        let f = |t: f64| (-(t - 1.0).powi(2) * 400.0).exp() + 1.01 * (-(t - 1.2).powi(2) * 400.0).exp();
        let r = scan_max(f, 48);
        assert!((r.angle - 1.2).abs() < 0.02);
    }

    #[test]
    fn minimum_wraps_around_zero() {
        let r = scan_min(|t| 2.0 + (t + 0.01).cos(), 64);
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!((r.angle - (std::f64::consts::PI - 0.01)).abs() < 1e-6);
        let r = scan_max(|t| (t + 0.01).cos(), 64);
        assert!(r.angle >= 0.0 && r.angle < TAU);
        assert!((r.angle - (TAU - 0.01)).abs() < 1e-6);
    }

    #[test]
    fn flat_function_keeps_first_angle() {
        let r = scan_max(|_| 0.5, 32);
        assert_eq!(r, ScanMax { value: 0.5, angle: 0.0 });
    }
}
