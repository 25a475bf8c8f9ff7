//! Geometric consequences of membership: growth and Jacobian envelopes,
//! starlikeness and convexity radii, the two differential sufficient tests,
//! closure under Hadamard products and convex combinations, and an audit of
//! the boundary image curve.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::membership::{
    boundary_sup_pair, default_angles, harmonic_membership, HarmonicMap, MembershipReport,
    ClassParams,
};
use crate::scan::{scan_min, ScanMax};
use crate::series::{AnalyticSeries, EvalGrid};

/// Below this modulus `F` (or `F'`) counts as vanishing on a scanned ring.
const ZERO_GUARD: f64 = 1e-12;
const MAX_BISECTIONS: usize = 60;
pub const DEFAULT_RADIUS_TOL: f64 = 1e-4;
pub const MIN_CURVE_SAMPLES: usize = 512;
const LIPSCHITZ_RANDOM_PAIRS: usize = 1000;
const CURVE_SEED: u64 = 0x5eed_c0de;
const CONVEX_WEIGHT_TOL: f64 = 1e-12;

fn require_member(f: &HarmonicMap, p: &ClassParams) -> Result<MembershipReport> {
    let report = harmonic_membership(f, p)?;
    if !report.verdict.is_member() {
        return Err(Error::NotMember(report.verdict));
    }
    Ok(report)
}

/// Envelope values at one point `z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnvelopePoint {
    pub z: Complex64,
    /// `|h(z) + conj(g(z))|`.
    pub modulus: f64,
    pub lower: f64,
    pub upper: f64,
    /// `|h'(z)|` and `|g'(z)|`.
    pub dh: f64,
    pub dg: f64,
    pub derivative_lower: f64,
    pub derivative_upper: f64,
}

impl EnvelopePoint {
    pub fn growth_violation(&self) -> f64 {
        (self.lower - self.modulus).max(self.modulus - self.upper).max(0.0)
    }

    /// Violation of `1 - 2 lambda r <= |h'| - |g'|` and
    /// `|h'| + |g'| <= 1 + 2 lambda r`.
    pub fn derivative_violation(&self) -> f64 {
        (self.derivative_lower - (self.dh - self.dg))
            .max(self.dh + self.dg - self.derivative_upper)
            .max(0.0)
    }

    /// Distance to the nearer growth bound.
    pub fn growth_gap(&self) -> f64 {
        (self.modulus - self.lower).min(self.upper - self.modulus)
    }
}

pub fn envelope_at(f: &HarmonicMap, lambda: f64, z: Complex64) -> EnvelopePoint {
    let r = z.norm();
    EnvelopePoint {
        z,
        modulus: f.eval(z).norm(),
        lower: r - lambda * r * r,
        upper: r + lambda * r * r,
        dh: f.h().derivative().eval(z).norm(),
        dg: f.g().derivative().eval(z).norm(),
        derivative_lower: 1.0 - 2.0 * lambda * r,
        derivative_upper: 1.0 + 2.0 * lambda * r,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnvelopeAudit {
    pub points: usize,
    pub max_growth_violation: f64,
    pub max_derivative_violation: f64,
    /// Points where either violation exceeds `sup_tolerance`.
    pub violations: usize,
    pub min_growth_gap: f64,
}

/// Checks the growth bounds `|z| - lambda|z|^2 <= |f| <= |z| + lambda|z|^2`
/// and the two-sided derivative bounds at every grid point.
pub fn growth_envelope_check(f: &HarmonicMap, p: &ClassParams, grid: &EvalGrid) -> Result<EnvelopeAudit> {
    require_member(f, p)?;
    grid.check_density(f.degree())?;
    let dh = f.h().derivative();
    let dg = f.g().derivative();
    let mut audit = EnvelopeAudit {
        points: 0,
        max_growth_violation: 0.0,
        max_derivative_violation: 0.0,
        violations: 0,
        min_growth_gap: f64::INFINITY,
    };
    for z in grid.points() {
        let r = z.norm();
        let pt = EnvelopePoint {
            z,
            modulus: f.eval(z).norm(),
            lower: r - p.lambda * r * r,
            upper: r + p.lambda * r * r,
            dh: dh.eval(z).norm(),
            dg: dg.eval(z).norm(),
            derivative_lower: 1.0 - 2.0 * p.lambda * r,
            derivative_upper: 1.0 + 2.0 * p.lambda * r,
        };
        let gv = pt.growth_violation();
        let dv = pt.derivative_violation();
        audit.points += 1;
        audit.max_growth_violation = audit.max_growth_violation.max(gv);
        audit.max_derivative_violation = audit.max_derivative_violation.max(dv);
        audit.min_growth_gap = audit.min_growth_gap.min(pt.growth_gap());
        if gv > p.sup_tolerance || dv > p.sup_tolerance {
            audit.violations += 1;
        }
    }
    Ok(audit)
}

/// `J_f(z) = |h'(z)|^2 - |g'(z)|^2`.
pub fn jacobian(f: &HarmonicMap, z: Complex64) -> f64 {
    f.h().derivative().eval(z).norm_sqr() - f.g().derivative().eval(z).norm_sqr()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobianAudit {
    pub points: usize,
    /// Largest `J_f - (1 + 2 lambda |z|)^2`, floored at zero.
    pub max_violation: f64,
    /// Largest `J_f / (1 + 2 lambda |z|)^2`.
    pub max_ratio: f64,
    pub min_jacobian: f64,
    /// `J_f > 0` at every grid point.
    pub sense_preserving: bool,
    pub violations: usize,
}

pub fn jacobian_bound_check(f: &HarmonicMap, p: &ClassParams, grid: &EvalGrid) -> JacobianAudit {
    let dh = f.h().derivative();
    let dg = f.g().derivative();
    let mut audit = JacobianAudit {
        points: 0,
        max_violation: 0.0,
        max_ratio: 0.0,
        min_jacobian: f64::INFINITY,
        sense_preserving: true,
        violations: 0,
    };
    for z in grid.points() {
        let j = dh.eval(z).norm_sqr() - dg.eval(z).norm_sqr();
        let bound = (1.0 + 2.0 * p.lambda * z.norm()).powi(2);
        let excess = (j - bound).max(0.0);
        audit.points += 1;
        audit.max_violation = audit.max_violation.max(excess);
        audit.max_ratio = audit.max_ratio.max(j / bound);
        audit.min_jacobian = audit.min_jacobian.min(j);
        audit.sense_preserving &= j > 0.0;
        if excess > p.sup_tolerance {
            audit.violations += 1;
        }
    }
    audit
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadiusKind {
    Starlike,
    Convex,
}

impl RadiusKind {
    /// Guaranteed radius for members of the class with parameter `lambda`.
    pub fn floor(self, lambda: f64) -> f64 {
        match self {
            RadiusKind::Starlike => (1.0 / (2.0 * lambda)).min(1.0),
            RadiusKind::Convex => (1.0 / (4.0 * lambda)).min(1.0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadiusCertificate {
    pub kind: RadiusKind,
    /// Largest certified radius; 1 when the functional stays positive up to
    /// `1 - tol`.
    pub radius: f64,
    /// Minimum of the functional on `|z| = radius`.
    pub inner_margin: f64,
    /// `(r, theta)` with the functional `<= 0`, `r <= radius + tol`.
    pub outer_witness: Option<(f64, f64)>,
}

struct RingFunctional {
    f: AnalyticSeries,
    df: AnalyticSeries,
    ddf: AnalyticSeries,
    kind: RadiusKind,
    angles: usize,
}

impl RingFunctional {
    fn new(f: &AnalyticSeries, kind: RadiusKind) -> Self {
        let df = f.derivative();
        RingFunctional {
            f: f.clone(),
            ddf: df.derivative(),
            df,
            kind,
            angles: default_angles(f.degree()),
        }
    }

    fn value(&self, z: Complex64) -> f64 {
        match self.kind {
            RadiusKind::Starlike => {
                let fz = self.f.eval(z);
                if fz.norm() < ZERO_GUARD {
                    return f64::NEG_INFINITY;
                }
                (z * self.df.eval(z) / fz).re
            }
            RadiusKind::Convex => {
                let dfz = self.df.eval(z);
                if dfz.norm() < ZERO_GUARD {
                    return f64::NEG_INFINITY;
                }
                1.0 + (z * self.ddf.eval(z) / dfz).re
            }
        }
    }

    /// Minimum over the circle `|z| = r`, or `-inf` when the ring mean shows
    /// a zero of `F` (starlike) or `F'` (convex) inside the disk besides the
    /// origin. The mean of `Re(zF'/F)` over the ring counts the zeros of `F`
    /// inside; the mean of `Re(1 + zF''/F')` is one plus the zeros of `F'`.
    fn ring_min(&self, r: f64) -> ScanMax {
        let step = TAU / self.angles as f64;
        let mean = (0..self.angles)
            .map(|k| self.value(Complex64::from_polar(r, step * k as f64)))
            .sum::<f64>()
            / self.angles as f64;
        let m = scan_min(|t| self.value(Complex64::from_polar(r, t)), self.angles);
        if !(mean < 1.5) {
            return ScanMax {
                value: f64::NEG_INFINITY,
                angle: m.angle,
            };
        }
        m
    }
}

/// Bisects for the largest `r` with `min_{|z| = r} Re(zF'/F) > 0` (starlike)
/// or `Re(1 + zF''/F') > 0` (convex). A vanishing `F` (resp. `F'`) on a ring
/// fails that ring, and so does an extra zero inside it, which keeps the
/// predicate monotone in `r`.
pub fn radius_certify(f: &AnalyticSeries, kind: RadiusKind, tol: f64) -> Result<RadiusCertificate> {
    if !f.is_normalized() {
        return Err(Error::NotNormalized(format!(
            "radius needs F(0) = 0, F'(0) = 1; got c0 = {}, c1 = {}",
            f.coeff(0),
            f.coeff(1)
        )));
    }
    if !(tol > 0.0 && tol < 0.5) {
        return Err(Error::InvalidParams(format!("radius tolerance {tol} out of range")));
    }
    let ring = RingFunctional::new(f, kind);
    let cap = 1.0 - tol;
    let at_cap = ring.ring_min(cap);
    if at_cap.value > 0.0 {
        return Ok(RadiusCertificate {
            kind,
            radius: 1.0,
            inner_margin: at_cap.value,
            outer_witness: None,
        });
    }
    let (mut lo, mut hi) = (0.0, cap);
    let mut lo_min = 1.0;
    let mut witness = (cap, at_cap.angle);
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= 0.5 * tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let m = ring.ring_min(mid);
        if m.value > 0.0 {
            lo = mid;
            lo_min = m.value;
        } else {
            hi = mid;
            witness = (mid, m.angle);
        }
    }
    Ok(RadiusCertificate {
        kind,
        radius: lo,
        inner_margin: lo_min,
        outer_witness: Some(witness),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicRadius {
    /// Certificate of the family member with the smallest radius.
    pub certificate: RadiusCertificate,
    /// Index `k` of that member, `zeta_k = e^{2 pi i k / m}`.
    pub zeta_index: usize,
    pub per_zeta: Vec<f64>,
    /// `min(1, 1/(2 lambda))` or `min(1, 1/(4 lambda))`.
    pub floor: f64,
    pub meets_floor: bool,
}

/// Smallest radius over the sampled analytic family `h + zeta g`.
pub fn harmonic_radius_certify(
    f: &HarmonicMap,
    p: &ClassParams,
    kind: RadiusKind,
    tol: f64,
    zeta_samples: usize,
) -> Result<HarmonicRadius> {
    if zeta_samples == 0 {
        return Err(Error::TooFewZetaSamples { given: 0, floor: 1 });
    }
    let m = if f.g().is_zero() { 1 } else { zeta_samples };
    let certs = (0..m)
        .map(|k| {
            let zeta = Complex64::from_polar(1.0, TAU * k as f64 / m as f64);
            radius_certify(&f.family_member(zeta)?, kind, tol)
        })
        .collect::<Result<Vec<_>>>()?;
    let (zeta_index, certificate) = certs
        .iter()
        .enumerate()
        .fold((0, certs[0]), |best, (k, c)| if c.radius < best.1.radius { (k, *c) } else { best });
    let floor = kind.floor(p.lambda);
    Ok(HarmonicRadius {
        certificate,
        zeta_index,
        per_zeta: certs.iter().map(|c| c.radius).collect(),
        floor,
        meets_floor: certificate.radius >= floor - tol,
    })
}

/// Outcome of a differential sufficient test.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DifferentialTest {
    /// Boundary maximum of `|L[h]| + |L[g]|` for the tested operator `L`.
    pub value: f64,
    /// Maximum over the sampled `zeta` of the boundary maximum of
    /// `|L[h] + zeta L[g]|`; never above `value`.
    pub sampled: f64,
    pub threshold: f64,
    pub passes: bool,
    /// Independent membership certificate of the same map.
    pub membership: MembershipReport,
}

fn differential_test(
    h: &AnalyticSeries,
    g: &AnalyticSeries,
    p: &ClassParams,
    zeta_samples: usize,
    threshold: f64,
    op: impl Fn(&AnalyticSeries) -> AnalyticSeries,
) -> Result<DifferentialTest> {
    let f = HarmonicMap::new(h.clone(), g.clone())?;
    let (lh, lg) = (op(h), op(g));
    let angles = default_angles(lh.degree().max(lg.degree()).max(f.degree()));
    let (value, _) = boundary_sup_pair(&lh, &lg, angles)?;
    let mut sampled: f64 = 0.0;
    for k in 0..zeta_samples {
        let zeta = Complex64::from_polar(1.0, TAU * k as f64 / zeta_samples as f64);
        let (s, _) = crate::membership::boundary_sup(&AnalyticSeries::combine_unchecked(&lh, &lg, zeta), angles)?;
        sampled = sampled.max(s);
    }
    Ok(DifferentialTest {
        value,
        sampled,
        threshold,
        passes: value <= threshold + p.sup_tolerance,
        membership: harmonic_membership(&f, p)?,
    })
}

/// Passes when `|h''| + |g''| <= 2 lambda` on the circle, which implies
/// membership.
pub fn second_derivative_test(
    h: &AnalyticSeries,
    g: &AnalyticSeries,
    p: &ClassParams,
    zeta_samples: usize,
) -> Result<DifferentialTest> {
    differential_test(h, g, p, zeta_samples, 2.0 * p.lambda, |s| s.derivative().derivative())
}

/// `z^2 F'' + z F' - F`, i.e. `c_n -> (n^2 - 1) c_n`.
pub fn euler_operator(f: &AnalyticSeries) -> AnalyticSeries {
    f.scale_by_index(|n| (n * n) as f64 - 1.0)
}

/// Passes when `|E[h]| + |E[g]| <= 3 lambda` on the circle for the Euler-type
/// operator `E[F] = z^2 F'' + z F' - F`; implies membership.
pub fn euler_operator_test(
    h: &AnalyticSeries,
    g: &AnalyticSeries,
    p: &ClassParams,
    zeta_samples: usize,
) -> Result<DifferentialTest> {
    differential_test(h, g, p, zeta_samples, 3.0 * p.lambda, euler_operator)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosureResult {
    pub map: HarmonicMap,
    pub report: MembershipReport,
    /// Whether membership of the result is guaranteed for this `lambda`.
    pub guaranteed: bool,
}

/// Hadamard product of two members. Closure is guaranteed for `lambda <= 1`;
/// above that the report is advisory.
pub fn convolve_members(f1: &HarmonicMap, f2: &HarmonicMap, p: &ClassParams) -> Result<ClosureResult> {
    require_member(f1, p)?;
    require_member(f2, p)?;
    let map = f1.hadamard(f2);
    let report = harmonic_membership(&map, p)?;
    Ok(ClosureResult {
        map,
        report,
        guaranteed: p.lambda <= 1.0,
    })
}

/// `sum t_k f_k` with `t_k` in `[0, 1]` summing to one.
pub fn convex_combination(fs: &[HarmonicMap], weights: &[f64], p: &ClassParams) -> Result<ClosureResult> {
    if fs.is_empty() {
        return Err(Error::NoOperands);
    }
    if fs.len() != weights.len() {
        return Err(Error::NotConvex(format!(
            "{} maps but {} weights",
            fs.len(),
            weights.len()
        )));
    }
    if let Some(w) = weights.iter().find(|w| !(0.0..=1.0).contains(*w)) {
        return Err(Error::NotConvex(format!("weight {w} outside [0, 1]")));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > CONVEX_WEIGHT_TOL {
        return Err(Error::NotConvex(format!("weights sum to {total}")));
    }
    for f in fs {
        require_member(f, p)?;
    }
    let hs: Vec<_> = fs.iter().zip(weights).map(|(f, &w)| (Complex64::new(w, 0.0), f.h())).collect();
    let gs: Vec<_> = fs.iter().zip(weights).map(|(f, &w)| (Complex64::new(w, 0.0), f.g())).collect();
    let mut h = AnalyticSeries::linear_combination(&hs)?.coeffs().to_vec();
    // sum of weights is 1 up to rounding
    h[1] = Complex64::new(1.0, 0.0);
    let map = HarmonicMap::new(AnalyticSeries::new(h), AnalyticSeries::linear_combination(&gs)?)?;
    let report = harmonic_membership(&map, p)?;
    Ok(ClosureResult {
        map,
        report,
        guaranteed: true,
    })
}

/// Image of the circle `|z| = r` under `f`, sampled at `samples` angles.
pub fn image_of_circle(f: &HarmonicMap, r: f64, samples: usize) -> Vec<Complex64> {
    (0..samples)
        .map(|k| f.eval(Complex64::from_polar(r, TAU * k as f64 / samples as f64)))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveAudit {
    /// `f(e^{i theta_k})`, `theta_k = 2 pi k / samples`.
    pub samples: Vec<Complex64>,
    /// Closed polygon length.
    pub polygonal_length: f64,
    /// Largest `|f(z1) - f(z2)| / |z1 - z2|` over adjacent samples and a
    /// fixed pseudo-random set of non-adjacent pairs.
    pub max_lipschitz_ratio: f64,
    /// Smallest distance between images of non-adjacent samples.
    pub min_pairwise_gap: f64,
    pub max_modulus: f64,
    /// `(1 + 2 lambda) 2 pi`.
    pub length_bound: f64,
    /// `1 + 2 lambda`.
    pub lipschitz_bound: f64,
}

impl CurveAudit {
    pub fn theta(&self, k: usize) -> f64 {
        TAU * k as f64 / self.samples.len() as f64
    }
}

/// Samples the boundary curve of a member and measures length, Lipschitz
/// ratio and a desk-scale injectivity proxy.
pub fn boundary_curve_audit(f: &HarmonicMap, p: &ClassParams, samples: usize) -> Result<CurveAudit> {
    if samples < MIN_CURVE_SAMPLES {
        return Err(Error::TooFewSamples {
            given: samples,
            floor: MIN_CURVE_SAMPLES,
        });
    }
    require_member(f, p)?;
    let n = samples;
    let points: Vec<Complex64> = (0..n).map(|k| Complex64::from_polar(1.0, TAU * k as f64 / n as f64)).collect();
    let images: Vec<Complex64> = points.iter().map(|&z| f.eval(z)).collect();

    let mut length = 0.0;
    let mut ratio: f64 = 0.0;
    for k in 0..n {
        let prev = (k + n - 1) % n;
        let d = (images[k] - images[prev]).norm();
        length += d;
        ratio = ratio.max(d / (points[k] - points[prev]).norm());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(CURVE_SEED);
    let mut drawn = 0;
    while drawn < LIPSCHITZ_RANDOM_PAIRS {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        let cyclic = i.abs_diff(j).min(n - i.abs_diff(j));
        if cyclic < 2 {
            continue;
        }
        drawn += 1;
        ratio = ratio.max((images[i] - images[j]).norm() / (points[i] - points[j]).norm());
    }

    let mut gap = f64::INFINITY;
    for i in 0..n {
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            gap = gap.min((images[i] - images[j]).norm_sqr());
        }
    }

    Ok(CurveAudit {
        max_modulus: images.iter().map(|w| w.norm()).fold(0.0, f64::max),
        samples: images,
        polygonal_length: length,
        max_lipschitz_ratio: ratio,
        min_pairwise_gap: gap.sqrt(),
        length_bound: (1.0 + 2.0 * p.lambda) * TAU,
        lipschitz_bound: 1.0 + 2.0 * p.lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(c: &[f64]) -> AnalyticSeries {
        AnalyticSeries::from_real(c)
    }

    fn params(lambda: f64) -> ClassParams {
        ClassParams::new(lambda).unwrap()
    }

    fn f3(lambda: f64) -> HarmonicMap {
        HarmonicMap::analytic(series(&[0.0, 1.0, lambda])).unwrap()
    }

    #[test]
    fn f3_attains_upper_growth() {
        let pt = envelope_at(&f3(1.0), 1.0, Complex64::new(0.5, 0.0));
        assert!((pt.modulus - 0.75).abs() < 1e-15);
        assert!((pt.modulus - pt.upper).abs() < 1e-15);
        assert!((pt.dh + pt.dg - pt.derivative_upper).abs() < 1e-15);

        let pt = envelope_at(&HarmonicMap::identity(), 0.7, Complex64::from_polar(0.4, 1.0));
        assert!((pt.modulus - 0.4).abs() < 1e-15);
        assert!(pt.modulus < pt.upper && pt.modulus > pt.lower);
    }

    #[test]
    fn growth_audit_on_grid() {
        let grid = EvalGrid::uniform(10, 100, 256).unwrap();
        let a = growth_envelope_check(&f3(1.0), &params(1.0), &grid).unwrap();
        assert_eq!(a.points, 1000);
        assert_eq!(a.violations, 0);
        assert!(a.min_growth_gap.abs() < 1e-12);

        let bad = HarmonicMap::analytic(series(&[0.0, 1.0, 2.0])).unwrap();
        assert!(matches!(
            growth_envelope_check(&bad, &params(1.0), &grid),
            Err(Error::NotMember(_))
        ));
    }

    #[test]
    fn jacobian_examples() {
        let f = f3(1.0);
        assert!((jacobian(&f, Complex64::new(0.3, 0.0)) - 2.56).abs() < 1e-12);

        let grid = EvalGrid::uniform(9, 40, 256).unwrap();
        let a = jacobian_bound_check(&HarmonicMap::identity(), &params(0.5), &grid);
        assert_eq!(a.violations, 0);
        assert!(a.sense_preserving);
        assert!((a.min_jacobian - 1.0).abs() < 1e-15);

        let f = HarmonicMap::new(AnalyticSeries::identity(), series(&[0.0, 0.0, 0.2])).unwrap();
        let z = Complex64::from_polar(0.7, 2.0);
        assert!((jacobian(&f, z) - (1.0 - 0.16 * 0.49)).abs() < 1e-14);
        let a = jacobian_bound_check(&f, &params(1.0), &grid);
        assert!(a.sense_preserving);
        assert_eq!(a.violations, 0);
    }

    #[test]
    fn radius_of_the_sharp_quadratic() {
        let f = series(&[0.0, 1.0, 1.0]);
        let s = radius_certify(&f, RadiusKind::Starlike, 1e-4).unwrap();
        assert!((s.radius - 0.5).abs() <= 1e-4, "{s:?}");
        assert!(s.inner_margin > 0.0);
        let (r_out, _) = s.outer_witness.unwrap();
        assert!(r_out <= s.radius + 1e-4);

        let c = radius_certify(&f, RadiusKind::Convex, 1e-4).unwrap();
        assert!((c.radius - 0.25).abs() <= 1e-4, "{c:?}");
        let (r_out, theta) = c.outer_witness.unwrap();
        // the functional first vanishes at z = -1/4
        assert!((r_out - 0.25).abs() <= 1e-4);
        assert!((theta - std::f64::consts::PI).abs() < 1e-2);
    }

    #[test]
    fn identity_radius_is_capped() {
        for kind in [RadiusKind::Starlike, RadiusKind::Convex] {
            let c = radius_certify(&AnalyticSeries::identity(), kind, 1e-4).unwrap();
            assert_eq!(c.radius, 1.0);
            assert!(c.outer_witness.is_none());
        }
        assert!(radius_certify(&series(&[0.0, 2.0, 1.0]), RadiusKind::Convex, 1e-4).is_err());
    }

    #[test]
    fn harmonic_radius_examples() {
        let r = harmonic_radius_certify(&f3(1.0), &params(1.0), RadiusKind::Starlike, 1e-4, 16).unwrap();
        assert!((r.certificate.radius - 0.5).abs() <= 1e-4);
        assert!(r.meets_floor);
        assert_eq!(r.per_zeta.len(), 1);

        let f = HarmonicMap::new(AnalyticSeries::identity(), series(&[0.0, 0.0, 0.2])).unwrap();
        let r = harmonic_radius_certify(&f, &params(0.4), RadiusKind::Starlike, 1e-4, 16).unwrap();
        assert_eq!(r.certificate.radius, 1.0);
        assert_eq!(r.per_zeta.len(), 16);

        for kind in [RadiusKind::Starlike, RadiusKind::Convex] {
            let r = harmonic_radius_certify(&HarmonicMap::identity(), &params(1.0), kind, 1e-4, 8).unwrap();
            assert_eq!(r.certificate.radius, 1.0);
        }
    }

    #[test]
    fn differential_test_examples() {
        let lambda = 0.75;
        let p = params(lambda);
        let zero = AnalyticSeries::zero();
        let sharp = series(&[0.0, 1.0, lambda]);

        let t = second_derivative_test(&sharp, &zero, &p, 8).unwrap();
        assert!((t.value - 2.0 * lambda).abs() < 1e-12);
        assert!(t.passes);
        assert!(t.membership.verdict.is_member());

        let t = second_derivative_test(&AnalyticSeries::identity(), &zero, &p, 8).unwrap();
        assert_eq!(t.value, 0.0);
        assert!(t.passes);

        let t = second_derivative_test(&series(&[0.0, 1.0, 0.0, 1.0]), &zero, &params(1.0), 8).unwrap();
        assert!((t.value - 6.0).abs() < 1e-12);
        assert!(!t.passes);
        assert_eq!(t.membership.verdict, crate::membership::Verdict::NonMember);
        assert!((t.membership.measured_sup - 2.0).abs() < 1e-12);

        let t = euler_operator_test(&sharp, &zero, &p, 8).unwrap();
        assert!((t.value - 3.0 * lambda).abs() < 1e-12);
        assert!(t.passes && t.membership.verdict.is_member());

        let cubic = series(&[0.0, 1.0, 0.0, 3.0 * lambda / 8.0]);
        let t = euler_operator_test(&cubic, &zero, &p, 8).unwrap();
        assert!((t.value - 3.0 * lambda).abs() < 1e-12);
        assert!(t.passes);
        assert!((t.membership.measured_sup - 0.75 * lambda).abs() < 1e-12);
    }

    #[test]
    fn sampled_zeta_approaches_pairwise_max() {
        let h = series(&[0.0, 1.0, 0.1, 0.05]);
        let g = series(&[0.0, 0.0, 0.2, 0.0, 0.01]);
        let t = second_derivative_test(&h, &g, &params(1.0), 64).unwrap();
        assert!(t.sampled <= t.value + 1e-12);
        assert!(t.value - t.sampled < 1e-2 * t.value);
    }

    #[test]
    fn convolution_examples() {
        let p = params(1.0);
        let fb = HarmonicMap::new(AnalyticSeries::identity(), series(&[0.0, 0.0, -1.0])).unwrap();
        let r = convolve_members(&fb, &fb, &p).unwrap();
        assert_eq!(r.map.g(), &series(&[0.0, 0.0, 1.0]));
        assert_eq!(r.report.verdict, crate::membership::Verdict::BoundarySharp);
        assert!(r.guaranteed);

        let f = HarmonicMap::new(series(&[0.0, 1.0, 0.3, 0.1]), series(&[0.0, 0.0, 0.2])).unwrap();
        let kernel = HarmonicMap::analytic(AnalyticSeries::hadamard_unit(5)).unwrap();
        let absorbed = f.hadamard(&kernel);
        assert_eq!(absorbed.h(), f.h());
        assert!(absorbed.g().is_zero());

        let q = series(&[0.0, 1.0, 0.5]);
        let f = HarmonicMap::analytic(q).unwrap();
        let r = convolve_members(&f, &f, &params(0.5)).unwrap();
        assert_eq!(r.map.h(), &series(&[0.0, 1.0, 0.25]));
        assert_eq!(r.report.verdict, crate::membership::Verdict::Member);
        assert!((r.report.measured_sup - 0.25).abs() < 1e-14);
    }

    #[test]
    fn convex_combination_examples() {
        let p = params(1.0);
        let fa = HarmonicMap::analytic(series(&[0.0, 1.0, 1.0])).unwrap();
        let fb = HarmonicMap::new(AnalyticSeries::identity(), series(&[0.0, 0.0, -1.0])).unwrap();

        let r = convex_combination(std::slice::from_ref(&fa), &[1.0], &p).unwrap();
        assert_eq!(r.map, fa);

        let r = convex_combination(&[fa.clone(), fb.clone()], &[0.5, 0.5], &p).unwrap();
        assert_eq!(r.map.h(), &series(&[0.0, 1.0, 0.5]));
        assert_eq!(r.map.g(), &series(&[0.0, 0.0, -0.5]));
        assert_eq!(r.report.verdict, crate::membership::Verdict::BoundarySharp);
        assert!((r.report.measured_sup - 1.0).abs() < 1e-14);

        assert!(matches!(
            convex_combination(&[fa.clone(), fb.clone()], &[0.7, 0.7], &p),
            Err(Error::NotConvex(_))
        ));
        assert!(matches!(
            convex_combination(&[fa, fb], &[1.2, -0.2], &p),
            Err(Error::NotConvex(_))
        ));
    }

    #[test]
    fn curve_of_identity_is_the_circle() {
        let a = boundary_curve_audit(&HarmonicMap::identity(), &params(0.5), 4096).unwrap();
        assert!((a.polygonal_length - TAU).abs() < 1e-3);
        assert!(a.max_lipschitz_ratio <= 1.0 + 1e-12);
        assert!(a.min_pairwise_gap > 0.0);
        assert!(boundary_curve_audit(&HarmonicMap::identity(), &params(0.5), 100).is_err());
    }

    #[test]
    fn curve_bounds_for_sharp_functions() {
        let a = boundary_curve_audit(&f3(0.5), &params(0.5), 4096).unwrap();
        assert!(a.polygonal_length <= 2.0 * TAU);
        assert!(a.max_lipschitz_ratio <= 2.0 + 1e-6);

        let fb = HarmonicMap::new(AnalyticSeries::identity(), series(&[0.0, 0.0, -1.0])).unwrap();
        let a = boundary_curve_audit(&fb, &params(1.0), 1024).unwrap();
        assert!(a.polygonal_length <= 3.0 * TAU);
        assert!(a.min_pairwise_gap > 0.0);
    }
}
