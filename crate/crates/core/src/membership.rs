//! Membership certificates for the analytic class (`|F - zF'| < lambda`) and
//! the harmonic class (`|h - zh'| + |g - zg'| < lambda`) on the open disk.
//!
//! Both deficiency images vanish at the origin, so by the maximum principle
//! the supremum over the open disk equals the boundary maximum and is never
//! attained inside. A boundary maximum of at most `lambda` therefore
//! certifies the strict inequality, which is why functions whose boundary
//! maximum equals `lambda` exactly are reported as [`Verdict::BoundarySharp`]
//! members rather than rejected.
//!
//! The coefficient-sum test is sufficient only. Functions such as
//! `z + lambda/(n-1) z^n` sit on the class boundary with coefficient sum
//! equal to `lambda`, so the sum test is inconclusive for them while the
//! boundary scan certifies them.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::scan::{refine_max, scan_max};
use crate::series::AnalyticSeries;

const NORMALIZATION_TOL: f64 = 1e-12;

/// Smallest angular grid used by the default scans.
pub const MIN_ANGLES: usize = 256;

/// Default number of unimodular `zeta` samples.
pub const DEFAULT_ZETA_SAMPLES: usize = 256;

/// `f = h + conj(g)` with `h(0) = 0`, `h'(0) = 1`, `g(0) = g'(0) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicMap {
    h: AnalyticSeries,
    g: AnalyticSeries,
}

impl HarmonicMap {
    pub fn new(h: AnalyticSeries, g: AnalyticSeries) -> Result<Self> {
        if !h.is_normalized() {
            return Err(Error::NotNormalized(format!(
                "analytic part must start z + ..., got c0 = {}, c1 = {}",
                h.coeff(0),
                h.coeff(1)
            )));
        }
        if g.coeff(0).norm() > NORMALIZATION_TOL {
            return Err(Error::NotNormalized(format!(
                "co-analytic part must vanish at 0, got b0 = {}",
                g.coeff(0)
            )));
        }
        if g.coeff(1).norm() > NORMALIZATION_TOL {
            return Err(Error::CoanalyticLinearTerm(g.coeff(1).to_string()));
        }
        Ok(HarmonicMap { h, g })
    }

    /// The analytic function `F` viewed as the harmonic map `F + conj(0)`.
    pub fn analytic(h: AnalyticSeries) -> Result<Self> {
        Self::new(h, AnalyticSeries::zero())
    }

    pub fn identity() -> Self {
        HarmonicMap {
            h: AnalyticSeries::identity(),
            g: AnalyticSeries::zero(),
        }
    }

    pub fn h(&self) -> &AnalyticSeries {
        &self.h
    }

    pub fn g(&self) -> &AnalyticSeries {
        &self.g
    }

    pub fn degree(&self) -> usize {
        self.h.degree().max(self.g.degree())
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.h.eval(z) + self.g.eval(z).conj()
    }

    /// `(h1 * h2, g1 * g2)`.
    pub fn hadamard(&self, other: &Self) -> Self {
        HarmonicMap {
            h: self.h.hadamard(&other.h),
            g: self.g.hadamard(&other.g),
        }
    }

    /// The analytic member `h + zeta g` of the stable family.
    pub fn family_member(&self, zeta: Complex64) -> Result<AnalyticSeries> {
        AnalyticSeries::combine_with_zeta(&self.h, &self.g, zeta)
    }

    /// `sum_{n >= 2} (n - 1)(|a_n| + |b_n|)`.
    pub fn coefficient_sum(&self) -> f64 {
        let w = |n: usize| if n >= 2 { (n - 1) as f64 } else { 0.0 };
        self.h.weighted_abs_sum(w) + self.g.weighted_abs_sum(w)
    }
}

/// The class parameter and the tolerances of the numerical certificates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassParams {
    pub lambda: f64,
    pub sup_tolerance: f64,
    pub boundary_band: f64,
}

impl ClassParams {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidParams(format!("lambda must be positive, got {lambda}")));
        }
        Ok(ClassParams {
            lambda,
            sup_tolerance: 1e-9,
            boundary_band: 1e-6,
        })
    }

    pub fn with_tolerances(mut self, sup_tolerance: f64, boundary_band: f64) -> Self {
        self.sup_tolerance = sup_tolerance;
        self.boundary_band = boundary_band;
        self
    }

    pub fn verdict(&self, measured_sup: f64) -> Verdict {
        if !measured_sup.is_finite() {
            Verdict::Inconclusive
        } else if (measured_sup - self.lambda).abs() <= self.boundary_band {
            Verdict::BoundarySharp
        } else if measured_sup < self.lambda {
            Verdict::Member
        } else {
            Verdict::NonMember
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Member,
    /// Member whose boundary maximum equals `lambda` within the band.
    BoundarySharp,
    NonMember,
    /// The scan produced a non-finite supremum.
    Inconclusive,
}

impl Verdict {
    pub fn is_member(self) -> bool {
        matches!(self, Verdict::Member | Verdict::BoundarySharp)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Member => "member",
            Verdict::BoundarySharp => "boundary-sharp",
            Verdict::NonMember => "non-member",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MembershipReport {
    pub verdict: Verdict,
    pub measured_sup: f64,
    /// `lambda - measured_sup`.
    pub margin: f64,
    pub witness_angle: f64,
}

impl MembershipReport {
    fn new(p: &ClassParams, measured_sup: f64, witness_angle: f64) -> Self {
        MembershipReport {
            verdict: p.verdict(measured_sup),
            measured_sup,
            margin: p.lambda - measured_sup,
            witness_angle,
        }
    }
}

/// Grid size used for a scan of series up to `degree`.
pub fn default_angles(degree: usize) -> usize {
    (64 * degree).max(MIN_ANGLES)
}

fn check_angles(angles: usize, degree: usize) -> Result<()> {
    let floor = (64 * degree).max(1);
    if angles < floor {
        return Err(Error::TooFewAngles { given: angles, floor });
    }
    Ok(())
}

/// Maximum of `|F(e^{i theta})|` and its angle. Callers pass the series
/// whose boundary maximum is wanted, typically a deficiency image.
pub fn boundary_sup(f: &AnalyticSeries, angles: usize) -> Result<(f64, f64)> {
    check_angles(angles, f.degree())?;
    if f.is_zero() {
        return Ok((0.0, 0.0));
    }
    let r = scan_max(|t| f.eval_boundary(t).norm(), angles);
    Ok((r.value, r.angle))
}

/// Maximum of `|F(e^{i theta})| + |G(e^{i theta})|`.
pub fn boundary_sup_pair(f: &AnalyticSeries, g: &AnalyticSeries, angles: usize) -> Result<(f64, f64)> {
    check_angles(angles, f.degree().max(g.degree()))?;
    if f.is_zero() && g.is_zero() {
        return Ok((0.0, 0.0));
    }
    let r = scan_max(
        |t| {
            let z = Complex64::from_polar(1.0, t);
            f.eval(z).norm() + g.eval(z).norm()
        },
        angles,
    );
    Ok((r.value, r.angle))
}

/// Certifies `|F - zF'| < lambda` on the open disk.
pub fn analytic_membership(f: &AnalyticSeries, p: &ClassParams) -> Result<MembershipReport> {
    analytic_membership_with(f, p, default_angles(f.degree()))
}

pub fn analytic_membership_with(
    f: &AnalyticSeries,
    p: &ClassParams,
    angles: usize,
) -> Result<MembershipReport> {
    if !f.is_normalized() {
        return Err(Error::NotNormalized(format!(
            "series must start z + ..., got c0 = {}, c1 = {}",
            f.coeff(0),
            f.coeff(1)
        )));
    }
    let (sup, angle) = boundary_sup(&f.deficiency(), angles)?;
    Ok(MembershipReport::new(p, sup, angle))
}

/// Certifies `|h - zh'| + |g - zg'| < lambda` on the open disk.
pub fn harmonic_membership(f: &HarmonicMap, p: &ClassParams) -> Result<MembershipReport> {
    harmonic_membership_with(f, p, default_angles(f.degree()))
}

pub fn harmonic_membership_with(
    f: &HarmonicMap,
    p: &ClassParams,
    angles: usize,
) -> Result<MembershipReport> {
    let (sup, angle) = boundary_sup_pair(&f.h.deficiency(), &f.g.deficiency(), angles)?;
    Ok(MembershipReport::new(p, sup, angle))
}

/// Per-`zeta` suprema of the stable family against the harmonic supremum.
#[derive(Clone, Debug, PartialEq)]
pub struct StableFamilyReport {
    /// Boundary maximum of `|Phi[h + zeta_k g]|` for `zeta_k = e^{2 pi i k / m}`.
    pub per_zeta: Vec<f64>,
    /// Largest entry of `per_zeta` and its index (smallest on ties).
    pub grid_max: f64,
    pub argmax: usize,
    /// Maximum over all unimodular `zeta`: the grid peaks refined by
    /// golden-section search in the phase of `zeta`.
    pub family_max: f64,
    pub family_phase: f64,
    pub harmonic_sup: f64,
    /// `harmonic_sup - family_max`.
    pub gap: f64,
    /// `harmonic_sup - grid_max`.
    pub grid_gap: f64,
    /// Worst-case deficit of an `m`-point phase grid:
    /// `harmonic_sup (1 - cos(pi / (2m)))`.
    pub sampling_bound: f64,
    /// `|gap| <= tol` and `-tol <= grid_gap <= sampling_bound + tol`, with
    /// `tol = sup_tolerance`.
    pub consistent: bool,
}

/// Scans the analytic family `h + zeta g` over `zeta_samples` unimodular
/// points, refines the best of them, and compares with the harmonic
/// supremum.
///
/// Pointwise `max_zeta |A + zeta B| = |A| + |B|`; with phase spacing
/// `2 pi / m` the nearest sample misses the optimal phase by at most
/// `pi / m`, which loses at most a factor `cos(pi / (2m))`. The raw grid
/// maximum therefore trails the harmonic supremum by up to that much, while
/// the refined maximum closes the gap.
pub fn stable_family_check(
    f: &HarmonicMap,
    p: &ClassParams,
    zeta_samples: usize,
) -> Result<StableFamilyReport> {
    if zeta_samples < 8 {
        return Err(Error::TooFewZetaSamples {
            given: zeta_samples,
            floor: 8,
        });
    }
    let angles = default_angles(f.degree());
    let dh = f.h.deficiency();
    let dg = f.g.deficiency();
    // the grid is valid for dh and dg, so no per-call density check is needed
    let member_sup = |phase: f64| {
        let member = AnalyticSeries::combine_unchecked(&dh, &dg, Complex64::from_polar(1.0, phase));
        if member.is_zero() {
            0.0
        } else {
            scan_max(|t| member.eval_boundary(t).norm(), angles).value
        }
    };
    check_angles(angles, f.degree())?;
    let per_zeta: Vec<f64> = (0..zeta_samples)
        .map(|k| member_sup(TAU * k as f64 / zeta_samples as f64))
        .collect();
    let (argmax, grid_max) = per_zeta
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (k, s)| if s > best.1 { (k, s) } else { best });
    let refined = refine_max(member_sup, &per_zeta);
    let harmonic_sup = harmonic_membership_with(f, p, angles)?.measured_sup;
    let gap = harmonic_sup - refined.value;
    let grid_gap = harmonic_sup - grid_max;
    let sampling_bound =
        harmonic_sup * (1.0 - (std::f64::consts::PI / (2.0 * zeta_samples as f64)).cos());
    let tol = p.sup_tolerance;
    let consistent = gap.abs() <= tol && grid_gap >= -tol && grid_gap <= sampling_bound + tol;
    Ok(StableFamilyReport {
        per_zeta,
        grid_max,
        argmax,
        family_max: refined.value,
        family_phase: refined.angle,
        harmonic_sup,
        gap,
        grid_gap,
        sampling_bound,
        consistent,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumOutcome {
    /// The sum is strictly below `lambda`; membership follows.
    Sufficient,
    /// The sum test says nothing.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoefficientTest {
    pub outcome: SumOutcome,
    pub sum: f64,
}

/// `sum (n - 1)(|a_n| + |b_n|) < lambda`, a sufficient condition only.
pub fn coefficient_sufficient(f: &HarmonicMap, p: &ClassParams) -> CoefficientTest {
    let sum = f.coefficient_sum();
    CoefficientTest {
        outcome: if sum < p.lambda {
            SumOutcome::Sufficient
        } else {
            SumOutcome::Inconclusive
        },
        sum,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Analytic,
    CoAnalytic,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundCheck {
    pub index: usize,
    pub side: Side,
    pub value: f64,
    pub bound: f64,
    pub violated: bool,
}

/// Checks the necessary bounds `|a_n|, |b_n| <= lambda / (n - 1)` for `n >= 2`.
/// Any violation rules out membership.
pub fn coefficient_bounds_audit(f: &HarmonicMap, p: &ClassParams) -> Vec<BoundCheck> {
    let mut checks = Vec::new();
    for (side, series) in [(Side::Analytic, &f.h), (Side::CoAnalytic, &f.g)] {
        for n in 2..=series.degree() {
            let value = series.coeff(n).norm();
            let bound = p.lambda / (n - 1) as f64;
            checks.push(BoundCheck {
                index: n,
                side,
                value,
                bound,
                violated: value > bound + p.sup_tolerance,
            });
        }
    }
    checks
}

fn random_coeff(rng: &mut impl Rng) -> Complex64 {
    Complex64::from_polar(rng.gen::<f64>(), TAU * rng.gen::<f64>())
}

/// Draws a map of the given degree with random coefficients rescaled so that
/// `sum (n - 1)(|a_n| + |b_n|) = fill * lambda`. For `fill < 1` the coefficient
/// test guarantees membership.
pub fn random_member(rng: &mut impl Rng, lambda: f64, degree: usize, fill: f64) -> HarmonicMap {
    let degree = degree.max(2);
    let mut h = vec![Complex64::new(0.0, 0.0); degree + 1];
    let mut g = vec![Complex64::new(0.0, 0.0); degree + 1];
    h[1] = Complex64::new(1.0, 0.0);
    for n in 2..=degree {
        h[n] = random_coeff(rng);
        g[n] = random_coeff(rng);
    }
    let raw: f64 = (2..=degree)
        .map(|n| (n - 1) as f64 * (h[n].norm() + g[n].norm()))
        .sum();
    let scale = if raw > 0.0 { fill * lambda / raw } else { 0.0 };
    for n in 2..=degree {
        h[n] *= scale;
        g[n] *= scale;
    }
    HarmonicMap {
        h: AnalyticSeries::new(h),
        g: AnalyticSeries::new(g),
    }
}
