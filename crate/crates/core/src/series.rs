//! Dense truncated power series over `Complex64`.
//!
//! Everything in the class machinery reduces to a handful of coefficientwise
//! maps on these series: evaluation, differentiation, the deficiency operator
//! `F - zF'` (which scales `c_n` by `1 - n`), Hadamard products and weighted
//! sums. All values are immutable once built.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Truncation degree used when importing series with infinitely many terms.
pub const DEFAULT_TRUNCATION: usize = 64;

const NORMALIZATION_TOL: f64 = 1e-12;

/// A truncated power series `c_0 + c_1 z + ... + c_N z^N`.
///
/// The degree is the index of the last stored coefficient; stored trailing
/// zeros are kept (`F - zF'` of `z` is the degree-1 zero series).
#[derive(Clone, PartialEq, Debug)]
pub struct AnalyticSeries {
    coeffs: Vec<Complex64>,
}

impl AnalyticSeries {
    /// Builds a series from its coefficients. An empty vector yields the zero
    /// series of degree 0.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        AnalyticSeries { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    /// The identity `z`.
    pub fn identity() -> Self {
        Self::from_real(&[0.0, 1.0])
    }

    /// `z + z^2 + ... + z^degree`, the Hadamard unit up to `degree` (apart from
    /// the constant term).
    pub fn hadamard_unit(degree: usize) -> Self {
        let mut coeffs = vec![Complex64::new(1.0, 0.0); degree + 1];
        coeffs[0] = Complex64::new(0.0, 0.0);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^n`, zero beyond the stored degree.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `c_0 = 0` and `c_1 = 1`.
    pub fn is_normalized(&self) -> bool {
        self.coeff(0).norm() <= NORMALIZATION_TOL
            && (self.coeff(1) - Complex64::new(1.0, 0.0)).norm() <= NORMALIZATION_TOL
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == Complex64::new(0.0, 0.0))
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Value on the unit circle at angle `theta`.
    pub fn eval_boundary(&self, theta: f64) -> Complex64 {
        self.eval(Complex64::from_polar(1.0, theta))
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, &c)| c * n as f64)
                .collect(),
        )
    }

    /// `F - zF'`: coefficient `c_n` becomes `(1 - n) c_n`.
    pub fn deficiency(&self) -> Self {
        self.scale_by_index(|n| 1.0 - n as f64)
    }

    /// Coefficientwise map `c_n -> w(n) c_n`, degree preserved.
    pub fn scale_by_index(&self, weight: impl Fn(usize) -> f64) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| c * weight(n))
                .collect(),
        )
    }

    pub fn scale(&self, w: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * w).collect())
    }

    /// Coefficientwise product, truncated to the smaller degree.
    pub fn hadamard(&self, other: &Self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    /// `sum_k w_k F_k`, zero-padded to the largest degree. Terms are added in
    /// the order given.
    pub fn linear_combination(terms: &[(Complex64, &AnalyticSeries)]) -> Result<Self> {
        let degree = terms
            .iter()
            .map(|(_, f)| f.degree())
            .max()
            .ok_or(Error::NoOperands)?;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); degree + 1];
        for (w, f) in terms {
            for (acc, &c) in coeffs.iter_mut().zip(&f.coeffs) {
                *acc += w * c;
            }
        }
        Ok(Self::new(coeffs))
    }

    /// `h + zeta g` for unimodular `zeta`.
    pub fn combine_with_zeta(h: &Self, g: &Self, zeta: Complex64) -> Result<Self> {
        let modulus = zeta.norm();
        if (modulus - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::NotUnimodular(modulus));
        }
        Ok(Self::combine_unchecked(h, g, zeta))
    }

    pub(crate) fn combine_unchecked(h: &Self, g: &Self, zeta: Complex64) -> Self {
        let degree = h.degree().max(g.degree());
        Self::new(
            (0..=degree)
                .map(|n| h.coeff(n) + zeta * g.coeff(n))
                .collect(),
        )
    }

    /// Sum of absolute coefficient values weighted by `w(n)`.
    pub fn weighted_abs_sum(&self, weight: impl Fn(usize) -> f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| weight(n) * c.norm())
            .sum()
    }
}

impl fmt::Display for AnalyticSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if *c == Complex64::new(0.0, 0.0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Sample points `z = r e^{i theta}` inside the open disk, plus the boundary
/// density used for maximum scans.
#[derive(Clone, Debug)]
pub struct EvalGrid {
    radii: Vec<f64>,
    angles_per_ring: usize,
    boundary_angles: usize,
}

impl EvalGrid {
    pub fn new(radii: Vec<f64>, angles_per_ring: usize, boundary_angles: usize) -> Result<Self> {
        if radii.iter().any(|r| !(0.0..1.0).contains(r)) {
            return Err(Error::InvalidGrid("radii must lie in [0, 1)".into()));
        }
        if radii.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidGrid("radii must be sorted".into()));
        }
        if angles_per_ring == 0 {
            return Err(Error::InvalidGrid("need at least one angle per ring".into()));
        }
        Ok(EvalGrid {
            radii,
            angles_per_ring,
            boundary_angles,
        })
    }

    /// `rings` equally spaced radii in `(0, 1)` with `angles` points each.
    pub fn uniform(rings: usize, angles: usize, boundary_angles: usize) -> Result<Self> {
        let radii = (1..=rings)
            .map(|k| k as f64 / (rings + 1) as f64)
            .collect();
        Self::new(radii, angles, boundary_angles)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles_per_ring(&self) -> usize {
        self.angles_per_ring
    }

    pub fn boundary_angles(&self) -> usize {
        self.boundary_angles
    }

    /// Checks the boundary density against the largest degree involved.
    pub fn check_density(&self, degree: usize) -> Result<()> {
        let floor = 64 * degree;
        if self.boundary_angles < floor {
            return Err(Error::TooFewAngles {
                given: self.boundary_angles,
                floor,
            });
        }
        Ok(())
    }

    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        let m = self.angles_per_ring;
        self.radii.iter().flat_map(move |&r| {
            (0..m).map(move |k| Complex64::from_polar(r, TAU * k as f64 / m as f64))
        })
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angles_per_ring
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
