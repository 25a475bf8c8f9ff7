//! Named example functions and the closed-form belongingness thresholds for
//! maps whose co-analytic part is built from the Gauss hypergeometric series.
//!
//! Conventions worth knowing:
//! * `p2`'s co-analytic sum starts at the `z^2` term. The `n = 0` term of the
//!   binomial formula would contribute `conj(eta z)`, which is not allowed
//!   for a normalized map and is absent from the hypergeometric function it
//!   specializes.
//! * The polynomial thresholds are the Gauss-type thresholds evaluated at
//!   `a = b = -s`, so `Gamma(c + m)` reads `Gamma(c + s)` and both sides
//!   carry the same `lambda / |eta|` as the hypergeometric conditions.
//! * Every threshold is a strict inequality; equality reports `holds = false`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::membership::HarmonicMap;
use crate::series::{AnalyticSeries, DEFAULT_TRUNCATION};
use crate::specfun::{
    binomial, factorial, gamma, gauss_value, index_weighted_sum, ln_gamma, pochhammer,
    HypergeomParams,
};

/// Beyond this index the hypergeometric terms switch from running products
/// to the ratio recurrence.
const PRODUCT_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExampleName {
    /// `z + lambda z^2 / 2 + lambda z^3 / 4`.
    Eq13,
    /// `z + lambda/(n-1) z^n`.
    FA,
    /// `z - lambda/(n-1) conj(z)^n`.
    FB,
    /// `z + lambda eta z^2`.
    F3,
    /// `z + conj(eta z int_0^z F(a, b; c; t) dt)`.
    F4,
    /// `z + conj(eta z (F(a, b; c; z) - 1))`.
    F5,
    /// `z + conj(eta z^2 F(a, b; c; z))`.
    F6,
    P1,
    P2,
    P3,
}

impl ExampleName {
    pub const ALL: [ExampleName; 10] = [
        ExampleName::Eq13,
        ExampleName::FA,
        ExampleName::FB,
        ExampleName::F3,
        ExampleName::F4,
        ExampleName::F5,
        ExampleName::F6,
        ExampleName::P1,
        ExampleName::P2,
        ExampleName::P3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ExampleName::Eq13 => "eq13",
            ExampleName::FA => "f_a",
            ExampleName::FB => "f_b",
            ExampleName::F3 => "f3",
            ExampleName::F4 => "f4",
            ExampleName::F5 => "f5",
            ExampleName::F6 => "f6",
            ExampleName::P1 => "p1",
            ExampleName::P2 => "p2",
            ExampleName::P3 => "p3",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|n| n.as_str() == name)
    }
}

/// Parameters for [`make_example`]; unused fields are ignored per name.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CatalogParams {
    pub name: ExampleName,
    pub lambda: f64,
    pub eta: Complex64,
    pub n: usize,
    pub hyper: Option<HypergeomParams>,
    pub s: Option<u64>,
    pub c: Option<f64>,
    pub truncation: usize,
}

impl CatalogParams {
    pub fn new(name: ExampleName, lambda: f64) -> Self {
        CatalogParams {
            name,
            lambda,
            eta: Complex64::new(1.0, 0.0),
            n: 2,
            hyper: None,
            s: None,
            c: None,
            truncation: DEFAULT_TRUNCATION,
        }
    }

    pub fn eta(mut self, eta: Complex64) -> Self {
        self.eta = eta;
        self
    }

    pub fn index(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn hyper(mut self, p: HypergeomParams) -> Self {
        self.hyper = Some(p);
        self
    }

    pub fn poly(mut self, s: u64, c: f64) -> Self {
        self.s = Some(s);
        self.c = Some(c);
        self
    }

    pub fn truncation(mut self, n: usize) -> Self {
        self.truncation = n;
        self
    }
}

fn check_eta(eta: Complex64) -> Result<()> {
    let m = eta.norm();
    if !(m > 0.0 && m <= 1.0) {
        return Err(Error::InvalidParams(format!("|eta| = {m} must lie in (0, 1]")));
    }
    Ok(())
}

fn check_hyper(p: &HypergeomParams, min_excess: f64) -> Result<()> {
    if !(p.a > 0.0 && p.b > 0.0 && p.c > 0.0) {
        return Err(Error::InvalidParams(format!(
            "a, b, c must be positive, got ({}, {}, {})",
            p.a, p.b, p.c
        )));
    }
    if !(p.excess() > min_excess) {
        return Err(Error::InvalidParams(format!(
            "need c - a - b > {min_excess}, got {}",
            p.excess()
        )));
    }
    Ok(())
}

fn check_poly(s: Option<u64>, c: Option<f64>) -> Result<(u64, f64)> {
    let s = s.ok_or_else(|| Error::InvalidParams("missing s".into()))?;
    let c = c.ok_or_else(|| Error::InvalidParams("missing c".into()))?;
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::InvalidParams(format!("c = {c} must be positive")));
    }
    Ok((s, c))
}

fn real_series(coeffs: Vec<f64>) -> AnalyticSeries {
    AnalyticSeries::from_real(&coeffs)
}

fn coanalytic(eta: Complex64, coeffs: &[(usize, f64)]) -> AnalyticSeries {
    let degree = coeffs.iter().map(|&(n, _)| n).max().unwrap_or(0);
    let mut g = vec![Complex64::new(0.0, 0.0); degree + 1];
    for &(n, v) in coeffs {
        g[n] = eta * v;
    }
    AnalyticSeries::new(g)
}

/// Which power of `z` carries the `k`-th hypergeometric term, and the
/// divisor applied to `(a)_k (b)_k / (c)_k`.
#[derive(Clone, Copy)]
enum Shape {
    /// `z^{k+2}` with `(k + 1)!`.
    Integrated,
    /// `z^{k+1}` with `k!`, `k >= 1`.
    Shifted,
    /// `z^{k+2}` with `k!`.
    Multiplied,
}

impl Shape {
    fn power(self, k: usize) -> usize {
        match self {
            Shape::Integrated | Shape::Multiplied => k + 2,
            Shape::Shifted => k + 1,
        }
    }

    fn divisor(self, k: usize) -> f64 {
        match self {
            Shape::Integrated => factorial(k + 1),
            Shape::Shifted | Shape::Multiplied => factorial(k),
        }
    }

    fn first(self) -> usize {
        match self {
            Shape::Shifted => 1,
            _ => 0,
        }
    }
}

/// Real coefficients `(power, value)` of the co-analytic part before the
/// factor `eta`, up to `z^truncation`.
fn hyper_terms(p: &HypergeomParams, shape: Shape, truncation: usize) -> Vec<(usize, f64)> {
    let mut out = Vec::new();
    let mut k = shape.first();
    let mut last: Option<(usize, f64)> = None;
    while shape.power(k) <= truncation {
        let v = if k <= PRODUCT_LIMIT {
            pochhammer(p.a, k) * pochhammer(p.b, k) / shape.divisor(k) / pochhammer(p.c, k)
        } else {
            // t_{k} / t_{k-1} = (a + k - 1)(b + k - 1) / ((c + k - 1) d_k)
            let (_, prev) = last.expect("recurrence needs a previous term");
            let j = (k - 1) as f64;
            let step = match shape {
                Shape::Integrated => (k + 1) as f64,
                Shape::Shifted | Shape::Multiplied => k as f64,
            };
            prev * (p.a + j) * (p.b + j) / ((p.c + j) * step)
        };
        out.push((shape.power(k), v));
        last = Some((shape.power(k), v));
        k += 1;
    }
    out
}

/// Rational part `C(s, k) (s - k + 1)_k` of the `k`-th polynomial term.
fn poly_numerator(s: u64, k: u64) -> f64 {
    binomial(s, k) * pochhammer((s - k + 1) as f64, k as usize)
}

fn poly_terms(s: u64, c: f64, shape: Shape) -> Vec<(usize, f64)> {
    (shape.first() as u64..=s)
        .map(|k| {
            let den = match shape {
                Shape::Integrated => (k + 1) as f64,
                Shape::Shifted | Shape::Multiplied => 1.0,
            };
            let v = poly_numerator(s, k) / den / pochhammer(c, k as usize);
            (shape.power(k as usize), v)
        })
        .collect()
}

fn shape_of(name: ExampleName) -> Shape {
    match name {
        ExampleName::F4 | ExampleName::P1 => Shape::Integrated,
        ExampleName::F5 | ExampleName::P2 => Shape::Shifted,
        _ => Shape::Multiplied,
    }
}

/// Builds the named example.
pub fn make_example(params: &CatalogParams) -> Result<HarmonicMap> {
    let lambda = params.lambda;
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidParams(format!("lambda must be positive, got {lambda}")));
    }
    let identity = AnalyticSeries::identity();
    match params.name {
        ExampleName::Eq13 => HarmonicMap::analytic(real_series(vec![0.0, 1.0, lambda / 2.0, lambda / 4.0])),
        ExampleName::FA | ExampleName::FB => {
            let n = params.n;
            if n < 2 {
                return Err(Error::InvalidParams(format!("index n = {n} must be at least 2")));
            }
            let mut c = vec![0.0; n + 1];
            let v = lambda / (n - 1) as f64;
            if params.name == ExampleName::FA {
                c[1] = 1.0;
                c[n] = v;
                HarmonicMap::analytic(real_series(c))
            } else {
                c[n] = -v;
                HarmonicMap::new(identity, real_series(c))
            }
        }
        ExampleName::F3 => {
            check_eta(params.eta)?;
            let h = AnalyticSeries::new(vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                params.eta * lambda,
            ]);
            HarmonicMap::analytic(h)
        }
        ExampleName::F4 | ExampleName::F5 | ExampleName::F6 => {
            check_eta(params.eta)?;
            let p = params
                .hyper
                .ok_or_else(|| Error::InvalidParams("missing hypergeometric parameters".into()))?;
            let min_excess = if params.name == ExampleName::F4 { 0.0 } else { 1.0 };
            check_hyper(&p, min_excess)?;
            if params.truncation < 2 {
                return Err(Error::InvalidParams("truncation must be at least 2".into()));
            }
            let terms = hyper_terms(&p, shape_of(params.name), params.truncation);
            HarmonicMap::new(identity, coanalytic(params.eta, &terms))
        }
        ExampleName::P1 | ExampleName::P2 | ExampleName::P3 => {
            check_eta(params.eta)?;
            let (s, c) = check_poly(params.s, params.c)?;
            let terms = poly_terms(s, c, shape_of(params.name));
            HarmonicMap::new(identity, coanalytic(params.eta, &terms))
        }
    }
}

/// Co-analytic coefficients of `f4`/`f5`/`f6` evaluated with real `a`, `b`
/// that may be non-positive integers (the polynomial specialization). No
/// positivity or convergence guard is applied.
pub fn hyper_coanalytic_unchecked(
    name: ExampleName,
    p: &HypergeomParams,
    eta: Complex64,
    truncation: usize,
) -> Option<AnalyticSeries> {
    match name {
        ExampleName::F4 | ExampleName::F5 | ExampleName::F6 => {
            let terms = hyper_terms(p, shape_of(name), truncation);
            Some(coanalytic(eta, &terms))
        }
        _ => None,
    }
}

/// Result of a threshold evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConditionReport {
    pub holds: bool,
    pub lhs: f64,
    /// `lambda / |eta|`.
    pub rhs: f64,
    /// `lhs == rhs` exactly.
    pub equality: bool,
}

impl ConditionReport {
    fn new(lhs: f64, rhs: f64) -> Self {
        ConditionReport {
            holds: lhs < rhs,
            lhs,
            rhs,
            equality: lhs == rhs,
        }
    }
}

/// Threshold for the hypergeometric maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperCondition {
    /// `F(a, b; c; 1) < lambda / |eta|`, for `f4`.
    Gauss,
    /// `ab / (c - a - b - 1) F(a, b; c; 1) < lambda / |eta|`, for `f5`.
    Shifted,
    /// `(ab / (c - a - b - 1) + 1) F(a, b; c; 1) < lambda / |eta|`, for `f6`.
    Weighted,
}

impl HyperCondition {
    pub fn example(self) -> ExampleName {
        match self {
            HyperCondition::Gauss => ExampleName::F4,
            HyperCondition::Shifted => ExampleName::F5,
            HyperCondition::Weighted => ExampleName::F6,
        }
    }
}

/// Threshold for the polynomial maps, the hypergeometric thresholds at
/// `a = b = -s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyCondition {
    /// `Gamma(c) Gamma(c + 2s) / Gamma(c + s)^2 < lambda / |eta|`, for `p1`.
    Gauss,
    /// `s^2 / (c + 2s - 1)` times the above, for `p2`.
    Shifted,
    /// `(c + s^2 + 2s - 1) / (c + 2s - 1)` times the above, for `p3`.
    Weighted,
}

impl PolyCondition {
    pub fn example(self) -> ExampleName {
        match self {
            PolyCondition::Gauss => ExampleName::P1,
            PolyCondition::Shifted => ExampleName::P2,
            PolyCondition::Weighted => ExampleName::P3,
        }
    }
}

fn rhs(eta: Complex64, lambda: f64) -> Result<f64> {
    check_eta(eta)?;
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidParams(format!("lambda must be positive, got {lambda}")));
    }
    Ok(lambda / eta.norm())
}

pub fn hyper_condition(
    which: HyperCondition,
    p: &HypergeomParams,
    eta: Complex64,
    lambda: f64,
) -> Result<ConditionReport> {
    let rhs = rhs(eta, lambda)?;
    let lhs = match which {
        HyperCondition::Gauss => {
            check_hyper(p, 0.0)?;
            gauss_value(p)?
        }
        HyperCondition::Shifted => {
            check_hyper(p, 1.0)?;
            p.a * p.b / (p.excess() - 1.0) * gauss_value(p)?
        }
        HyperCondition::Weighted => {
            check_hyper(p, 1.0)?;
            index_weighted_sum(p)?
        }
    };
    Ok(ConditionReport::new(lhs, rhs))
}

/// `Gamma(c) Gamma(c + 2s) / Gamma(c + s)^2`.
fn poly_gauss_value(s: u64, c: f64) -> Result<f64> {
    let s = s as f64;
    if c + 2.0 * s < 170.0 {
        Ok((gamma(c)? / gamma(c + s)?) * (gamma(c + 2.0 * s)? / gamma(c + s)?))
    } else {
        Ok((ln_gamma(c)? + ln_gamma(c + 2.0 * s)? - 2.0 * ln_gamma(c + s)?).exp())
    }
}

pub fn poly_condition(
    which: PolyCondition,
    s: u64,
    c: f64,
    eta: Complex64,
    lambda: f64,
) -> Result<ConditionReport> {
    let rhs = rhs(eta, lambda)?;
    let (s, c) = check_poly(Some(s), Some(c))?;
    let base = poly_gauss_value(s, c)?;
    let sf = s as f64;
    // s = 0 makes the shifted factor vanish; c + 2s - 1 may then be zero.
    let shifted = if s == 0 { 0.0 } else { sf * sf / (c + 2.0 * sf - 1.0) };
    let lhs = match which {
        PolyCondition::Gauss => base,
        PolyCondition::Shifted => shifted * base,
        PolyCondition::Weighted => (shifted + 1.0) * base,
    };
    Ok(ConditionReport::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::membership::{coefficient_sufficient, ClassParams, SumOutcome};

    fn one() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn eq13_coefficients() {
        let f = make_example(&CatalogParams::new(ExampleName::Eq13, 1.0)).unwrap();
        assert_eq!(f.h(), &AnalyticSeries::from_real(&[0.0, 1.0, 0.5, 0.25]));
        assert!(f.g().is_zero());
    }

    #[test]
    fn sharp_coefficients() {
        let f = make_example(&CatalogParams::new(ExampleName::FB, 1.0).index(3)).unwrap();
        assert_eq!(f.g().coeff(3), Complex64::new(-0.5, 0.0));
        assert_eq!(f.h(), &AnalyticSeries::identity());
        let f = make_example(&CatalogParams::new(ExampleName::FA, 2.0).index(5)).unwrap();
        assert_eq!(f.h().coeff(5), Complex64::new(0.5, 0.0));
        assert!(make_example(&CatalogParams::new(ExampleName::FA, 1.0).index(1)).is_err());
    }

    #[test]
    fn polynomial_examples() {
        let f = make_example(&CatalogParams::new(ExampleName::P3, 1.0).poly(0, 2.0)).unwrap();
        assert_eq!(f.g(), &AnalyticSeries::from_real(&[0.0, 0.0, 1.0]));

        let f = make_example(&CatalogParams::new(ExampleName::P2, 1.0).poly(1, 2.0)).unwrap();
        assert_eq!(f.g(), &AnalyticSeries::from_real(&[0.0, 0.0, 0.5]));

        let f = make_example(&CatalogParams::new(ExampleName::P2, 1.0).poly(0, 2.0)).unwrap();
        assert!(f.g().is_zero());
    }

    #[test]
    fn hyper_examples() {
        let p = HypergeomParams::new(1.0, 1.0, 3.0).unwrap();
        let r = hyper_condition(HyperCondition::Gauss, &p, one(), 2.5).unwrap();
        assert!(r.holds);
        assert!((r.lhs - 2.0).abs() < 1e-12);
        let f = make_example(&CatalogParams::new(ExampleName::F4, 2.5).hyper(p)).unwrap();
        let t = coefficient_sufficient(&f, &ClassParams::new(2.5).unwrap());
        assert_eq!(t.outcome, SumOutcome::Sufficient);

        let p = HypergeomParams::new(1.0, 1.0, 10.0).unwrap();
        let r = hyper_condition(HyperCondition::Gauss, &p, one(), 1.0).unwrap();
        assert!((r.lhs - 9.0 / 8.0).abs() < 1e-12);
        assert!(!r.holds);
        assert!(hyper_condition(HyperCondition::Gauss, &p, one(), 1.2).unwrap().holds);

        let p = HypergeomParams::new(1.0, 1.0, 4.0).unwrap();
        let r = hyper_condition(HyperCondition::Weighted, &p, one(), 3.0).unwrap();
        assert!((r.lhs - 3.0).abs() < 1e-12);
        assert!(!r.holds);

        let p = HypergeomParams::new(1.0, 1.0, 3.0).unwrap();
        assert!(hyper_condition(HyperCondition::Shifted, &p, one(), 1.0).is_err());
        assert!(hyper_condition(HyperCondition::Gauss, &p, Complex64::new(0.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn poly_examples() {
        let r = poly_condition(PolyCondition::Gauss, 1, 1.0, one(), 2.0).unwrap();
        assert!((r.lhs - 2.0).abs() < 1e-12);
        assert!(!r.holds);
        assert!(poly_condition(PolyCondition::Gauss, 1, 1.0, one(), 2.0 + 1e-9).unwrap().holds);

        let r = poly_condition(PolyCondition::Shifted, 1, 2.0, one(), 0.75).unwrap();
        assert!((r.lhs - 0.5).abs() < 1e-12);
        assert!(r.holds);

        let r = poly_condition(PolyCondition::Weighted, 0, 2.0, one(), 1.5).unwrap();
        assert!((r.lhs - 1.0).abs() < 1e-15);
        let p3 = make_example(&CatalogParams::new(ExampleName::P3, 1.5).poly(0, 2.0)).unwrap();
        assert_eq!(p3.coefficient_sum(), 1.0);

        // c = 1, s = 0 is 0/0 in the factored form
        let r = poly_condition(PolyCondition::Weighted, 0, 1.0, one(), 1.5).unwrap();
        assert!((r.lhs - 1.0).abs() < 1e-15);
        assert!(poly_condition(PolyCondition::Gauss, 2, 0.0, one(), 1.0).is_err());
    }

    #[test]
    fn hyper_sum_matches_threshold() {
        let p = HypergeomParams::new(0.5, 0.75, 9.0).unwrap();
        let eta = Complex64::from_polar(0.6, 1.1);
        for (cond, name) in [
            (HyperCondition::Gauss, ExampleName::F4),
            (HyperCondition::Shifted, ExampleName::F5),
            (HyperCondition::Weighted, ExampleName::F6),
        ] {
            let r = hyper_condition(cond, &p, eta, 1.0).unwrap();
            // the tail past z^1024 is below 1e-17 for this excess
            let f = make_example(&CatalogParams::new(name, 1.0).eta(eta).hyper(p).truncation(1024)).unwrap();
            let sum = f.coefficient_sum();
            let expected = eta.norm() * r.lhs;
            assert!((sum - expected).abs() < 1e-12, "{name:?}: {sum} vs {expected}");
        }
    }

    #[test]
    fn recurrence_continues_products() {
        let p = HypergeomParams::new(0.3, 0.4, 2.5).unwrap();
        let terms = hyper_terms(&p, Shape::Integrated, 100);
        for &(power, v) in terms.iter().filter(|(pw, _)| *pw > 60 && *pw < 90) {
            let k = power - 2;
            let direct = p.term(k) / (k + 1) as f64;
            assert!(((v - direct) / direct).abs() < 1e-12, "k = {k}");
        }
    }
}
