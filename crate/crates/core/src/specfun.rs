//! Real special functions: Gamma on the positive axis, rising factorials, and
//! the Gauss hypergeometric series at `z = 1`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest argument for which `gamma` stays finite.
const GAMMA_OVERFLOW: f64 = 171.6;

const INTEGER_TOL: f64 = 1e-12;

fn lanczos_sum(x: f64) -> f64 {
    // x is the shifted argument (Gamma(x + 1) is being approximated)
    LANCZOS_P
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS_P[0], |acc, (k, p)| acc + p / (x + k as f64))
}

/// `Gamma(x)` for `x > 0`.
pub fn gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("gamma needs a positive finite argument, got {x}")));
    }
    if x.fract() == 0.0 && x <= 171.0 {
        return Ok((2..x as u64).fold(1.0, |acc, k| acc * k as f64));
    }
    if x < 0.5 {
        return Ok(gamma(x + 1.0)? / x);
    }
    if x > GAMMA_OVERFLOW {
        return Ok(f64::INFINITY);
    }
    let s = x - 1.0;
    let w = s + LANCZOS_G + 0.5;
    // split the power so w^(s + 1/2) never overflows before exp(-w) scales it
    let half = w.powf(0.5 * (s + 0.5));
    Ok((2.0 * PI).sqrt() * half * (w.exp().recip() * half) * lanczos_sum(s))
}

/// `ln Gamma(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma needs a positive finite argument, got {x}")));
    }
    if x < 0.5 {
        return Ok(ln_gamma(x + 1.0)? - x.ln());
    }
    if x < 20.0 {
        return Ok(gamma(x)?.ln());
    }
    let s = x - 1.0;
    let w = s + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * PI).ln() + (s + 0.5) * w.ln() - w + lanczos_sum(s).ln())
}

/// Rising factorial `(x)_n = x (x + 1) ... (x + n - 1)`, `(x)_0 = 1`.
pub fn pochhammer(x: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (x + k as f64))
}

/// `n!` as a double (exact up to `22!`).
pub fn factorial(n: usize) -> f64 {
    pochhammer(1.0, n)
}

/// Binomial coefficient `C(s, k)` computed in integers.
pub fn binomial(s: u64, k: u64) -> f64 {
    if k > s {
        return 0.0;
    }
    let k = k.min(s - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (s - i) as u128 / (i + 1) as u128;
    }
    acc as f64
}

fn nonpositive_integer(x: f64) -> Option<usize> {
    if x <= INTEGER_TOL && (x - x.round()).abs() <= INTEGER_TOL {
        Some((-x.round()) as usize)
    } else {
        None
    }
}

/// Parameters `(a, b, c)` of `F(a, b; c; z)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HypergeomParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypergeomParams {
    /// Rejects `c` in `{0, -1, -2, ...}` and non-finite input.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::InvalidParams("a, b, c must be finite".into()));
        }
        if nonpositive_integer(c).is_some() {
            return Err(Error::InvalidParams(format!(
                "c = {c} must not be zero or a negative integer"
            )));
        }
        Ok(HypergeomParams { a, b, c })
    }

    /// `c - a - b`, the convergence exponent at `z = 1`.
    pub fn excess(&self) -> f64 {
        self.c - self.a - self.b
    }

    /// Number of nonzero terms when `a` or `b` is a non-positive integer.
    pub fn terminating_length(&self) -> Option<usize> {
        match (nonpositive_integer(self.a), nonpositive_integer(self.b)) {
            (Some(m), Some(n)) => Some(m.min(n) + 1),
            (Some(m), None) | (None, Some(m)) => Some(m + 1),
            (None, None) => None,
        }
    }

    /// `(a)_n (b)_n / (n! (c)_n)`.
    pub fn term(&self, n: usize) -> f64 {
        pochhammer(self.a, n) * pochhammer(self.b, n) / factorial(n) / pochhammer(self.c, n)
    }
}

/// `F(a, b; c; 1)`: exact finite sum for terminating series, otherwise the
/// Gamma closed form (requires `c - a - b > 0`).
pub fn gauss_value(p: &HypergeomParams) -> Result<f64> {
    if let Some(len) = p.terminating_length() {
        return Ok(hyper_coefficients(p, len - 1).iter().sum());
    }
    if !(p.excess() > 0.0) {
        return Err(Error::Domain(format!(
            "F(a, b; c; 1) diverges: c - a - b = {} is not positive",
            p.excess()
        )));
    }
    gamma_quotient(p.c, p.excess(), p.c - p.a, p.c - p.b)
}

/// `Gamma(x1) Gamma(x2) / (Gamma(y1) Gamma(y2))` without intermediate overflow.
fn gamma_quotient(x1: f64, x2: f64, y1: f64, y2: f64) -> Result<f64> {
    if [x1, x2, y1, y2].iter().all(|&x| x < 170.0) {
        Ok((gamma(x1)? / gamma(y1)?) * (gamma(x2)? / gamma(y2)?))
    } else {
        Ok((ln_gamma(x1)? + ln_gamma(x2)? - ln_gamma(y1)? - ln_gamma(y2)?).exp())
    }
}

/// Terms `t_0..=t_n` of the series at `z = 1`, by the ratio recurrence
/// `t_{k+1} = t_k (a + k)(b + k) / ((c + k)(k + 1))`.
pub fn hyper_coefficients(p: &HypergeomParams, n: usize) -> Vec<f64> {
    let mut terms = Vec::with_capacity(n + 1);
    let mut t = 1.0;
    terms.push(t);
    for k in 0..n {
        let k = k as f64;
        t *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1.0));
        terms.push(t);
    }
    terms
}

/// `sum_n (n + 1) (a)_n (b)_n / (n! (c)_n)` in closed form
/// `(ab / (c - a - b - 1) + 1) F(a, b; c; 1)`.
///
/// Needs `c - a - b - 1 > 0` with positive `a, b, c`, or a terminating series.
pub fn index_weighted_sum(p: &HypergeomParams) -> Result<f64> {
    if let Some(len) = p.terminating_length() {
        return Ok(hyper_coefficients(p, len - 1)
            .iter()
            .enumerate()
            .map(|(n, t)| (n + 1) as f64 * t)
            .sum());
    }
    if !(p.a > 0.0 && p.b > 0.0 && p.c > 0.0) {
        return Err(Error::Domain("weighted sum needs positive a, b, c".into()));
    }
    let gap = p.excess() - 1.0;
    if !(gap > 0.0) {
        return Err(Error::Domain(format!(
            "weighted sum diverges: c - a - b - 1 = {gap} is not positive"
        )));
    }
    Ok((p.a * p.b / gap + 1.0) * gauss_value(p)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gamma_closed_forms() {
        assert!(rel(gamma(5.0).unwrap(), 24.0) < 1e-12);
        assert!(rel(gamma(0.5).unwrap(), PI.sqrt()) < 1e-12);
        assert!(rel(gamma(2.5).unwrap(), 0.75 * PI.sqrt()) < 1e-12);
        assert!(rel(gamma(1.0).unwrap(), 1.0) < 1e-15);
        assert!(rel(gamma(0.1).unwrap(), 9.513_507_698_668_732) < 1e-12);
        assert!(gamma(0.0).is_err());
        assert!(gamma(-1.5).is_err());
        assert!(gamma(f64::NAN).is_err());
    }

    #[test]
    fn ln_gamma_matches_gamma() {
        for &x in &[0.3, 1.7, 12.5, 25.0, 60.25, 150.5] {
            assert!((ln_gamma(x).unwrap() - gamma(x).unwrap().ln()).abs() < 1e-12 * x.max(1.0));
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(3.0, 0), 1.0);
        assert_eq!(pochhammer(2.0, 3), 24.0);
        assert_eq!(pochhammer(-2.0, 3), 0.0);
        assert_eq!(binomial(10, 3), 120.0);
        assert_eq!(binomial(3, 5), 0.0);
    }

    #[test]
    fn gauss_examples() {
        let p = HypergeomParams::new(0.0, 2.5, 1.5).unwrap();
        assert_eq!(gauss_value(&p).unwrap(), 1.0);
        let p = HypergeomParams::new(1.0, 1.0, 3.0).unwrap();
        assert!((gauss_value(&p).unwrap() - 2.0).abs() < 1e-12);
        let c = 2.75;
        let p = HypergeomParams::new(-1.0, -1.0, c).unwrap();
        assert!((gauss_value(&p).unwrap() - (1.0 + 1.0 / c)).abs() < 1e-15);
        // (1, 1, c) sums to (c - 1) / (c - 2)
        let p = HypergeomParams::new(1.0, 1.0, 10.0).unwrap();
        assert!((gauss_value(&p).unwrap() - 9.0 / 8.0).abs() < 1e-12);

        let p = HypergeomParams::new(1.0, 1.0, 2.0).unwrap();
        assert!(matches!(gauss_value(&p), Err(Error::Domain(_))));
        assert!(HypergeomParams::new(1.0, 1.0, -3.0).is_err());
        assert!(HypergeomParams::new(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn coefficient_stream_examples() {
        let p = HypergeomParams::new(1.0, 1.0, 3.0).unwrap();
        let t = hyper_coefficients(&p, 2);
        assert_eq!(t.len(), 3);
        for (n, expected) in [1.0, 1.0 / 3.0, 1.0 / 6.0].into_iter().enumerate() {
            assert!((t[n] - expected).abs() < 1e-15);
            assert!((t[n] - p.term(n)).abs() < 1e-15);
        }
        let p = HypergeomParams::new(0.0, 1.5, 2.5).unwrap();
        assert_eq!(hyper_coefficients(&p, 5), vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let p = HypergeomParams::new(-1.0, -1.0, 2.0).unwrap();
        assert_eq!(hyper_coefficients(&p, 3), vec![1.0, 0.5, 0.0, 0.0]);
    }

    #[test]
    fn weighted_sum_examples() {
        let p = HypergeomParams::new(1.0, 1.0, 4.0).unwrap();
        assert!((index_weighted_sum(&p).unwrap() - 3.0).abs() < 1e-12);
        let p = HypergeomParams::new(0.0, 3.0, 5.0).unwrap();
        assert_eq!(index_weighted_sum(&p).unwrap(), 1.0);
        let c = 1.5;
        let p = HypergeomParams::new(-1.0, -1.0, c).unwrap();
        assert!((index_weighted_sum(&p).unwrap() - (1.0 + 2.0 / c)).abs() < 1e-15);
        let p = HypergeomParams::new(1.0, 1.0, 3.0).unwrap();
        assert!(index_weighted_sum(&p).is_err());
    }

    #[test]
    fn terminating_detects_float_noise() {
        let p = HypergeomParams::new(-2.0 + 1e-14, 0.5, 1.0).unwrap();
        assert_eq!(p.terminating_length(), Some(3));
        let p = HypergeomParams::new(-2.0, -5.0, 1.0).unwrap();
        assert_eq!(p.terminating_length(), Some(3));
    }
}
