//! Numerical certificates for a class of normalized harmonic maps of the unit
//! disk defined by a bound on the deficiency `F - zF'`.
//!
//! A harmonic map `f = h + conj(g)` belongs to the class with parameter
//! `lambda > 0` when `|h - zh'| + |g - zg'| < lambda` throughout the open
//! disk; an analytic `F` belongs to the companion class when
//! `|F - zF'| < lambda`. The crate turns membership, the associated radii,
//! growth bounds and closure properties into runnable checks.
//!
//! * [`series`] truncated power-series algebra
//! * [`specfun`] Gamma, rising factorials, `F(a, b; c; 1)`
//! * [`membership`] boundary-maximum certificates and coefficient tests
//! * [`geometry`] envelopes, radii, differential tests, closure, curve audit
//! * [`catalog`] named example maps and closed-form thresholds

pub mod catalog;
pub mod error;
pub mod geometry;
pub mod membership;
pub mod scan;
pub mod series;
pub mod specfun;

pub use error::{Error, Result};
pub use membership::{ClassParams, HarmonicMap, MembershipReport, Verdict};
pub use num_complex::Complex64;
pub use series::AnalyticSeries;
