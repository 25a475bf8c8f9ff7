use thiserror::Error;

use crate::membership::Verdict;

/// Errors raised by the kernel. Every variant is a contract violation on the
/// caller's side; numerical routines themselves never fail silently.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("linear combination needs at least one operand")]
    NoOperands,

    #[error("zeta must lie on the unit circle (|zeta| = {0})")]
    NotUnimodular(f64),

    #[error("{0}")]
    NotNormalized(String),

    #[error("co-analytic linear term must vanish (b1 = {0})")]
    CoanalyticLinearTerm(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("angular grid too coarse: {given} angles, need at least {floor}")]
    TooFewAngles { given: usize, floor: usize },

    #[error("need at least {floor} zeta samples, got {given}")]
    TooFewZetaSamples { given: usize, floor: usize },

    #[error("need at least {floor} curve samples, got {given}")]
    TooFewSamples { given: usize, floor: usize },

    #[error("invalid evaluation grid: {0}")]
    InvalidGrid(String),

    #[error("weights do not form a convex system: {0}")]
    NotConvex(String),

    #[error("input is not a member of the class (verdict {0:?})")]
    NotMember(Verdict),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
