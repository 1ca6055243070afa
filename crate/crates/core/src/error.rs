use alloc::string::String;

use crate::algebra::MAX_VARS;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("{0} variables requested, at most {MAX_VARS} are supported")]
    TooManyVariables(usize),
    #[error("duplicate or empty variable name `{0}`")]
    BadVariableName(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error("the ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("saturation did not stabilize within {0} colon steps")]
    SaturationDidNotStabilize(usize),
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("expected a polynomial in a univariate ring")]
    NotUnivariate,
    #[error("exact division failed: nonzero remainder")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed weight: {0}")]
    MalformedWeight(String),
    #[error("first-order product undefined for untracked classes: {0}")]
    UntrackedProduct(String),
    #[error("elements belong to different quantum rings")]
    ModeMismatch,
    #[error("claim falsified: {0}")]
    Falsified(String),
    #[error("not a singular germ at the origin: {0}")]
    NotSingularGerm(String),
    #[error("the Jacobian ideal is not zero-dimensional (non-isolated singularity)")]
    NonIsolated,
    #[error("germ has corank {0}; only corank at most one is classified")]
    NotCorankOne(usize),
}
