use thiserror::Error;

/// Failures of the exact and certified numeric kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precision cap of {cap} bits reached before the requested width")]
    PrecisionExhausted { cap: u32 },
    #[error("enclosure too wide to locate a nearest integer (width >= 1/4)")]
    AmbiguousEnclosure,
    #[error("unknown variable index {0}")]
    UnknownVariable(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("exact division failed: {0}")]
    DivisionFailure(String),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("bad prime {0}: {1}")]
    BadPrime(u64, String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("gcd of the exponent set is {0}, expected 1")]
    GcdNotOne(u64),
    #[error("invalid exponent set: {0}")]
    InvalidSet(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MembershipError {
    #[error("non-homogeneous input: {0}")]
    DegreeMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyticError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("requested width unreachable at precision cap {0}")]
    WidthUnreachable(u32),
    #[error("precondition not verifiable from the enclosures: {0}")]
    PreconditionUnverifiable(String),
    #[error("root count mismatch for n={n}: found {found}, expected {expected}")]
    CountMismatch { n: u32, found: usize, expected: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Analytic(#[from] AnalyticError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("replay mismatch in step {step} ({op}): {detail}")]
    ReplayMismatch { step: usize, op: String, detail: String },
}
