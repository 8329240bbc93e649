use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported triple: {0}")]
    UnsupportedTriple(String),

    #[error("point ({x}, {y}) is not in the open triangle")]
    OutsideTriangle { x: f64, y: f64 },

    #[error("{triple}: singular formula at k={k}, p=({x}, {y})")]
    EvaluationSingularity { triple: String, k: u64, x: f64, y: f64 },

    #[error("{triple}: no digit up to {k_max} for p=({x}, {y})")]
    DigitNotFound { triple: String, x: f64, y: f64, k_max: u64 },

    #[error("{triple}: ambiguous digit at p=({x}, {y}), candidates {candidates:?}")]
    AmbiguousDigit { triple: String, x: f64, y: f64, candidates: Vec<u64> },

    #[error("{triple}: branch family is not projective in k ({detail})")]
    InconsistentBranchFamily { triple: String, detail: String },

    #[error("{triple}: image of ({x}, {y}) under digit {digit} lies on the boundary")]
    BoundaryHit { triple: String, x: f64, y: f64, digit: u64 },

    #[error("step {index}: {source}")]
    StepFailed { index: usize, source: Box<Error> },

    #[error("series tail not below {eps:e} by k = {k_max}")]
    TruncationFailure { eps: f64, k_max: u64 },

    #[error("finite-difference stencil leaves the triangle at ({x}, {y})")]
    StencilOutOfDomain { x: f64, y: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} did not converge (error estimate {estimate:e})")]
    NonConvergent { what: String, estimate: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{0}: no tabulated eigenfunction")]
    NoEigenfunction(String),

    #[error("{0}: no tabulated Banach weight")]
    NoBanachRow(String),

    #[error("{0}: no tabulated density")]
    NoDensity(String),

    #[error("{0}: no tabulated Hilbert row")]
    NoHilbertRow(String),
}
