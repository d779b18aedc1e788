use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?} (expected an integer or \"p/q\")")]
pub struct ParseRationalError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionError { expected: usize, got: usize },

    #[error("diagonal is unbounded: no constraint bounds the direction (1, ..., 1)")]
    UnboundedDiagonal,

    #[error("inclusion is not decidable exactly for {0}")]
    Undecidable(String),

    #[error("unsupported domain: {0}")]
    UnsupportedDomain(String),

    #[error("invalid winding data: parity alpha_plus - alpha_minus = {0} is not 0 or 1")]
    InvalidWinding(i64),

    #[error("inconsistent index data: {0}")]
    InconsistentData(String),

    #[error("eigenvalue product {0} has no rational square root")]
    IrrationalEigenvalue(String),

    #[error("degenerate path: rotation ratio {0} is an integer")]
    DegeneratePath(String),

    #[error("signature {signature} is inconsistent with eigenvalues {eigen1}, {eigen2}")]
    InvalidSignature {
        signature: i64,
        eigen1: String,
        eigen2: String,
    },

    #[error("scale factor must exceed 1, got {0}")]
    InvalidScale(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("independent computations disagree: {0}")]
    AssertionFailure(String),

    #[error("invalid building: {0}")]
    InvalidBuilding(String),

    #[error(transparent)]
    ParseRational(#[from] ParseRationalError),
}

pub type Result<T> = std::result::Result<T, Error>;
