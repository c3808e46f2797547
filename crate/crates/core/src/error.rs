use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid algebra parameter: {0}")]
    InvalidParameter(String),

    #[error("weight has {got} coordinates, expected {expected} ({layout})")]
    DimensionMismatch {
        expected: usize,
        got: usize,
        layout: String,
    },

    #[error("root {0} is isotropic, it has no coroot")]
    IsotropicRoot(String),

    #[error("{0} is not an isotropic simple root of the base")]
    NotIsotropicSimple(String),

    #[error("not a base of this algebra: {0}")]
    InvalidBase(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("oracle job refused ({reason}): estimated cost {estimate} exceeds limit {limit}")]
    OracleCap {
        reason: String,
        estimate: u64,
        limit: u64,
    },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("module is not bounded; no degree bound exists")]
    NotBounded,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
