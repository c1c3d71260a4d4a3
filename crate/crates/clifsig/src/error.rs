//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("grid shape mismatch: expected {expected:?}, got {got:?}")]
    ShapeMismatch {
        expected: Vec<usize>,
        got: Vec<usize>,
    },

    #[error("unsupported algebra dimension {dim}: transform pipelines require L = 3")]
    UnsupportedDim { dim: usize },

    #[error("field is in the {got:?} domain, expected {expected:?}")]
    WrongDomain {
        expected: crate::field::Domain,
        got: crate::field::Domain,
    },

    #[error("brute-force transform guard: {cells} cells exceeds the {max} cell limit")]
    OracleGuard { cells: usize, max: usize },

    #[error(
        "multiplier `{name}` failed validation at bin {bin:?}: |a^2 - 1| residual {residual:.3e} exceeds {tolerance:.1e}"
    )]
    InvalidMultiplier {
        name: String,
        bin: Vec<i64>,
        residual: f64,
        tolerance: f64,
    },

    #[error("multiplier parameter out of range: {0}")]
    BadParameter(String),

    #[error("operation requires a vector-kind multiplier, got scalar kind")]
    ScalarKind,

    #[error("operation requires a scalar-kind multiplier, got vector kind")]
    VectorKind,

    #[error("orientation field is not unit length at cell {cell}: norm {norm}")]
    NonUnitOrientation { cell: usize, norm: f64 },

    #[error("{0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
