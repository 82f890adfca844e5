use thiserror::Error;

/// Errors surfaced by fallible operations.
///
/// Contract violations that can only arise from buggy calling code (dimension
/// mismatches between matrices the library itself produced, and the like)
/// panic instead; everything a caller can trigger with bad input lands here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("algebra verification failed: {0}")]
    InvalidAlgebra(String),

    #[error("module verification failed: {0}")]
    InvalidModule(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("module is not torsionless: ker(phi) has dimension {ker_dim}")]
    NotTorsionless { ker_dim: usize },

    #[error("module is not reduced: projective part of dimension {proj_dim}")]
    NotReduced { proj_dim: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
