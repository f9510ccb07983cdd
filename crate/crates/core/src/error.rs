use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("the Hopf algebra is not involutive (S^2 != id)")]
    InvolutivityRequired,

    #[error("unsupported input: {0}")]
    WrongInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation failed for {what}:\n{report}")]
    Validation { what: String, report: String },

    #[error("i/o error")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
