//! Error type shared across the toolkit.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, SqueezeError>;

#[derive(Debug, Error)]
pub enum SqueezeError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("shape violation: {0}")]
    ShapeViolation(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("point is not inside the domain")]
    OutsideDomain,

    #[error("point is not on the boundary (defining value {0:.3e})")]
    NotOnBoundary(f64),

    #[error("singular point of the defining function: {0}")]
    SingularPoint(String),

    #[error("operation `{op}` does not support domain variant `{variant}`")]
    UnsupportedVariant { op: &'static str, variant: String },

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("invalid escape witness: {0}")]
    InvalidWitness(String),

    #[error("invalid osculation data: {0}")]
    InvalidOsculation(String),

    #[error("invalid domain sequence: {0}")]
    InvalidSequence(String),

    #[error("expansion extraction ill-conditioned ({what}, condition estimate {cond:.3e})")]
    IllConditioned { what: String, cond: f64 },

    #[error("degenerate metric bracket: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
