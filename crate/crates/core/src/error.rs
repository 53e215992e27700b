use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not the Ehrhart polynomial of a lattice polytope: {0}")]
    NotLatticeEhrhart(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid construction: {0}")]
    Validation(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("malformed Ehrhart polynomial: {0}")]
    MalformedEhrhart(String),

    #[error("sign pattern is not strict: {0}")]
    NonStrictPattern(String),

    #[error("outside domain: {0}")]
    Domain(String),

    #[error("coefficients are not affine in m: {0}")]
    NotAffine(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("syntax error at byte {offset}: expected {}", expected.join(" | "))]
    Syntax { offset: usize, expected: Vec<String> },
}

pub type Result<T> = std::result::Result<T, Error>;
