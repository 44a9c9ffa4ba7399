use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("resultant of two zero polynomials is undefined")]
    BothZero,

    #[error("polynomial is not of pure cyclotomic shape (content 1, no remainder)")]
    ShapeNotCyclotomic,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("degree {degree} exceeds the configured budget of {budget}")]
    DegreeLimit { degree: usize, budget: usize },

    #[error("resultant {resultant} disagrees with multiplication-matrix determinant {determinant}")]
    OracleMismatch { resultant: String, determinant: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn size(msg: impl Into<String>) -> Self {
        Error::SizeLimit(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size ceilings shared by every operation that can blow up on large input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest polynomial degree that will be materialized (Φ_m, X^n - a, parser output).
    pub degree_budget: usize,
    /// Largest integer handed to trial-division factorization.
    pub factor_ceiling: u64,
    /// Largest modulus for which a residue table is enumerated.
    pub residue_ceiling: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            degree_budget: 10_000,
            factor_ceiling: 1_000_000_000,
            residue_ceiling: 10_000_000,
        }
    }
}
