use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("state is not normalized (|norm^2 - 1| = {deviation:.3e})")]
    NotNormalized { deviation: f64 },

    #[error("invalid exponent {p}: {reason}")]
    InvalidExponent { p: f64, reason: &'static str },

    #[error("grid cannot resolve the requested state: {0}")]
    Range(String),

    #[error("distribution leaves the canonical comb class: {0}")]
    NotInClass(String),

    #[error("comb is not a Fourier eigenvector (deviation {deviation:.3e})")]
    NotEigenvector { deviation: f64 },

    #[error("zero distribution: {0}")]
    Zero(String),

    #[error("projected start vector vanishes in the requested subspace")]
    EmptyStart,

    #[error("invalid argument: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
