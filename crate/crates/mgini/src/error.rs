//! Crate-wide error type.

use std::fmt;

/// Errors from domain validation, data handling, or numerical evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Command line could not be interpreted.
    Usage(String),
    /// Argument outside a function's mathematical domain.
    Domain(String),
    /// Invalid configuration (tolerances, subdivision limits, simulation grid).
    Config(String),
    /// A sample violates the estimator's requirements.
    Sample(String),
    /// Input data could not be read or parsed.
    Data(String),
    /// An iterative scheme (series, continued fraction, quadrature) failed to converge.
    Convergence(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Usage(msg) => write!(f, "usage: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Config(msg) => write!(f, "invalid configuration: {msg}"),
            Error::Sample(msg) => write!(f, "invalid sample: {msg}"),
            Error::Data(msg) => write!(f, "data error: {msg}"),
            Error::Convergence(msg) => write!(f, "convergence failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
