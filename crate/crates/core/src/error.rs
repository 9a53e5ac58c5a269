//! Error type shared by all numerical operations.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation
    /// (e.g. a probability outside (0,1), an unattainable Kendall tau).
    Domain(String),
    /// Vector or matrix dimensions do not match.
    Dimension { expected: usize, got: usize },
    /// An iterative procedure failed to converge or produced a non-finite
    /// intermediate; the message carries diagnostics.
    Numerical(String),
    /// A matrix required to be positive definite / full rank is not.
    Singular(String),
    /// The model structure is representable but not supported by this
    /// operation (e.g. general R-vines in transform/density evaluations).
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Dimension { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::Numerical(msg) => write!(f, "numerical error: {msg}"),
            Error::Singular(msg) => write!(f, "singular matrix: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported structure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
