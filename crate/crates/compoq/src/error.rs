//! Error type shared by all modules.

use std::fmt;

/// Errors produced by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter is outside the documented domain of an operation.
    InvalidParameter(String),
    /// Reciprocal requested for a series whose constant term is not +1 or -1.
    /// Over the integers only unit constant terms are invertible.
    NonInvertible { constant_term: String },
    /// A part set was materialized to a bound smaller than an operation needs.
    BoundTooSmall { bound: u64, required: u64 },
    /// A Dirichlet-side evaluation whose defining series diverges
    /// (part equal to 1, or |z| * sum n^-s >= 1).
    Divergent(String),
    /// Name lookup failed (generating function, weight kind, set name, ...).
    UnknownName(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NonInvertible { constant_term } => write!(
                f,
                "non-invertible over exact integers: constant term {constant_term} is not a unit"
            ),
            Error::BoundTooSmall { bound, required } => write!(
                f,
                "part set bound {bound} is smaller than required bound {required}"
            ),
            Error::Divergent(msg) => write!(f, "diverges: {msg}"),
            Error::UnknownName(name) => write!(f, "unknown name: {name}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
