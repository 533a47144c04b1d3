//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by the CRT-module calculus.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not in canonical form: {0}")]
    NotCanonical(String),
    #[error("ill-defined homomorphism: {0}")]
    IllDefined(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("requires finite parts: {0}")]
    Infinite(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("nonzero composite: {0}")]
    NonzeroComposite(String),
    #[error("part mismatch: {0}")]
    PartMismatch(String),
    #[error("relation check failed: {0}")]
    Relations(String),
    #[error("naturality check failed: {0}")]
    Naturality(String),
    #[error("cannot normalize word into target provenance: {0}")]
    Unsupported(String),
    #[error("search budget exceeded: {0}")]
    Budget(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("ambiguous result: {0}")]
    Ambiguous(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Result alias using [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
