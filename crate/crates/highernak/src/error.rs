//! Error type shared by all engine modules.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument error: {0}")]
    Argument(String),
    #[error("invalid Kupisch series at index {index}: {reason}")]
    Kupisch { index: usize, reason: String },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("dimension mismatch: {0}")]
    Dim(String),
    #[error("unknown object: {0}")]
    UnknownObject(String),
    #[error("object count {0} exceeds limit {1}")]
    TooManyObjects(usize, usize),
    #[error("needs longer resolution: {0}")]
    NeedsLongerResolution(String),
    #[error("computation undetermined: {0}")]
    Undetermined(String),
    #[error("not flippable")]
    NotFlippable,
    #[error("no exchange partner: {0}")]
    NoExchangePartner(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
