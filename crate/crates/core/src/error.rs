//! Error type shared by the whole engine.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {0}: rank must be at least 2")]
    InvalidRank(usize),
    #[error("invalid odd set: {0}")]
    InvalidOddSet(String),
    #[error("invalid order {0}: the order of q must be even and greater than 2")]
    InvalidOrder(i64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("specialization error: {0}")]
    Specialization(String),
    #[error("unsupported monomial shape: {0}")]
    UnsupportedMonomial(String),
    #[error("module integrity error: {0}")]
    ModuleIntegrity(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("broken functoriality: {0}")]
    BrokenFunctoriality(String),
    #[error("non-integral invariant: {0}")]
    NonIntegral(String),
    #[error("unknown knot `{0}`")]
    UnknownKnot(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for errors caused by invalid user input rather than a failed check.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidRank(_)
                | Error::InvalidOddSet(_)
                | Error::InvalidOrder(_)
                | Error::Domain(_)
                | Error::Parse(_)
                | Error::Specialization(_)
                | Error::UnsupportedMonomial(_)
                | Error::Arity(_)
                | Error::UnknownKnot(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
