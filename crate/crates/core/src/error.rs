use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("geometry: {0}")]
    Geometry(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("fan is not complete: {0}")]
    Incomplete(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("principality undecided for {0}")]
    UnknownPrincipality(String),
    #[error("divisor is not decomposable: {0}")]
    NotDecomposable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
