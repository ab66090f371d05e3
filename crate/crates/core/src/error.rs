use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed grading: {0}")]
    Grading(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("node {0} is not a fermionic node")]
    NotFermionic(usize),
    #[error("grading is not a lattice path: {0}")]
    NotAPath(String),
    #[error("dimension mismatch: {0}")]
    Dims(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("no admissible realization: {0}")]
    Inadmissible(String),
    #[error("misuse: {0}")]
    Misuse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
