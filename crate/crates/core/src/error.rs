use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no solution: {0}")]
    NoSolution(String),
    /// A map that was supposed to descend to a quotient does not kill one of
    /// the relations. The string names the relation and its image.
    #[error("not balanced: {0}")]
    NotBalanced(String),
    #[error("source and target images do not commute: {0}")]
    CommutationFailed(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("characteristic {0} not supported: {1}")]
    BadCharacteristic(u64, String),
    #[error("axiom failure:\n{0}")]
    AxiomFailure(Box<Report>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
