//! Error type shared by every construction and verification routine.

use alloc::string::String;

use thiserror::Error;

use crate::field::Rat;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("denominator vanishes at {0}")]
    PoleAtPoint(Rat),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("tensor position {position} out of range for arity {arity}")]
    PositionOutOfRange { position: usize, arity: usize },
    #[error("trace property fails: {0}")]
    TracePropertyViolation(String),
    #[error("idempotent check failed for tableau {0}")]
    IdempotencyFailure(String),
    #[error("element of degree {found} exceeds the bound {bound}")]
    DegreeOverflow { found: usize, bound: usize },
    #[error("operator is not rank one (rank {0})")]
    RankNotOne(usize),
    #[error("inconsistent linear system: {0}")]
    InconsistentSystem(String),
    #[error("partition has {parts} parts but N = {n}")]
    TooManyParts { parts: usize, n: usize },
    #[error("braiding is not involutive")]
    NotInvolutive,
    #[error("consistency check failed: {0}")]
    ConsistencyFailure(String),
    #[error("unsupported element: {0}")]
    UnsupportedElement(String),
    #[error("bad configuration: {0}")]
    BadConfig(String),
}
