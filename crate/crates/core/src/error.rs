//! Crate-wide error type.

use crate::poset::ElementId;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid element {0}")]
    InvalidElement(ElementId),

    #[error("element selection is not downward closed")]
    NotClosed,

    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not round: {0}")]
    NotRound(String),

    #[error("not rewritable (certificate invalid): {0}")]
    NotRewritable(String),

    #[error("wrong dimension: {0}")]
    WrongDimension(String),

    #[error("no least element")]
    NoLeastElement,

    #[error("precondition violation: {0}")]
    Precondition(String),

    #[error("search budget exhausted")]
    BudgetExhausted,

    #[error("matrix budget exceeded ({0} entries)")]
    MatrixBudget(usize),

    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
