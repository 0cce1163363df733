//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by core operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two markers that were expected to lie in the same string do not.
    #[error("markers belong to different strings")]
    DifferentStrings,
    /// A position fell outside the permitted range.
    #[error("position {pos} outside [{lo}, {hi}]")]
    OutOfRange { pos: i64, lo: i64, hi: i64 },
    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    /// Input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// The instance exceeds a configured size limit.
    #[error("instance too large: n={n} exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Errors raised by the branching solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// The configured branch budget was exhausted before a decision was reached.
    #[error("branch budget exhausted after {states} states")]
    BudgetExhausted { states: u64 },
    /// An internal invariant failed; indicates a bug, not an unsolvable input.
    #[error("solver invariant violated: {0}")]
    InvariantViolation(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
