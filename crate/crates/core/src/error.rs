use thiserror::Error;

/// Errors raised by the library. Decisions with a negative outcome (not
/// congruent, infeasible, unsolvable) are ordinary return values, never errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("ε has no multiplicative inverse")]
    EpsilonInverse,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size guard exceeded: {what} is {got}, limit is {limit}")]
    SizeGuard {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn guard(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::SizeGuard { what, got, limit })
    } else {
        Ok(())
    }
}
