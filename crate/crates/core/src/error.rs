//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: out-of-range indices, short generators, duplicates.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An operation was asked to exceed its size guard.
    #[error("guard exceeded for {what}: limit {limit}, got {got}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    /// Checked integer arithmetic overflowed.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// Two independent routes to the same value disagreed; signals a bug.
    #[error("internal cross-check failed: {0}")]
    InternalCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        Err(Error::GuardExceeded { what, limit, got })
    } else {
        Ok(())
    }
}

pub(crate) fn cadd(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn cmul(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}
