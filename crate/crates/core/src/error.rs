//! Error type shared by every module.

use alloc::string::String;

/// Failure categories reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An input violates a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured enumeration bound was exceeded.
    #[error("resource error: {0}")]
    Resource(String),
    /// Column counts do not describe a signed Young diagram.
    #[error("inconsistent counts: {0}")]
    InconsistentCounts(String),
    /// A triple satisfies the checked invariants but is not an image of `triple`.
    #[error("not in image: {0}")]
    NotInImage(String),
    /// Sampled ranks could not be merged into a single generic type.
    #[error("genericity undecided: {0}")]
    GenericityUndecided(String),
    /// An internal consistency check failed.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::error::Error::Domain(alloc::format!($($arg)*)) };
}
macro_rules! internal {
    ($($arg:tt)*) => { $crate::error::Error::Internal(alloc::format!($($arg)*)) };
}
pub(crate) use domain;
pub(crate) use internal;
