use thiserror::Error;

/// Errors raised by the library. Identity mismatches are not errors; they are
/// reported as data in [`crate::identities::IdentityReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index or size argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A family parameter (usually `r`) is invalid for the requested kind.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// Malformed request such as an inverted range.
    #[error("usage error: {0}")]
    Usage(String),
    /// An exhaustive oracle was asked for more work than its guard allows.
    #[error("size guard exceeded: {0}")]
    Size(String),
    /// The operation does not support this input shape.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A rational generating function whose denominator is not normalized.
    #[error("normalization error: {0}")]
    Normalization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
