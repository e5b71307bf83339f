use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A base or modulus argument below 2.
    #[error("{what} must be at least 2, got {got}")]
    BaseTooSmall { what: &'static str, got: u64 },

    /// An argument that must be strictly positive was 0.
    #[error("{what} must be positive")]
    MustBePositive { what: &'static str },

    /// An input exceeded a configured guard or the supported range.
    #[error("{what} = {value} exceeds the limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },
}
