use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{0} is not prime")]
    NonPrime(u64),

    #[error("guard `{guard}` exceeded: requested {requested}, limit {limit} (raise with --guard {guard}=N)")]
    GuardExceeded {
        guard: &'static str,
        limit: u128,
        requested: u128,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A proven statement failed on valid input. Always an implementation bug.
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
