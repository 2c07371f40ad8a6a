use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A group spec string, Cayley-table file, or CLI argument could not be parsed.
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    /// A supplied multiplication table failed validation.
    #[error("invalid table: {0}")]
    InvalidTable(String),

    /// A computation would exceed a configured cap.
    #[error("capacity exceeded: {what} needs {needed}, cap is {cap}")]
    Capacity { what: String, needed: u64, cap: u64 },

    /// The membership grid is too shallow to realize every chain.
    #[error("membership grid depth {got} is below the longest chain length {needed}")]
    InsufficientDepth { needed: usize, got: usize },

    /// A membership map violates the fuzzy subgroup laws.
    #[error("invalid fuzzy subgroup: {0}")]
    InvalidFuzzy(String),

    /// Two characterizations that must agree disagreed; indicates a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// CLI exit code for this error: 2 for usage/parse problems, 3 for
    /// capacity/depth limits, 1 for anything that signals a broken run.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidSpec(_) | Error::InvalidTable(_) | Error::Io(_) => 2,
            Error::Capacity { .. } | Error::InsufficientDepth { .. } => 3,
            Error::InvalidFuzzy(_) | Error::Internal(_) => 1,
        }
    }
}
