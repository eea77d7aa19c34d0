use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),
    #[error("{0}")]
    Parse(String),
    #[error("unbounded interval {0:?}: uncertainty areas must be bounded")]
    Unbounded(String),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("size guard exceeded: {size} elements, limit {limit}")]
    Guard { size: usize, limit: usize },
    #[error("promise violated: {0}")]
    PromiseViolation(String),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Field {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Internal consistency failures are the only errors that indicate a bug
    /// rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
