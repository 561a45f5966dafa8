use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An input graph lies outside the class a solver is defined on.
    #[error("class violation: {0}")]
    ClassViolation(String),

    /// The caller-supplied search budget ran out before an answer was found.
    #[error("search budget of {0} exhausted")]
    BudgetExceeded(u64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn class(msg: impl Into<String>) -> Self {
        Error::ClassViolation(msg.into())
    }
}
