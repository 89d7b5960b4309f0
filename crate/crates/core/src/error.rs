use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("no closed form available for pattern {pattern} with k = {k}")]
    FormulaNotAvailable { pattern: String, k: usize },

    /// A named structural condition (for example `P3` or `avoid1234.cond2`) does not hold.
    #[error("condition {name} violated: {detail}")]
    Condition { name: String, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn condition(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Condition {
            name: name.into(),
            detail: detail.into(),
        }
    }
}
