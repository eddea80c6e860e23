use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A configured resource budget would be exceeded.
    #[error("{resource} budget exceeded: need {needed}, budget is {budget}")]
    Budget {
        resource: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error("unknown method token `{0}`")]
    UnknownMethod(String),

    #[error("malformed sequence file: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}
