use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is out of range: expected {expected}")]
    OutOfRange {
        name: &'static str,
        value: String,
        expected: &'static str,
    },

    #[error("scenario violates the ordering chain: {inequality} does not hold")]
    ChainViolation { inequality: &'static str },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("invalid probability vector: {0}")]
    InvalidVector(String),

    #[error("cannot parse number {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid sweep configuration: {0}")]
    ConfigInvalid(String),
}

impl Error {
    pub(crate) fn out_of_range(
        name: &'static str,
        value: impl ToString,
        expected: &'static str,
    ) -> Self {
        Error::OutOfRange {
            name,
            value: value.to_string(),
            expected,
        }
    }
}
