use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("out of range: {0}")]
    Range(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("enumeration budget exceeded: {needed} elements requested, budget is {budget}")]
    Budget { needed: u128, budget: u128 },
    #[error("iteration cap reached: {0}")]
    IterationCap(String),
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
    #[error("internal arithmetic error: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
}

impl Error {
    /// Budget and iteration-cap failures are resource errors; the CLI maps
    /// them to their own exit code.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::IterationCap(_))
    }
}
