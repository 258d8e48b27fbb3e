use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("path enumeration overflow: more than {cap} induced paths")]
    PathOverflow { cap: usize },

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("sampling failed after {attempts} attempts: {msg}")]
    SamplingFailed { attempts: u32, msg: String },

    #[error("linear program error: {0}")]
    Lp(String),

    #[error("internal assertion: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

pub fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
