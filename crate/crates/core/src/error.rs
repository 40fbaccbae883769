use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at alpha = {alpha}: denominator {denominator} vanishes")]
    Pole { alpha: String, denominator: String },

    #[error("operation requires a symbol of definite parity")]
    MixedParity,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid expression: {0}")]
    Semantic(String),

    #[error("cochain does not fit block: {0}")]
    BlockViolation(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
