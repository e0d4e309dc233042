use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    /// Evaluation or differentiation at `t = 0` of a function with a pole there.
    #[error("pole of order {order} at t = 0")]
    Pole { order: usize },

    /// A closed-form coefficient hit an exactly vanishing linear form.
    #[error("vanishing denominator in coefficient {what}")]
    VanishingDenominator { what: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Something the theory rules out was observed.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
