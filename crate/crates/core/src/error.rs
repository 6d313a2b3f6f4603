use thiserror::Error;

/// Errors raised by graph construction, parsing and the polynomial engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("format error at line {line}, byte {offset}: {message}")]
    Format {
        line: usize,
        offset: usize,
        message: String,
    },

    #[error("graph of order {order} exceeds the {engine} limit of {limit}; {suggestion}")]
    Guardrail {
        engine: &'static str,
        order: usize,
        limit: usize,
        suggestion: &'static str,
    },

    #[error("no closed form applies: {0}")]
    Dispatch(String),

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn format(offset: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line: 0,
            offset,
            message: message.into(),
        }
    }

    /// Attach a 1-based line number to a format error.
    pub fn at_line(self, line: usize) -> Self {
        match self {
            Error::Format {
                offset, message, ..
            } => Error::Format {
                line,
                offset,
                message,
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
