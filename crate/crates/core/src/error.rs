use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("set is not a strong geodetic set")]
    NotStrongGeodetic,
    #[error("graph of order {n} exceeds the supported limit of {limit} for this operation")]
    TooLarge { n: usize, limit: usize },
}

impl Error {
    pub(crate) fn parse_at_line(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position: format!("line {line}"),
            message: message.into(),
        }
    }

    pub(crate) fn parse_at_byte(byte: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position: format!("byte {byte}"),
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
