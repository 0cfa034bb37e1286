use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("k must be at least 1")]
    ZeroDegree,

    #[error("multi-index must have at least one component")]
    EmptyIndex,

    #[error("index {index:?} out of range for k = {k} (each component must lie in 1..={k})")]
    IndexOutOfRange { k: usize, index: Vec<usize> },

    #[error("{method}: exact division failed for k = {k}, index {index:?}")]
    Divisibility {
        method: &'static str,
        k: usize,
        index: Vec<usize>,
    },

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("{0}")]
    Limit(String),

    #[error("malformed document: {0}")]
    Document(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
