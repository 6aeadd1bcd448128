use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid {kind} length {len}")]
    InvalidLength { kind: &'static str, len: usize },

    #[error("{what} is {got}, limit is {limit}")]
    SizeExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inconsistent deck: {0}")]
    InconsistentDeck(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("linear forest {0} has no isolated vertex")]
    NoIsolatedVertex(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_size(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::SizeExceeded { what, got, limit })
    } else {
        Ok(())
    }
}
