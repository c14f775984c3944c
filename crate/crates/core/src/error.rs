use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id {id} out of range (graph has {n} vertices)")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid tag: {0}")]
    InvalidTag(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
