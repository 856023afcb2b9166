use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed graph file: {0}")]
    MalformedGraph(String),

    #[error("loop at vertex {0} (arc [{0},{0}])")]
    Loop(usize),

    #[error("arc [{u},{v}] has an endpoint outside 0..{n}")]
    ArcOutOfRange { u: usize, v: usize, n: usize },

    #[error("duplicate arc [{u},{v}]")]
    DuplicateArc { u: usize, v: usize },

    #[error("vertex count {n} is outside the supported range {min}..={max}")]
    UnsupportedOrder { n: usize, min: usize, max: usize },

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("configuration has {got} entries but the graph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("malformed configuration: {0}")]
    MalformedConfiguration(String),

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("solver node budget of {0} states exhausted")]
    BudgetExceeded(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("graph is not a member of the family under the given labeling")]
    NotAMember,

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("malformed record on line {line}: {message}")]
    MalformedRecord { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
