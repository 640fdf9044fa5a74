use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("invalid label `{0}`")]
    InvalidLabel(String),

    #[error("self-loop on `{0}`")]
    SelfLoop(String),

    #[error("duplicate arc `{0} -> {1}`")]
    DuplicateArc(String, String),

    #[error("burning ranges must be positive")]
    ZeroRange,

    #[error("node `{0}` is unreachable from the root")]
    Unreachable(String),

    #[error("graph is not an arborescence")]
    NotArborescence,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("solver `{solver}` does not support this instance: {reason}")]
    Unsupported { solver: String, reason: String },

    #[error("unknown solver `{0}`")]
    UnknownSolver(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }
}
