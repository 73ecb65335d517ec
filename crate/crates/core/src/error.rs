use std::path::PathBuf;

/// Errors produced by construction, inference, parsing, and I/O.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input data does not match what a module expects (channels, spatial
    /// extents, stream element shape, ...).
    #[error("shape error: {0}")]
    Shape(String),

    /// A clip is too short in time for the requested batch computation.
    #[error("insufficient temporal length: {0}")]
    InsufficientLength(String),

    /// Wrong number of parallel streams handed to a module.
    #[error("stream arity error: {0}")]
    Streams(String),

    /// A module or combinator was assembled from incompatible parts.
    #[error("construction error: {0}")]
    Construction(String),

    /// A network description file failed validation. `path` names the
    /// offending key, e.g. `net.children[0].params.padding`.
    #[error("invalid network description at {path}: {msg}")]
    Spec { path: String, msg: String },

    /// Malformed document text (not valid JSON).
    #[error("parse error: {0}")]
    Parse(String),

    /// Weight file problems: missing, corrupt, or mismatched with the
    /// declared parameters.
    #[error("weight file error ({path}): {msg}")]
    Weights { path: PathBuf, msg: String },

    /// Malformed CSV row or header on the streaming interface.
    #[error("csv error at line {line}: {msg}")]
    Csv { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
