use thiserror::Error;

/// Errors surfaced by tensor ops, layers, loaders, and the training loop.
#[derive(Error, Debug)]
pub enum Error {
    /// Operand shapes do not line up; both shapes are named.
    #[error("dimension mismatch in {op}: {lhs:?} vs {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    /// A configuration value produces an impossible geometry or is out of range.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A non-finite value appeared where the math guarantees finite output.
    #[error("numeric fault: {0}")]
    NumericFault(String),

    /// Malformed input data (CSV row, IDX payload, ...).
    #[error("parse error: {0}")]
    Parse(String),

    /// Input data that parses but violates a documented requirement.
    #[error("validation error: {0}")]
    Validation(String),

    /// Unrecognized or corrupt binary container.
    #[error("format error: {0}")]
    Format(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn dim(op: &'static str, lhs: &[usize], rhs: &[usize]) -> Self {
        Error::DimensionMismatch {
            op,
            lhs: lhs.to_vec(),
            rhs: rhs.to_vec(),
        }
    }

    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
