use thiserror::Error;

use crate::report::ViolationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator in scalar")]
    ZeroDenominator,

    #[error("malformed scalar {0:?}: expected \"p\" or \"p/q\"")]
    BadScalar(String),

    #[error("scalar {0:?} is not in reduced canonical form")]
    NonCanonicalScalar(String),

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: String,
        found: String,
    },

    #[error("parity violation: {0}")]
    ParityViolation(String),

    #[error("index {index} out of range for dimension {dim} in {context}")]
    IndexOutOfRange {
        context: String,
        index: usize,
        dim: usize,
    },

    #[error("unknown product {0:?}")]
    UnknownProduct(String),

    #[error("duplicate entry {0}")]
    DuplicateEntry(String),

    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),

    #[error("singular {0}")]
    Singular(String),

    #[error("precondition {} failed with {} violation(s)", .0.identity, .0.violation_count)]
    Precondition(Box<ViolationReport>),

    #[error("{0}")]
    NotApplicable(String),

    #[error("induced product on the image is not well defined: kernel element {kernel_index} times basis {basis_index} ({side}) maps outside ker T")]
    NotWellDefined {
        kernel_index: usize,
        basis_index: usize,
        side: &'static str,
    },

    #[error("{path}: {message}")]
    Schema { path: String, message: String },

    #[error("json syntax error: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn dims(context: impl Into<String>, expected: impl ToString, found: impl ToString) -> Self {
        Error::DimensionMismatch {
            context: context.into(),
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
