use thiserror::Error;

/// Errors produced by the library.
///
/// `Infeasible` is kept separate from the input/shape errors: it is a
/// legitimate answer of the solver (the budget cannot be met even with
/// the full support), not a malfunction.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("target vector must be finite (entry {index} is {value})")]
    NonFiniteTarget { index: usize, value: f64 },

    #[error("infeasible: full-support error {full_support_error} exceeds budget {budget}")]
    Infeasible {
        full_support_error: f64,
        budget: f64,
    },

    #[error("refused: {0}")]
    Refused(String),

    #[error("parse error at row {row}, column {column}: {message}")]
    Parse {
        row: usize,
        column: usize,
        message: String,
    },

    #[error("schema error: {0}")]
    Schema(String),
}

impl Error {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Error::Infeasible { .. })
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
