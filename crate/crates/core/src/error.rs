use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Dimensions of the operands do not fit together.
    #[error("shape error: {0}")]
    Shape(String),

    /// Input is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A document could not be parsed or failed validation. `field` names the
    /// offending location, e.g. `weights[3]`.
    #[error("parse error at `{field}`: {message}")]
    Parse { field: String, message: String },

    #[error("capacity error: {0}")]
    Capacity(String),

    #[error("degenerate representation: {0}")]
    Degenerate(String),

    #[error("no handle: {0}")]
    NoHandle(String),
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}
