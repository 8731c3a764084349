use thiserror::Error;

/// Errors surfaced by the library. Each variant maps to a stable CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameters outside the family: {0}")]
    OutOfFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("continued fraction has a vanishing nested denominator")]
    ZeroDenominator,
    #[error("polynomial is not symmetric-normalized: {0}")]
    NotNormalized(String),
    #[error("generator `{0}` does not belong to this group")]
    UnknownGenerator(char),
    #[error("internal check failed: {0}")]
    InternalCheckFailed(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

impl Error {
    /// Stable machine-readable code, also used as the process exit status.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::OutOfFamily(_) => 2,
            Error::Parse(_) | Error::UnknownGenerator(_) | Error::NotNormalized(_) => 3,
            Error::ZeroDenominator
            | Error::InternalCheckFailed(_)
            | Error::ConstructionFailed(_) => 4,
        }
    }

    pub fn code_name(&self) -> &'static str {
        match self {
            Error::OutOfFamily(_) => "OutOfFamily",
            Error::Parse(_) => "ParseError",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::NotNormalized(_) => "NotNormalized",
            Error::UnknownGenerator(_) => "ParseError",
            Error::InternalCheckFailed(_) => "InternalCheckFailed",
            Error::ConstructionFailed(_) => "ConstructionFailed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
