use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller passed structurally invalid arguments (wrong lengths,
    /// out-of-range indices or parameters, empty inputs).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Numerical validation failed (non-unitary matrix, unnormalized state,
    /// coefficients violating the closed-polygon condition).
    #[error("validation failed: {0}")]
    Validation(String),

    /// The requested operation is undefined in the model (odd-sized GHZ
    /// coalitions, odd-player GHZ equilibria).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A scenario configuration could not be parsed.
    #[error("config parse error: {0}")]
    ConfigParse(String),

    /// A scenario configuration parsed but is semantically invalid.
    #[error("config error: {0}")]
    ConfigInvalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
