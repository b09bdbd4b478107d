use thiserror::Error;

/// Errors shared by the matrix kernel, norm machinery, profile geometry and
/// isometry recovery. Reconstruction has its own error type because it
/// carries the best iterate on failure.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("unsupported exponent: {0}")]
    UnsupportedExponent(String),
    #[error("not an isometry: {0}")]
    NotAnIsometry(String),
    #[error("frame degenerate: {0}")]
    FrameDegenerate(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
