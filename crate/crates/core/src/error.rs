use thiserror::Error;

use crate::eigensolver::GroundStateResult;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input: out-of-range sizes, mismatched dimensions, bad masks.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Lanczos did not reach the requested tolerance. Carries the last estimate.
    #[error("lanczos did not converge after {iterations} iterations (residual {residual:.3e})")]
    NotConverged {
        iterations: usize,
        residual: f64,
        best: Box<GroundStateResult>,
    },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed input at line {line}: {message}")]
    Malformed { line: u64, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
