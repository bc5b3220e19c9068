use thiserror::Error;

/// Errors raised by the evaluators in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at s={0}")]
    Pole(String),

    #[error("quadrature did not reach tolerance {tol:e} (estimated error {estimate:e} after {intervals} intervals)")]
    Quadrature {
        tol: f64,
        estimate: f64,
        intervals: usize,
    },

    #[error("closed form {closed} and quadrature {quadrature} differ by {diff:e} (> {tol:e})")]
    Mismatch {
        closed: String,
        quadrature: String,
        diff: f64,
        tol: f64,
    },

    #[error("golden table: {0}")]
    Golden(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
