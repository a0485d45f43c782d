use thiserror::Error;

#[derive(Debug, Error)]
pub enum MoyalError {
    /// Shapes or parameters of two operands do not match.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// Input outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A quadrature or truncation failed to meet the requested tolerance.
    #[error("accuracy error: {0}")]
    Accuracy(String),
}
