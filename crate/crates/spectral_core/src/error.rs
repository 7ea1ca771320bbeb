use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("expansion order must be at least 1, got {0}")]
    DegenerateOrder(usize),
    #[error("expected a vector of length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("evaluation point {0} lies outside [-1, 1]")]
    OutOfDomain(f64),
    #[error("cannot downsample from order {from} to order {to}")]
    InvalidDownsample { from: usize, to: usize },
}
