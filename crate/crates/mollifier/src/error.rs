use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MollifierError {
    #[error("field is labelled smooth; there is nothing to mollify")]
    SmoothField,
    #[error("evaluation point {0} coincides with an edge")]
    EdgeAtPoint(f64),
    #[error("evaluation point {0} lies outside (-1, 1)")]
    OutOfDomain(f64),
    #[error("invalid mollifier parameter: {0}")]
    InvalidParams(String),
}
