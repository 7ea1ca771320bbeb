use spectral_core::SpectralError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EdgeError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("minmod needs at least one row of equal length")]
    EmptyMinmod,
    #[error("slope sweep from order {k_min} to {order} is too short for a fit")]
    SweepTooShort { k_min: usize, order: usize },
    #[error("smoothing centre {0} lies outside [-1, 1]")]
    CenterOutOfDomain(f64),
    #[error("no candidates to test; the field should have been labelled smooth")]
    NoCandidates,
}
