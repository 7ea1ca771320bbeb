//! Spectral edge detection.
//!
//! Jump functions are approximated from Chebyshev coefficients with a bank of
//! concentration factors, combined by minmod, and the resulting peaks are
//! sorted into genuine discontinuities and resolution artefacts.

mod classify;
mod config;
mod error;
mod factors;
mod jump;
mod peaks;
mod quad;
mod reject;
mod report;

pub use classify::{classify_smoothness, SlopeFit};
pub use config::DetectionConfig;
pub use error::EdgeError;
pub use factors::{build_concentration_factors, ConcentrationFactor, Family};
pub use jump::{build_profile, evaluation_grid, jump_approx, minmod_combine, MinmodProfile};
pub use peaks::{find_peaks, half_prominence_width, Candidate, PeakThreshold};
pub use reject::{reject_spurious, smooth_minmod};
pub use report::{detect, Detection, Edge, EdgeReport, Label, Thresholds};

pub type Result<T> = std::result::Result<T, EdgeError>;
