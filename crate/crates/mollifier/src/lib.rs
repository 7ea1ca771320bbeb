//! Adaptive Hermite-Gaussian mollifiers.
//!
//! Each output point gets its own kernel, dilated in proportion to the
//! distance to the nearest edge so that smoothing never reaches across a
//! discontinuity. Two-sided kernels are used for resolution-limited fields;
//! one-sided kernels, truncated at the bracketing edges, for fields with
//! confirmed discontinuities.

mod error;
mod kernel;
mod mollify;

pub use error::MollifierError;
pub use kernel::{build_kernel, hermite_kernel, KernelSamples, MollifierKind, MollifierParams, MollifierSpec};
pub use mollify::{mollify, mollify_at, mollify_fn};

pub type Result<T> = std::result::Result<T, MollifierError>;
