//! Chebyshev-Gauss-Lobatto discretisation on `[-1, 1]`.
//!
//! The crate provides the collocation grid, the nodal/modal transforms, the
//! differentiation matrices and the order-reduction map used by the edge
//! detector. Everything is built eagerly and immutable afterwards.

mod downsample;
mod error;
mod field;
mod grid;
mod operators;
mod transform;

pub use downsample::{downsample, DownsampleMap};
pub use error::SpectralError;
pub use field::SpectralField;
pub use grid::{build_grid, ChebyshevGrid};
pub use operators::{build_operators, SpectralOperators};
pub use transform::{analyze, chebyshev_t, chebyshev_t_prime, synthesize, synthesize_unchecked};

pub type Result<T> = std::result::Result<T, SpectralError>;
