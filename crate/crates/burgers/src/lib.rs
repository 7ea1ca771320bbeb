//! Method-of-lines solver for the inviscid Burgers equation
//! `u_t + u u_x = 0` on the Chebyshev-Gauss-Lobatto grid, stabilised by a
//! spectral filter in the right-hand side. The two boundary values are tied
//! together after every stage, so the domain behaves as periodic.

mod config;
mod error;
mod filter;
mod solver;

pub use config::{AdvectionForm, Coupling, SolverConfig};
pub use error::BurgersError;
pub use filter::FilterMatrix;
pub use solver::{gaussian_ic, run_simulation, Solver, SolverState};

pub type Result<T> = std::result::Result<T, BurgersError>;
