use thiserror::Error;

use crate::SolverState;

#[derive(Debug, Error, Clone)]
pub enum BurgersError {
    #[error("invalid solver configuration: `{key}` {reason}")]
    InvalidConfig { key: &'static str, reason: String },
    #[error("non-finite state at t = {time}; {} snapshot(s) preserved", .snapshots.len())]
    Unstable { time: f64, snapshots: Vec<SolverState> },
    #[error("time step must be positive, got {0}")]
    BadTimeStep(f64),
}
