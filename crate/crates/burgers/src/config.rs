use serde::{Deserialize, Serialize};

use crate::{BurgersError, Result};

/// Discretisation of the nonlinear term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AdvectionForm {
    /// `-(u N u + N(u^2)) / 3`, the energy-neutral split form.
    Skew,
    /// `-u N u`.
    Advective,
    /// No advection; only the filter acts (used to test damping).
    Disabled,
}

/// How the periodic closure `u(-1) = u(1)` is imposed after each stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coupling {
    /// Copy from the outflow end: `u_0 <- u_N` when `u_N >= 0`, otherwise
    /// `u_N <- u_0`.
    Upwind,
    /// Always `u_0 <- u_N`.
    Periodic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub order: usize,
    /// Filter exponent `s` in `(n/N)^{2s}`.
    pub s: u32,
    /// Filter strength; the filter tendency is `-c N^2 V^-1 F V u`.
    pub c: f64,
    pub x0: f64,
    pub sigma: f64,
    pub cfl: f64,
    pub t_end: f64,
    pub snapshot_interval: f64,
    pub advection: AdvectionForm,
    pub coupling: Coupling,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            order: 60,
            s: 2,
            c: 0.01,
            x0: 0.0,
            sigma: 0.15,
            cfl: 0.5,
            t_end: 3.0,
            snapshot_interval: 0.05,
            advection: AdvectionForm::Skew,
            coupling: Coupling::Upwind,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |key, reason: &str| Err(BurgersError::InvalidConfig { key, reason: reason.to_string() });
        if self.order < 8 {
            return fail("order", "must be at least 8");
        }
        if self.s < 1 {
            return fail("s", "must be at least 1");
        }
        if !(self.c >= 0.0 && self.c.is_finite()) {
            return fail("c", "must be finite and non-negative");
        }
        if !(self.cfl > 0.0 && self.cfl <= 1.0) {
            return fail("cfl", "must lie in (0, 1]");
        }
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return fail("sigma", "must be positive");
        }
        if !self.x0.is_finite() {
            return fail("x0", "must be finite");
        }
        if !(self.t_end > 0.0 && self.t_end.is_finite()) {
            return fail("t_end", "must be positive");
        }
        if !(self.snapshot_interval > 0.0 && self.snapshot_interval.is_finite()) {
            return fail("snapshot_interval", "must be positive");
        }
        Ok(())
    }
}
