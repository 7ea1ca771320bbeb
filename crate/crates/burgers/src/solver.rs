use nalgebra::{DMatrix, DVector};
use spectral_core::{build_grid, build_operators, SpectralField, SpectralOperators};

use crate::{AdvectionForm, BurgersError, Coupling, FilterMatrix, Result, SolverConfig};

/// Solution at one instant.
#[derive(Debug, Clone)]
pub struct SolverState {
    pub time: f64,
    pub field: SpectralField,
    pub step_count: usize,
}

/// `g(x) = exp(-(x - x0)^2 / (2 sigma^2))` sampled on the grid.
pub fn gaussian_ic(ops: &SpectralOperators, x0: f64, sigma: f64) -> SpectralField {
    SpectralField::from_fn(ops, |x| (-(x - x0).powi(2) / (2.0 * sigma * sigma)).exp())
}

/// Precomputed operators for one configuration.
#[derive(Debug, Clone)]
pub struct Solver {
    pub config: SolverConfig,
    pub ops: SpectralOperators,
    pub filter: FilterMatrix,
    /// Nodal filter tendency operator `c N^2 V^-1 F V`.
    damping: DMatrix<f64>,
}

impl Solver {
    pub fn new(config: SolverConfig) -> Result<Self> {
        config.validate()?;
        let grid = build_grid(config.order).expect("order validated above");
        let ops = build_operators(&grid);
        let filter = FilterMatrix::new(config.order, config.s);
        let strength = config.c * (config.order * config.order) as f64;
        let diag = DMatrix::from_diagonal(&DVector::from_vec(filter.diagonal.clone()));
        let damping = &ops.synthesis * diag * &ops.analysis * strength;
        Ok(Solver { config, ops, filter, damping })
    }

    pub fn initial_state(&self) -> SolverState {
        let mut nodal = gaussian_ic(&self.ops, self.config.x0, self.config.sigma).nodal().to_vec();
        self.couple(&mut nodal);
        SolverState { time: 0.0, field: self.field(nodal), step_count: 0 }
    }

    fn field(&self, nodal: Vec<f64>) -> SpectralField {
        SpectralField::from_nodal(&self.ops, nodal).expect("solver keeps the grid length")
    }

    /// Nodal tendency `du/dt`.
    pub fn rhs(&self, u: &[f64]) -> Vec<f64> {
        let v = DVector::from_column_slice(u);
        let mut out = match self.config.advection {
            AdvectionForm::Disabled => DVector::zeros(u.len()),
            AdvectionForm::Advective => -v.component_mul(&(&self.ops.diff_nodal * &v)),
            AdvectionForm::Skew => {
                let flux = &self.ops.diff_nodal * v.component_mul(&v);
                -(v.component_mul(&(&self.ops.diff_nodal * &v)) + flux) / 3.0
            }
        };
        out -= &self.damping * &v;
        out.as_slice().to_vec()
    }

    fn couple(&self, u: &mut [f64]) {
        let last = u.len() - 1;
        match self.config.coupling {
            Coupling::Upwind if u[last] < 0.0 => u[last] = u[0],
            _ => u[0] = u[last],
        }
    }

    /// One classical Runge-Kutta step; the boundary coupling is applied after
    /// every stage.
    pub fn step(&self, state: &SolverState, dt: f64) -> Result<SolverState> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(BurgersError::BadTimeStep(dt));
        }
        let u = state.field.nodal();
        let stage = |k: &[f64], h: f64| -> Vec<f64> {
            let mut w: Vec<f64> = u.iter().zip(k).map(|(a, b)| a + h * b).collect();
            self.couple(&mut w);
            w
        };
        let k1 = self.rhs(u);
        let k2 = self.rhs(&stage(&k1, 0.5 * dt));
        let k3 = self.rhs(&stage(&k2, 0.5 * dt));
        let k4 = self.rhs(&stage(&k3, dt));
        let mut next: Vec<f64> =
            (0..u.len()).map(|i| u[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])).collect();
        self.couple(&mut next);
        if next.iter().any(|v| !v.is_finite()) {
            return Err(BurgersError::Unstable { time: state.time + dt, snapshots: Vec::new() });
        }
        Ok(SolverState { time: state.time + dt, field: self.field(next), step_count: state.step_count + 1 })
    }

    /// CFL step `cfl * dx_min / max(max|u|, 0.1)`.
    pub fn stable_dt(&self, state: &SolverState) -> f64 {
        self.config.cfl * self.ops.grid().min_spacing() / state.field.max_abs().max(0.1)
    }

    /// Integrates to `t_end`, returning the snapshots at `0, dt_s, 2 dt_s, ...`
    /// (and `t_end`). `observer` sees every accepted state.
    pub fn run_with<F: FnMut(&SolverState)>(&self, mut observer: F) -> Result<Vec<SolverState>> {
        let cfg = &self.config;
        let mut state = self.initial_state();
        observer(&state);
        let mut snapshots = vec![state.clone()];
        let mut k = 1usize;
        loop {
            let target = (k as f64 * cfg.snapshot_interval).min(cfg.t_end);
            while state.time < target {
                let mut dt = self.stable_dt(&state);
                let hits = state.time + dt >= target - 1e-12 * target.max(1.0);
                if hits {
                    dt = target - state.time;
                }
                state = match self.step(&state, dt) {
                    Ok(s) => s,
                    Err(BurgersError::Unstable { time, .. }) => return Err(BurgersError::Unstable { time, snapshots }),
                    Err(e) => return Err(e),
                };
                if hits {
                    state.time = target;
                }
                observer(&state);
            }
            snapshots.push(state.clone());
            if target >= cfg.t_end {
                return Ok(snapshots);
            }
            k += 1;
        }
    }
}

/// Runs the configured simulation and returns its snapshots.
pub fn run_simulation(config: &SolverConfig) -> Result<Vec<SolverState>> {
    Solver::new(config.clone())?.run_with(|_| {})
}
