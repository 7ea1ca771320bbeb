#![allow(dead_code)]

use std::sync::OnceLock;

use burgers::SolverState;
use cli_pipeline::*;

/// The default simulation, solved once per test binary.
pub fn default_states() -> &'static [SolverState] {
    static STATES: OnceLock<Vec<SolverState>> = OnceLock::new();
    STATES.get_or_init(|| burgers::run_simulation(&SimulationConfig::default().solver).unwrap())
}

pub fn default_outcomes() -> &'static [SnapshotOutcome] {
    static OUT: OnceLock<Vec<SnapshotOutcome>> = OnceLock::new();
    OUT.get_or_init(|| postprocess_all(default_states(), &SimulationConfig::default()))
}

/// Isotonic (non-increasing) least-squares fit by pool-adjacent-violators.
pub fn pav_decreasing(y: &[f64]) -> Vec<f64> {
    let mut blocks: Vec<(f64, usize)> = Vec::new();
    for &v in y {
        blocks.push((v, 1));
        while blocks.len() > 1 {
            let (v2, n2) = blocks[blocks.len() - 1];
            let (v1, n1) = blocks[blocks.len() - 2];
            if v1 >= v2 {
                break;
            }
            blocks.truncate(blocks.len() - 2);
            blocks.push(((v1 * n1 as f64 + v2 * n2 as f64) / (n1 + n2) as f64, n1 + n2));
        }
    }
    blocks.into_iter().flat_map(|(v, n)| std::iter::repeat_n(v, n)).collect()
}

/// Largest distance of `y` from its best non-increasing fit.
pub fn monotone_deviation(y: &[f64]) -> f64 {
    y.iter().zip(pav_decreasing(y)).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}
