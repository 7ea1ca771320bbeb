use nalgebra::{DMatrix, DVector};

use crate::transform::chebyshev_t_prime;
use crate::ChebyshevGrid;

/// Dense transform and differentiation matrices for one grid.
///
/// * `analysis`   -- `V_ni = T_n(x_i) w_i / gamma_n` (nodal -> modal)
/// * `synthesis`  -- `T_n(x_i)` (modal -> nodal), the exact inverse of `analysis`
/// * `diff_modal` -- `M = V [T_m'(x_i)]`, modal coefficients of `T_m'`
/// * `diff_nodal` -- `synthesis * M * analysis`
#[derive(Debug, Clone)]
pub struct SpectralOperators {
    grid: ChebyshevGrid,
    pub analysis: DMatrix<f64>,
    pub synthesis: DMatrix<f64>,
    pub diff_modal: DMatrix<f64>,
    pub diff_nodal: DMatrix<f64>,
}

pub fn build_operators(grid: &ChebyshevGrid) -> SpectralOperators {
    let n = grid.len();
    let order = grid.order();
    let x = grid.nodes();
    let theta: Vec<f64> = (0..n).map(|i| std::f64::consts::PI * (n - 1 - i) as f64 / order as f64).collect();

    // cos(k theta_i) directly: exact at the pinned nodes and free of recurrence drift
    let synthesis = DMatrix::from_fn(n, n, |i, k| {
        if i == 0 {
            if k % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        } else if i == order {
            1.0
        } else {
            (k as f64 * theta[i]).cos()
        }
    });
    let analysis = DMatrix::from_fn(n, n, |k, i| synthesis[(i, k)] * grid.weights()[i] / grid.norms()[k]);
    let derivs = DMatrix::from_fn(n, n, |i, m| chebyshev_t_prime(m, x[i]));
    let diff_modal = &analysis * &derivs;
    let diff_nodal = &synthesis * &diff_modal * &analysis;

    SpectralOperators { grid: grid.clone(), analysis, synthesis, diff_modal, diff_nodal }
}

impl SpectralOperators {
    pub fn order(&self) -> usize {
        self.grid.order()
    }

    pub fn grid(&self) -> &ChebyshevGrid {
        &self.grid
    }

    pub(crate) fn apply_analysis(&self, nodal: &[f64]) -> Vec<f64> {
        mat_vec(&self.analysis, nodal)
    }

    pub fn to_nodal(&self, modal: &[f64]) -> Vec<f64> {
        mat_vec(&self.synthesis, modal)
    }

    /// Nodal derivative `N u`.
    pub fn differentiate(&self, nodal: &[f64]) -> Vec<f64> {
        mat_vec(&self.diff_nodal, nodal)
    }
}

pub(crate) fn mat_vec(m: &DMatrix<f64>, v: &[f64]) -> Vec<f64> {
    (m * DVector::from_column_slice(v)).as_slice().to_vec()
}
