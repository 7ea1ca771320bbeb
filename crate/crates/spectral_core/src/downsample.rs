use nalgebra::DMatrix;

use crate::operators::mat_vec;
use crate::{build_grid, build_operators, transform::chebyshev_t, Result, SpectralError};

/// Order reduction `a_k = D_km a_m` with `D = V^(K) P`, where
/// `P_jm = T_m(x_j^(K))` samples the order-`M` expansion on the `K` grid.
#[derive(Debug, Clone)]
pub struct DownsampleMap {
    pub from_order: usize,
    pub to_order: usize,
    pub matrix: DMatrix<f64>,
}

impl DownsampleMap {
    pub fn new(from_order: usize, to_order: usize) -> Result<Self> {
        if to_order < 1 || to_order > from_order {
            return Err(SpectralError::InvalidDownsample { from: from_order, to: to_order });
        }
        let matrix = if to_order == from_order {
            DMatrix::identity(from_order + 1, from_order + 1)
        } else {
            let grid = build_grid(to_order)?;
            let ops = build_operators(&grid);
            let probe = DMatrix::from_fn(to_order + 1, from_order + 1, |j, m| chebyshev_t(m, grid.nodes()[j]));
            &ops.analysis * probe
        };
        Ok(DownsampleMap { from_order, to_order, matrix })
    }

    pub fn apply(&self, modal: &[f64]) -> Result<Vec<f64>> {
        if modal.len() != self.from_order + 1 {
            return Err(SpectralError::LengthMismatch { expected: self.from_order + 1, actual: modal.len() });
        }
        Ok(mat_vec(&self.matrix, modal))
    }
}

/// Re-collocates an order-`M` expansion at order `to_order`.
pub fn downsample(modal: &[f64], to_order: usize) -> Result<Vec<f64>> {
    let from = modal.len().checked_sub(1).ok_or(SpectralError::DegenerateOrder(0))?;
    DownsampleMap::new(from, to_order)?.apply(modal)
}
