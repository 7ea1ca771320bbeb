use std::sync::Arc;

use crate::{analyze, ChebyshevGrid, Result, SpectralError, SpectralOperators};

/// A function on the grid held in both representations.
#[derive(Debug, Clone)]
pub struct SpectralField {
    grid: Arc<ChebyshevGrid>,
    modal: Vec<f64>,
    nodal: Vec<f64>,
}

impl SpectralField {
    pub fn from_nodal(ops: &SpectralOperators, nodal: Vec<f64>) -> Result<Self> {
        let modal = analyze(&nodal, ops)?;
        Ok(SpectralField { grid: Arc::new(ops.grid().clone()), modal, nodal })
    }

    pub fn from_modal(ops: &SpectralOperators, modal: Vec<f64>) -> Result<Self> {
        let n = ops.order() + 1;
        if modal.len() != n {
            return Err(SpectralError::LengthMismatch { expected: n, actual: modal.len() });
        }
        let nodal = ops.to_nodal(&modal);
        Ok(SpectralField { grid: Arc::new(ops.grid().clone()), modal, nodal })
    }

    /// Samples `f` at the collocation nodes.
    pub fn from_fn<F: Fn(f64) -> f64>(ops: &SpectralOperators, f: F) -> Self {
        let nodal = ops.grid().nodes().iter().map(|&x| f(x)).collect();
        Self::from_nodal(ops, nodal).expect("nodal length matches grid by construction")
    }

    pub fn grid(&self) -> &ChebyshevGrid {
        &self.grid
    }

    pub fn order(&self) -> usize {
        self.grid.order()
    }

    pub fn modal(&self) -> &[f64] {
        &self.modal
    }

    pub fn nodal(&self) -> &[f64] {
        &self.nodal
    }

    pub fn max_abs(&self) -> f64 {
        self.nodal.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}
