use std::f64::consts::PI;

use crate::{Result, SpectralError};

/// Chebyshev-Gauss-Lobatto nodes `x_i = -cos(pi i / N)` with their quadrature
/// weights and the discrete basis norms `(T_n, T_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevGrid {
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    norms: Vec<f64>,
}

pub fn build_grid(order: usize) -> Result<ChebyshevGrid> {
    if order == 0 {
        return Err(SpectralError::DegenerateOrder(order));
    }
    let n = order as f64;
    let nodes = (0..=order)
        .map(|i| {
            // pin the endpoints and the centre so symmetric grids are exact
            if i == 0 {
                -1.0
            } else if i == order {
                1.0
            } else if 2 * i == order {
                0.0
            } else {
                -(PI * i as f64 / n).cos()
            }
        })
        .collect();
    let weights = (0..=order).map(|i| if i == 0 || i == order { PI / (2.0 * n) } else { PI / n }).collect();
    let norms = (0..=order).map(|k| if k == 0 || k == order { PI } else { PI / 2.0 }).collect();
    Ok(ChebyshevGrid { order, nodes, weights, norms })
}

impl ChebyshevGrid {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.order + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn norms(&self) -> &[f64] {
        &self.norms
    }

    /// Smallest distance between neighbouring nodes (at the endpoints).
    pub fn min_spacing(&self) -> f64 {
        self.nodes.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min)
    }

    /// Largest distance between neighbouring nodes (at the centre).
    pub fn max_spacing(&self) -> f64 {
        self.nodes.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max)
    }

    /// Index `i` of the collocation interval `[x_i, x_{i+1}]` containing `x`.
    /// Points outside the domain are clamped to the first/last interval.
    pub fn bracket(&self, x: f64) -> usize {
        let i = self.nodes.partition_point(|&node| node <= x);
        i.saturating_sub(1).min(self.order - 1)
    }

    /// Width of the collocation interval containing `x`.
    pub fn local_spacing(&self, x: f64) -> f64 {
        let i = self.bracket(x);
        self.nodes[i + 1] - self.nodes[i]
    }

    /// Chebyshev-weighted quadrature `sum_i f(x_i) w_i`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| f(x) * w).sum()
    }
}
