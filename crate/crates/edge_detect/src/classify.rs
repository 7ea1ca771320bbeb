use serde::{Deserialize, Serialize};
use spectral_core::DownsampleMap;

use crate::{build_profile, ConcentrationFactor, DetectionConfig, EdgeError, Result};

/// Least-squares fit of `ln h(K)` against `K`, where `h(K)` is the largest
/// `|minmod|` of the expansion re-collocated at order `K`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlopeFit {
    pub sampled_orders: Vec<usize>,
    pub peak_heights: Vec<f64>,
    pub slope: f64,
    pub intercept: f64,
    /// Every height sat at the floor; the fit carries no information.
    pub degenerate: bool,
}

impl SlopeFit {
    pub fn max_height(&self) -> f64 {
        self.peak_heights.iter().cloned().fold(0.0, f64::max)
    }
}

/// Returns the fit and whether the field counts as smooth.
///
/// A field is smooth when the slope is below `slope_threshold`, or when every
/// sampled peak stays below the absolute floor `abs_floor_frac * u_scale`.
pub fn classify_smoothness(
    modal: &[f64],
    u_scale: f64,
    factors: &[ConcentrationFactor],
    cfg: &DetectionConfig,
) -> Result<(SlopeFit, bool)> {
    let order = modal.len().saturating_sub(1);
    let k_min = cfg.k_min.max(order / 3);
    let step = cfg.k_step.max(1);
    if order < k_min + 4 {
        return Err(EdgeError::SweepTooShort { k_min, order });
    }
    let sampled_orders: Vec<usize> = (k_min..=order).step_by(step).collect();
    let mut peak_heights = Vec::with_capacity(sampled_orders.len());
    for &k in &sampled_orders {
        let reduced = DownsampleMap::new(order, k)?.apply(modal)?;
        let h = build_profile(&reduced, factors)?.max_abs();
        peak_heights.push(if h > cfg.height_floor { h } else { cfg.height_floor });
    }
    let degenerate = peak_heights.iter().all(|&h| h <= cfg.height_floor);
    let logs: Vec<f64> = peak_heights.iter().map(|h| h.ln()).collect();
    let ks: Vec<f64> = sampled_orders.iter().map(|&k| k as f64).collect();
    let (slope, intercept) = least_squares(&ks, &logs);

    let fit = SlopeFit { sampled_orders, peak_heights, slope, intercept, degenerate };
    let below_floor = fit.max_height() < cfg.abs_floor_frac * u_scale;
    let smooth = degenerate || below_floor || slope < cfg.slope_threshold;
    Ok((fit, smooth))
}

fn least_squares(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}
