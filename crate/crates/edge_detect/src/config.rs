use serde::{Deserialize, Serialize};

/// Tunable thresholds of the detection chain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetectionConfig {
    /// Peak threshold as a fraction of the global `|minmod|` maximum.
    pub rel_frac: f64,
    /// Absolute peak floor as a fraction of the field's `max |u|`.
    pub abs_floor_frac: f64,
    /// Convergence slopes below this value classify a field as smooth.
    pub slope_threshold: f64,
    /// Replaces zero peak heights before taking logarithms.
    pub height_floor: f64,
    /// Lower bound of the slope sweep; the sweep starts at `max(k_min, N/3)`.
    pub k_min: usize,
    pub k_step: usize,
    /// A smoothed peak is a genuine edge only if its half-prominence width is
    /// at most this multiple of the local collocation spacing.
    pub max_width_factor: f64,
    /// `alpha` in the exponential factor `exp(1 / (alpha eta (eta - 1)))`.
    pub exp_alpha: f64,
    /// Power `p` of the polynomial factor `p pi eta^p`.
    pub poly_order: i32,
}

impl Default for DetectionConfig {
    fn default() -> Self {
        DetectionConfig {
            rel_frac: 0.1,
            abs_floor_frac: 0.02,
            slope_threshold: -0.0125,
            height_floor: 1e-14,
            k_min: 16,
            k_step: 2,
            max_width_factor: 1.7,
            exp_alpha: 8.0,
            poly_order: 1,
        }
    }
}
