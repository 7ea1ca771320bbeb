use serde::{Deserialize, Serialize};
use spectral_core::ChebyshevGrid;

use crate::{
    build_profile, classify_smoothness, find_peaks, reject_spurious, Candidate, ConcentrationFactor, DetectionConfig,
    MinmodProfile, PeakThreshold, Result, SlopeFit,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Label {
    Smooth,
    ResolutionLimited,
    Discontinuous,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub location: f64,
    pub height: f64,
    pub sign: i8,
}

/// Every threshold that took part in a classification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    pub rel_frac: f64,
    pub abs_floor: f64,
    pub tau: f64,
    pub slope_threshold: f64,
    pub height_floor: f64,
    pub max_width_factor: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub label: Label,
    pub edges: Vec<Edge>,
    pub rejected: Vec<f64>,
    pub slope_fit: SlopeFit,
    pub thresholds_used: Thresholds,
}

impl EdgeReport {
    pub fn edge_locations(&self) -> Vec<f64> {
        self.edges.iter().map(|e| e.location).collect()
    }
}

/// Report together with the intermediate data that produced it.
#[derive(Debug, Clone)]
pub struct Detection {
    pub report: EdgeReport,
    pub profile: MinmodProfile,
    pub candidates: Vec<Candidate>,
}

/// Runs the whole chain: smoothness test, peak search, and rejection of
/// spurious peaks. `u_scale` is the field's `max |u|`, which sets the
/// absolute peak floor.
pub fn detect(
    modal: &[f64],
    u_scale: f64,
    grid: &ChebyshevGrid,
    factors: &[ConcentrationFactor],
    cfg: &DetectionConfig,
) -> Result<Detection> {
    let profile = build_profile(modal, factors)?;
    let (slope_fit, smooth) = classify_smoothness(modal, u_scale, factors, cfg)?;
    let threshold = PeakThreshold { rel_frac: cfg.rel_frac, abs_floor: cfg.abs_floor_frac * u_scale };
    let thresholds = Thresholds {
        rel_frac: cfg.rel_frac,
        abs_floor: threshold.abs_floor,
        tau: threshold.tau(&profile),
        slope_threshold: cfg.slope_threshold,
        height_floor: cfg.height_floor,
        max_width_factor: cfg.max_width_factor,
    };
    let smooth_report = |slope_fit: SlopeFit, thresholds: Thresholds| EdgeReport {
        label: Label::Smooth,
        edges: Vec::new(),
        rejected: Vec::new(),
        slope_fit,
        thresholds_used: thresholds,
    };
    if smooth {
        return Ok(Detection { report: smooth_report(slope_fit, thresholds), profile, candidates: Vec::new() });
    }
    let candidates = find_peaks(&profile, grid, &threshold);
    if candidates.is_empty() {
        return Ok(Detection { report: smooth_report(slope_fit, thresholds), profile, candidates });
    }
    let report = reject_spurious(&profile, &candidates, grid, slope_fit, thresholds, cfg)?;
    Ok(Detection { report, profile, candidates })
}
