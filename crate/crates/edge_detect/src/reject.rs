use spectral_core::ChebyshevGrid;

use crate::jump::spacing_at;
use crate::peaks::local_maxima;
use crate::report::{Edge, EdgeReport, Label, Thresholds};
use crate::{half_prominence_width, Candidate, DetectionConfig, EdgeError, MinmodProfile, Result, SlopeFit};

/// Convolves the minmod profile with a Gaussian of standard deviation
/// `omega = (x_{i+1} - x_i) / 2`, the half-width of the collocation interval
/// around `center`. Trapezoid weights on the profile abscissae; the kernel is
/// renormalised at every output point so constants are preserved.
pub fn smooth_minmod(profile: &MinmodProfile, center: f64, grid: &ChebyshevGrid) -> Result<Vec<f64>> {
    if !(-1.0..=1.0).contains(&center) {
        return Err(EdgeError::CenterOutOfDomain(center));
    }
    let (_, spacing) = spacing_at(grid, center);
    Ok(gaussian_smooth(&profile.abscissae, &profile.minmod, 0.5 * spacing))
}

fn gaussian_smooth(x: &[f64], v: &[f64], omega: f64) -> Vec<f64> {
    let n = x.len();
    let trap: Vec<f64> = (0..n)
        .map(|j| {
            let left = if j > 0 { x[j] - x[j - 1] } else { 0.0 };
            let right = if j + 1 < n { x[j + 1] - x[j] } else { 0.0 };
            0.5 * (left + right)
        })
        .collect();
    let inv = 1.0 / (2.0 * omega * omega);
    x.iter()
        .map(|&xi| {
            let (mut num, mut mass) = (0.0, 0.0);
            for j in 0..n {
                let k = (-(xi - x[j]).powi(2) * inv).exp() * trap[j];
                num += k * v[j];
                mass += k;
            }
            num / mass
        })
        .collect()
}

/// Outcome of the secondary search for one candidate.
fn confirm(
    profile: &MinmodProfile,
    candidate: &Candidate,
    grid: &ChebyshevGrid,
    tau: f64,
    max_width_factor: f64,
) -> Result<bool> {
    let smoothed = smooth_minmod(profile, candidate.location, grid)?;
    let abs: Vec<f64> = smoothed.iter().map(|v| v.abs()).collect();
    let spacing = candidate.spacing();
    Ok(local_maxima(&abs, tau).into_iter().any(|p| {
        (profile.abscissae[p] - candidate.location).abs() <= spacing
            && half_prominence_width(&profile.abscissae, &abs, p) <= max_width_factor * spacing
    }))
}

/// Smooths the profile around each candidate and keeps the candidates whose
/// peak survives nearby with a width of at most `max_width_factor` local
/// collocation spacings.
pub fn reject_spurious(
    profile: &MinmodProfile,
    candidates: &[Candidate],
    grid: &ChebyshevGrid,
    slope_fit: SlopeFit,
    thresholds: Thresholds,
    cfg: &DetectionConfig,
) -> Result<EdgeReport> {
    if candidates.is_empty() {
        return Err(EdgeError::NoCandidates);
    }
    let mut edges = Vec::new();
    let mut rejected = Vec::new();
    for c in candidates {
        if confirm(profile, c, grid, thresholds.tau, cfg.max_width_factor)? {
            edges.push(Edge { location: c.location, height: c.height, sign: c.height.signum() as i8 });
        } else {
            rejected.push(c.location);
        }
    }
    let label = if edges.is_empty() { Label::ResolutionLimited } else { Label::Discontinuous };
    Ok(EdgeReport { label, edges, rejected, slope_fit, thresholds_used: thresholds })
}
