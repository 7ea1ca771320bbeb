use serde::{Deserialize, Serialize};
use spectral_core::ChebyshevGrid;

use crate::jump::spacing_at;
use crate::MinmodProfile;

/// `tau = max(rel_frac * max|minmod|, abs_floor)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakThreshold {
    pub rel_frac: f64,
    pub abs_floor: f64,
}

impl PeakThreshold {
    pub fn tau(&self, profile: &MinmodProfile) -> f64 {
        (self.rel_frac * profile.max_abs()).max(self.abs_floor)
    }
}

/// A local extremum of `|minmod|` above the threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub location: f64,
    /// Signed minmod value at the extremum.
    pub height: f64,
    /// Index into the profile abscissae.
    pub index: usize,
    /// Collocation interval `[x_i, x_{i+1}]` containing the extremum.
    pub bracket: (f64, f64),
}

impl Candidate {
    pub fn spacing(&self) -> f64 {
        self.bracket.1 - self.bracket.0
    }
}

pub fn find_peaks(profile: &MinmodProfile, grid: &ChebyshevGrid, threshold: &PeakThreshold) -> Vec<Candidate> {
    let tau = threshold.tau(profile);
    let abs: Vec<f64> = profile.minmod.iter().map(|v| v.abs()).collect();
    local_maxima(&abs, tau)
        .into_iter()
        .map(|index| {
            let location = profile.abscissae[index];
            let (i, _) = spacing_at(grid, location);
            Candidate {
                location,
                height: profile.minmod[index],
                index,
                bracket: (grid.nodes()[i], grid.nodes()[i + 1]),
            }
        })
        .collect()
}

/// Interior local maxima strictly above `tau`; a flat top reports its midpoint.
pub(crate) fn local_maxima(a: &[f64], tau: f64) -> Vec<usize> {
    let n = a.len();
    let mut out = Vec::new();
    let mut i = 1;
    while i + 1 < n {
        if a[i] > tau && a[i] > a[i - 1] {
            let mut j = i;
            while j + 1 < n && a[j + 1] == a[i] {
                j += 1;
            }
            if j + 1 < n && a[j + 1] < a[i] {
                out.push((i + j) / 2);
            }
            i = j + 1;
        } else {
            i += 1;
        }
    }
    out
}

/// Full width at half prominence of the peak of `a` at `peak`.
///
/// The prominence base on each side is the lowest point reached before the
/// signal rises above the peak (or the data ends); the width is measured
/// between linearly interpolated crossings of `peak - prominence / 2`.
pub fn half_prominence_width(x: &[f64], a: &[f64], peak: usize) -> f64 {
    let h = a[peak];
    let n = a.len();
    let (mut l, mut left_min) = (peak, h);
    while l > 0 && a[l - 1] <= h {
        l -= 1;
        left_min = left_min.min(a[l]);
    }
    let (mut r, mut right_min) = (peak, h);
    while r + 1 < n && a[r + 1] <= h {
        r += 1;
        right_min = right_min.min(a[r]);
    }
    let level = h - 0.5 * (h - left_min.max(right_min));

    let mut l = peak;
    while l > 0 && a[l - 1] > level {
        l -= 1;
    }
    let mut r = peak;
    while r + 1 < n && a[r + 1] > level {
        r += 1;
    }
    let xl = if l == 0 { x[0] } else { x[l - 1] + (level - a[l - 1]) / (a[l] - a[l - 1]) * (x[l] - x[l - 1]) };
    let xr = if r == n - 1 { x[n - 1] } else { x[r] + (a[r] - level) / (a[r] - a[r + 1]) * (x[r + 1] - x[r]) };
    xr - xl
}
