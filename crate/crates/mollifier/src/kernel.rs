use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::{MollifierError, Result};

/// Points closer than this to an edge are treated as lying on it.
pub(crate) const EDGE_EPS: f64 = 1e-12;
/// Kernel support in units of the dilation; the Gaussian tail beyond is
/// below `e^-36`.
const SUPPORT: f64 = 6.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MollifierKind {
    TwoSided,
    OneSided,
}

/// Run-level mollifier settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MollifierParams {
    /// Dilation as a fraction of the distance to the nearest edge.
    pub theta: f64,
    /// `beta` in the degree rule `p = floor(beta (delta N)^2)`.
    pub p_scale: f64,
    /// Two-sided dilations are capped at this multiple of the widest
    /// collocation interval.
    pub resolution_cap: f64,
}

impl Default for MollifierParams {
    fn default() -> Self {
        MollifierParams { theta: 0.45, p_scale: 0.05, resolution_cap: 0.9 }
    }
}

impl MollifierParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.theta > 0.0 && self.theta <= 1.0) {
            return Err(MollifierError::InvalidParams(format!("theta = {} not in (0, 1]", self.theta)));
        }
        if !(self.p_scale >= 0.0 && self.p_scale.is_finite()) {
            return Err(MollifierError::InvalidParams(format!("p_scale = {} must be >= 0", self.p_scale)));
        }
        if !(self.resolution_cap > 0.0 && self.resolution_cap.is_finite()) {
            return Err(MollifierError::InvalidParams(format!("resolution_cap = {} must be > 0", self.resolution_cap)));
        }
        Ok(())
    }
}

/// Everything needed to build the kernel at any point of an order-`N` field.
#[derive(Debug, Clone, PartialEq)]
pub struct MollifierSpec {
    pub kind: MollifierKind,
    pub params: MollifierParams,
    pub order: usize,
    /// Largest collocation spacing of the grid (sets the two-sided cap).
    pub max_spacing: f64,
    /// Sorted edge locations, always including the virtual edges `-1` and `1`.
    pub edges: Vec<f64>,
}

impl MollifierSpec {
    pub fn new(kind: MollifierKind, params: MollifierParams, order: usize, max_spacing: f64, edges: &[f64]) -> Self {
        let mut all: Vec<f64> = edges.iter().copied().filter(|e| e.abs() < 1.0).collect();
        all.push(-1.0);
        all.push(1.0);
        all.sort_by(f64::total_cmp);
        all.dedup();
        MollifierSpec { kind, params, order, max_spacing, edges: all }
    }

    /// Distance from `x` to the nearest edge (virtual or confirmed).
    pub fn distance(&self, x: f64) -> f64 {
        self.edges.iter().map(|e| (x - e).abs()).fold(f64::INFINITY, f64::min)
    }

    /// Local dilation `delta(x)`.
    pub fn dilation(&self, x: f64) -> f64 {
        let delta = self.params.theta * self.distance(x);
        match self.kind {
            MollifierKind::OneSided => delta,
            MollifierKind::TwoSided => delta.min(self.params.resolution_cap * self.max_spacing),
        }
    }

    /// Number of Hermite terms beyond the Gaussian for dilation `delta`.
    pub fn degree(&self, delta: f64) -> usize {
        let scaled = delta * self.order as f64;
        let p = (self.params.p_scale * scaled * scaled).floor() as usize;
        match self.kind {
            MollifierKind::TwoSided => p.max(1),
            MollifierKind::OneSided => p,
        }
    }

    /// Edges on either side of `x`.
    fn bracketing_edges(&self, x: f64) -> (f64, f64) {
        let right = self.edges.partition_point(|&e| e < x);
        let left = self.edges[..right].last().copied().unwrap_or(-1.0);
        (left, self.edges.get(right).copied().unwrap_or(1.0))
    }
}

/// `rho_p(y) = e^{-y^2} sum_{j<=p} gamma_j H_{2j}(y)` with
/// `gamma_j = (-1)^j / (4^j j! sqrt(pi))`.
///
/// Evaluated through orthonormal Hermite functions so that large `p` stays
/// free of factorial overflow: `gamma_j H_{2j} e^{-y^2}` equals
/// `c_j psi_{2j}(y) e^{-y^2/2}` with `c_0 = pi^{-1/4}` and
/// `c_{j+1} = -c_j sqrt((2j+1)/(2j+2))`.
pub fn hermite_kernel(y: f64, p: usize) -> f64 {
    let gauss_half = (-0.5 * y * y).exp();
    let mut psi_prev = 0.0;
    let mut psi = PI.powf(-0.25) * gauss_half;
    let mut coef = PI.powf(-0.25);
    let mut sum = 0.0;
    let mut m = 0usize;
    for j in 0..=p {
        sum += coef * psi;
        for _ in 0..2 {
            let mf = m as f64;
            let next = (2.0 / (mf + 1.0)).sqrt() * y * psi - (mf / (mf + 1.0)).sqrt() * psi_prev;
            psi_prev = psi;
            psi = next;
            m += 1;
        }
        coef *= -((2 * j + 1) as f64 / (2 * j + 2) as f64).sqrt();
    }
    sum * gauss_half
}

/// Sampled kernel for one evaluation point; `weights * values` sums to one.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelSamples {
    pub abscissae: Vec<f64>,
    pub values: Vec<f64>,
    /// Trapezoid weights of the quadrature grid.
    pub weights: Vec<f64>,
    pub dilation: f64,
    pub degree: usize,
}

impl KernelSamples {
    pub fn mass(&self) -> f64 {
        self.values.iter().zip(&self.weights).map(|(v, w)| v * w).sum()
    }

    pub fn apply(&self, samples: &[f64]) -> f64 {
        self.values.iter().zip(&self.weights).zip(samples).map(|((v, w), s)| v * w * s).sum()
    }
}

/// Builds the kernel `phi(x - x') = rho_p((x - x') / delta) / delta` for the
/// point `x`, sampled on a uniform trapezoid grid over its support.
///
/// The support is `|x - x'| <= 6 delta`, clipped to `[-1, 1]`; one-sided
/// kernels are further clipped to the interval between the edges that
/// bracket `x`. The samples are renormalised to unit discrete mass.
pub fn build_kernel(spec: &MollifierSpec, x: f64) -> Result<KernelSamples> {
    if !(x > -1.0 && x < 1.0) {
        return Err(MollifierError::OutOfDomain(x));
    }
    if spec.distance(x) < EDGE_EPS {
        return Err(MollifierError::EdgeAtPoint(x));
    }
    let delta = spec.dilation(x);
    let degree = spec.degree(delta);
    let (mut lo, mut hi) = ((x - SUPPORT * delta).max(-1.0), (x + SUPPORT * delta).min(1.0));
    if spec.kind == MollifierKind::OneSided {
        let (left, right) = spec.bracketing_edges(x);
        lo = lo.max(left);
        hi = hi.min(right);
    }
    let base_step = 2.0 / (8 * spec.order.max(1)) as f64;
    let step = base_step.min(delta / 20.0);
    let n = (((hi - lo) / step).ceil() as usize).max(2);
    let h = (hi - lo) / n as f64;

    let abscissae: Vec<f64> = (0..=n).map(|i| if i == n { hi } else { lo + i as f64 * h }).collect();
    let weights: Vec<f64> = (0..=n).map(|i| if i == 0 || i == n { 0.5 * h } else { h }).collect();
    let mut values: Vec<f64> = abscissae.iter().map(|&xp| hermite_kernel((x - xp) / delta, degree) / delta).collect();
    let mass: f64 = values.iter().zip(&weights).map(|(v, w)| v * w).sum();
    values.iter_mut().for_each(|v| *v /= mass);
    Ok(KernelSamples { abscissae, values, weights, dilation: delta, degree })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct sum with explicit Hermite polynomials, valid for small p.
    fn naive(y: f64, p: usize) -> f64 {
        let mut h = vec![1.0, 2.0 * y];
        for m in 1..2 * p + 1 {
            let next = 2.0 * y * h[m] - 2.0 * m as f64 * h[m - 1];
            h.push(next);
        }
        let mut s = 0.0;
        let mut fact = 1.0;
        for j in 0..=p {
            if j > 0 {
                fact *= j as f64;
            }
            let g = (-1.0f64).powi(j as i32) / (4f64.powi(j as i32) * fact * PI.sqrt());
            s += g * h[2 * j];
        }
        s * (-y * y).exp()
    }

    #[test]
    fn stable_form_matches_direct_sum() {
        for p in 0..6 {
            for &y in &[-3.1, -1.0, -0.2, 0.0, 0.7, 2.5] {
                assert!((hermite_kernel(y, p) - naive(y, p)).abs() < 1e-13, "p={p} y={y}");
            }
        }
    }

    #[test]
    fn degree_rule() {
        let one = MollifierSpec::new(MollifierKind::OneSided, MollifierParams::default(), 60, 0.05, &[]);
        assert_eq!(one.degree(0.01), 0);
        assert_eq!(one.degree(0.3), 16);
        let two = MollifierSpec { kind: MollifierKind::TwoSided, ..one };
        assert_eq!(two.degree(0.01), 1);
    }

    #[test]
    fn edges_are_sorted_with_virtual_ends() {
        let s = MollifierSpec::new(MollifierKind::OneSided, MollifierParams::default(), 60, 0.05, &[0.3, -0.4, 1.0]);
        assert_eq!(s.edges, vec![-1.0, -0.4, 0.3, 1.0]);
        assert_eq!(s.bracketing_edges(0.0), (-0.4, 0.3));
        assert_eq!(s.bracketing_edges(0.5), (0.3, 1.0));
    }

    #[test]
    fn params_validation() {
        assert!(MollifierParams::default().validate().is_ok());
        assert!(MollifierParams { theta: 0.0, ..Default::default() }.validate().is_err());
        assert!(MollifierParams { p_scale: -1.0, ..Default::default() }.validate().is_err());
    }
}
