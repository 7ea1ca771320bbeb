use std::f64::consts::PI;

use spectral_core::ChebyshevGrid;

use crate::{ConcentrationFactor, EdgeError, Result};

/// Distance kept from the endpoints, where `sqrt(1 - x^2)` vanishes.
const ENDPOINT_GAP: f64 = 1e-6;

/// Jump approximations of every factor and their minmod combination on a
/// common set of abscissae.
#[derive(Debug, Clone, PartialEq)]
pub struct MinmodProfile {
    pub abscissae: Vec<f64>,
    pub jump_approxs: Vec<Vec<f64>>,
    pub minmod: Vec<f64>,
}

impl MinmodProfile {
    pub fn max_abs(&self) -> f64 {
        self.minmod.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Abscissae on `[-1 + 1e-6, 1 - 1e-6]`: uniform with step `2 / 4N` for
/// `|x| <= sqrt(1 - 4/pi^2)`, angle-uniform points `-cos(pi (j + 1/2) / 4N)`
/// beyond, where those are denser. Every collocation interval then holds
/// about four samples even next to the endpoints, and no sample sits on a
/// collocation node.
pub fn evaluation_grid(order: usize) -> Vec<f64> {
    let n = 4 * order.max(1);
    let h = 2.0 / n as f64;
    let x_c = (1.0 - 4.0 / (PI * PI)).sqrt();
    let mut xs: Vec<f64> = (0..=n).map(|i| -1.0 + h * i as f64).filter(|x| x.abs() <= x_c).collect();
    let (lo, hi) = (xs[0], xs[xs.len() - 1]);
    for j in 0..n {
        let x = -(PI * (j as f64 + 0.5) / n as f64).cos();
        if (x < 0.0 && x < lo - 0.25 * h) || (x > 0.0 && x > hi + 0.25 * h) {
            xs.push(x.clamp(-1.0 + ENDPOINT_GAP, 1.0 - ENDPOINT_GAP));
        }
    }
    xs.push(-1.0 + ENDPOINT_GAP);
    xs.push(1.0 - ENDPOINT_GAP);
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs
}

/// Concentration-factor jump approximation
///
/// `j(x) = sum_{k=1}^{N} mu(k/N) u_hat_k sin(k theta)`, `x = cos theta`,
///
/// which is the conjugate partial sum `sqrt(1-x^2) T_k'(x) = k sin(k theta)`
/// written in the angle variable. Returns 0 at `x = +-1`.
pub fn jump_approx(modal: &[f64], factor: &ConcentrationFactor, abscissae: &[f64]) -> Vec<f64> {
    let order = modal.len().saturating_sub(1);
    if order == 0 {
        return vec![0.0; abscissae.len()];
    }
    let coefs: Vec<f64> = (1..=order).map(|k| factor.weight(k as f64 / order as f64) * modal[k]).collect();
    abscissae.iter().map(|&x| sine_series(&coefs, x)).collect()
}

/// `sum_k c_k sin(k theta)` (with `c_0` paired to `k = 1`) by Clenshaw's recurrence.
fn sine_series(coefs: &[f64], x: f64) -> f64 {
    if x.abs() >= 1.0 {
        return 0.0;
    }
    let two_cos = 2.0 * x;
    let (mut b1, mut b2) = (0.0, 0.0);
    for &c in coefs.iter().rev() {
        let b0 = c + two_cos * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    b1 * (1.0 - x * x).sqrt()
}

/// Pointwise minmod: the smallest value where every row is positive, the
/// largest where every row is negative, zero otherwise.
pub fn minmod_combine(rows: &[Vec<f64>]) -> Result<Vec<f64>> {
    let first = rows.first().ok_or(EdgeError::EmptyMinmod)?;
    if rows.iter().any(|r| r.len() != first.len()) {
        return Err(EdgeError::EmptyMinmod);
    }
    Ok((0..first.len())
        .map(|i| {
            let col = rows.iter().map(|r| r[i]);
            if rows.iter().all(|r| r[i] > 0.0) {
                col.fold(f64::INFINITY, f64::min)
            } else if rows.iter().all(|r| r[i] < 0.0) {
                col.fold(f64::NEG_INFINITY, f64::max)
            } else {
                0.0
            }
        })
        .collect())
}

/// Minmod profile of `modal` on the standard evaluation grid of its order.
pub fn build_profile(modal: &[f64], factors: &[ConcentrationFactor]) -> Result<MinmodProfile> {
    let abscissae = evaluation_grid(modal.len().saturating_sub(1).max(1));
    let jump_approxs: Vec<Vec<f64>> = factors.iter().map(|f| jump_approx(modal, f, &abscissae)).collect();
    let minmod = minmod_combine(&jump_approxs)?;
    Ok(MinmodProfile { abscissae, jump_approxs, minmod })
}

/// Width of the collocation interval around `x` (helper shared by the
/// peak and rejection stages).
pub(crate) fn spacing_at(grid: &ChebyshevGrid, x: f64) -> (usize, f64) {
    let i = grid.bracket(x);
    (i, grid.nodes()[i + 1] - grid.nodes()[i])
}
