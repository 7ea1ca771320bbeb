use edge_detect::{EdgeReport, Label};
use spectral_core::{synthesize_unchecked, SpectralField};

use crate::kernel::EDGE_EPS;
use crate::{build_kernel, MollifierError, MollifierKind, MollifierParams, MollifierSpec, Result};

/// Mollifies an arbitrary function `f` (evaluated in batches) at `points`.
///
/// Points on the domain boundary are returned unchanged; a point on a
/// confirmed edge is an error.
pub fn mollify_fn<F>(spec: &MollifierSpec, f: F, points: &[f64]) -> Result<Vec<f64>>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    spec.params.validate()?;
    points
        .iter()
        .map(|&x| {
            if !(-1.0..=1.0).contains(&x) {
                return Err(MollifierError::OutOfDomain(x));
            }
            if 1.0 - x.abs() < EDGE_EPS {
                return Ok(f(&[x])[0]);
            }
            let kernel = build_kernel(spec, x)?;
            Ok(kernel.apply(&f(&kernel.abscissae)))
        })
        .collect()
}

/// Mollifies the partial sum with coefficients `modal` at `points`.
pub fn mollify_at(modal: &[f64], spec: &MollifierSpec, points: &[f64]) -> Result<Vec<f64>> {
    mollify_fn(spec, |xs| synthesize_unchecked(modal, xs), points)
}

/// Mollified nodal values for a field that failed the smoothness test:
/// two-sided kernels for resolution-limited fields, one-sided kernels at the
/// confirmed edges for discontinuous ones.
pub fn mollify(field: &SpectralField, report: &EdgeReport, params: &MollifierParams) -> Result<Vec<f64>> {
    let (kind, edges) = match report.label {
        Label::Smooth => return Err(MollifierError::SmoothField),
        Label::ResolutionLimited => (MollifierKind::TwoSided, Vec::new()),
        Label::Discontinuous => (MollifierKind::OneSided, report.edge_locations()),
    };
    let grid = field.grid();
    let spec = MollifierSpec::new(kind, params.clone(), grid.order(), grid.max_spacing(), &edges);
    mollify_at(field.modal(), &spec, grid.nodes())
}
