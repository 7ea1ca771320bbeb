//! Composite Gauss-Legendre quadrature for the one-dimensional normalisation
//! integrals of the concentration factors.

const NODES: [f64; 5] =
    [-0.906_179_845_938_664, -0.538_469_310_105_683, 0.0, 0.538_469_310_105_683, 0.906_179_845_938_664];
const WEIGHTS: [f64; 5] =
    [0.236_926_885_056_189, 0.478_628_670_499_366, 0.568_888_888_888_889, 0.478_628_670_499_366, 0.236_926_885_056_189];

/// Integral of `f` over `[a, b]`; `f` is never evaluated at the endpoints.
pub(crate) fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|p| {
            let mid = a + (p as f64 + 0.5) * h;
            NODES.iter().zip(WEIGHTS).map(|(t, w)| w * f(mid + 0.5 * h * t)).sum::<f64>() * 0.5 * h
        })
        .sum()
}
