use crate::{Result, SpectralError, SpectralOperators};

/// Slack allowed when checking that an abscissa lies in `[-1, 1]`.
const DOMAIN_SLACK: f64 = 1e-12;

/// `T_n(x)` by the three-term recurrence.
pub fn chebyshev_t(n: usize, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x,
        _ => {
            let (mut t0, mut t1) = (1.0, x);
            for _ in 2..=n {
                let t2 = 2.0 * x * t1 - t0;
                t0 = t1;
                t1 = t2;
            }
            t1
        }
    }
}

/// `T_n'(x)`, using the closed forms `(+-1)^(n+1) n^2` at the endpoints.
pub fn chebyshev_t_prime(n: usize, x: f64) -> f64 {
    let nf = n as f64;
    if x >= 1.0 {
        return nf * nf;
    }
    if x <= -1.0 {
        let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 };
        return sign * nf * nf;
    }
    let theta = x.acos();
    nf * (nf * theta).sin() / theta.sin()
}

/// Nodal to modal transform, `u_hat_n = V_ni u_i`.
pub fn analyze(nodal: &[f64], ops: &SpectralOperators) -> Result<Vec<f64>> {
    let n = ops.order() + 1;
    if nodal.len() != n {
        return Err(SpectralError::LengthMismatch { expected: n, actual: nodal.len() });
    }
    Ok(ops.apply_analysis(nodal))
}

/// Evaluates the partial sum `S_N[u](x) = sum_n u_hat_n T_n(x)` at each point.
pub fn synthesize(modal: &[f64], points: &[f64]) -> Result<Vec<f64>> {
    if let Some(&bad) = points.iter().find(|x| x.is_nan() || x.abs() > 1.0 + DOMAIN_SLACK) {
        return Err(SpectralError::OutOfDomain(bad));
    }
    Ok(synthesize_unchecked(modal, points))
}

/// Like [`synthesize`] without the domain check.
pub fn synthesize_unchecked(modal: &[f64], points: &[f64]) -> Vec<f64> {
    points.iter().map(|&x| clenshaw(modal, x)).collect()
}

fn clenshaw(c: &[f64], x: f64) -> f64 {
    let Some((&c0, rest)) = c.split_first() else {
        return 0.0;
    };
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in rest.iter().rev() {
        let b0 = ck + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    c0 + x * b1 - b2
}
