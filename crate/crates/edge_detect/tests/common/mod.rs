#![allow(dead_code)]

use edge_detect::*;
use spectral_core::*;

pub fn ops(order: usize) -> SpectralOperators {
    build_operators(&build_grid(order).unwrap())
}

pub fn tophat(x: f64) -> f64 {
    if x > -0.7 && x < -0.2 {
        1.0
    } else {
        0.0
    }
}

pub fn gaussian(x0: f64, sigma: f64) -> impl Fn(f64) -> f64 {
    move |x| (-(x - x0).powi(2) / (2.0 * sigma * sigma)).exp()
}

pub fn field<F: Fn(f64) -> f64>(order: usize, f: F) -> SpectralField {
    SpectralField::from_fn(&ops(order), f)
}

pub fn factors() -> Vec<ConcentrationFactor> {
    build_concentration_factors(&DetectionConfig::default())
}

pub fn detect_fn<F: Fn(f64) -> f64>(order: usize, f: F) -> Detection {
    let fld = field(order, f);
    let cfg = DetectionConfig::default();
    detect(fld.modal(), fld.max_abs(), fld.grid(), &factors(), &cfg).unwrap()
}

/// Si(pi) by a composite Simpson rule, independent of the library quadrature.
pub fn si_pi() -> f64 {
    let n = 20_000;
    let h = std::f64::consts::PI / n as f64;
    let f = |t: f64| if t == 0.0 { 1.0 } else { t.sin() / t };
    let mut s = f(0.0) + f(std::f64::consts::PI);
    for i in 1..n {
        s += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}
