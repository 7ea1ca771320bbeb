use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::quad::integrate;
use crate::DetectionConfig;

const PANELS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Trigonometric,
    Polynomial,
    Exponential,
}

/// One concentration factor `mu(eta)`, optionally damped by a Lanczos
/// multiplier `sinc(eta)^l`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcentrationFactor {
    pub family: Family,
    pub lanczos_order: u32,
    constant: f64,
    exp_alpha: f64,
    poly_order: i32,
    scale: f64,
}

impl ConcentrationFactor {
    pub fn new(family: Family, lanczos_order: u32, cfg: &DetectionConfig) -> Self {
        let alpha = cfg.exp_alpha;
        let constant = match family {
            Family::Trigonometric => PI / integrate(|t| t.sin() / t, 0.0, PI, PANELS),
            Family::Polynomial => cfg.poly_order as f64 * PI,
            Family::Exponential => PI / integrate(|e| exp_bump(e, alpha), 0.0, 1.0, PANELS),
        };
        let mut factor = ConcentrationFactor {
            family,
            lanczos_order,
            constant,
            exp_alpha: alpha,
            poly_order: cfg.poly_order,
            scale: 1.0,
        };
        // admissibility: int_0^1 mu(eta) / eta d eta = pi
        let mass = integrate(|e| factor.value(e) / e, 0.0, 1.0, PANELS);
        factor.scale = PI / mass;
        factor
    }

    /// `mu(eta)` including the Lanczos multiplier; zero outside `(0, 1]`.
    pub fn value(&self, eta: f64) -> f64 {
        if !(eta > 0.0 && eta <= 1.0) {
            return 0.0;
        }
        let base = match self.family {
            Family::Trigonometric => self.constant * (PI * eta).sin(),
            Family::Polynomial => self.constant * eta.powi(self.poly_order),
            Family::Exponential => self.constant * eta * exp_bump(eta, self.exp_alpha),
        };
        base * sinc(eta).powi(self.lanczos_order as i32)
    }

    /// The factor rescaled to unit admissibility mass; this is the weight
    /// actually applied in the jump sum. Equal to [`Self::value`] for the
    /// unfiltered families.
    pub fn weight(&self, eta: f64) -> f64 {
        self.scale * self.value(eta)
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn label(&self) -> String {
        format!("{:?}/lanczos{}", self.family, self.lanczos_order)
    }
}

fn exp_bump(eta: f64, alpha: f64) -> f64 {
    if eta <= 0.0 || eta >= 1.0 {
        0.0
    } else {
        (1.0 / (alpha * eta * (eta - 1.0))).exp()
    }
}

fn sinc(eta: f64) -> f64 {
    if eta == 0.0 {
        1.0
    } else {
        (PI * eta).sin() / (PI * eta)
    }
}

/// All three families at Lanczos orders 0 to 3.
pub fn build_concentration_factors(cfg: &DetectionConfig) -> Vec<ConcentrationFactor> {
    [Family::Trigonometric, Family::Polynomial, Family::Exponential]
        .into_iter()
        .flat_map(|f| (0..4).map(move |l| (f, l)))
        .map(|(f, l)| ConcentrationFactor::new(f, l, cfg))
        .collect()
}
