use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use burgers::{AdvectionForm, Coupling, SolverConfig};
use edge_detect::DetectionConfig;
use mollifier::MollifierParams;
use serde::{Deserialize, Serialize};

use crate::ConfigError;

/// Everything a run needs, resolved from defaults and a config file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationConfig {
    pub solver: SolverConfig,
    pub detection: DetectionConfig,
    pub mollifier: MollifierParams,
    pub outdir: PathBuf,
}

impl Default for SimulationConfig {
    fn default() -> Self {
        SimulationConfig {
            solver: SolverConfig::default(),
            detection: DetectionConfig::default(),
            mollifier: MollifierParams::default(),
            outdir: PathBuf::from("shockspec_out"),
        }
    }
}

pub const KEYS: [&str; 23] = [
    "order",
    "s",
    "c",
    "x0",
    "sigma",
    "cfl",
    "t_end",
    "snapshot_interval",
    "advection",
    "coupling",
    "rel_frac",
    "abs_floor_frac",
    "slope_threshold",
    "height_floor",
    "k_min",
    "k_step",
    "max_width_factor",
    "exp_alpha",
    "poly_order",
    "mollifier_theta",
    "mollifier_p_scale",
    "mollifier_resolution_cap",
    "outdir",
];

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value.parse().map_err(|_| ConfigError::BadValue { key: key.to_string(), value: value.to_string() })
}

fn advection_name(a: AdvectionForm) -> &'static str {
    match a {
        AdvectionForm::Skew => "skew",
        AdvectionForm::Advective => "advective",
        AdvectionForm::Disabled => "disabled",
    }
}

fn coupling_name(c: Coupling) -> &'static str {
    match c {
        Coupling::Upwind => "upwind",
        Coupling::Periodic => "periodic",
    }
}

impl SimulationConfig {
    /// Sets one key from its textual value. Returns `Ok(false)` for unknown keys.
    pub fn set(&mut self, key: &str, value: &str) -> Result<bool, ConfigError> {
        let (s, d, m) = (&mut self.solver, &mut self.detection, &mut self.mollifier);
        match key {
            "order" => s.order = parse(key, value)?,
            "s" => s.s = parse(key, value)?,
            "c" => s.c = parse(key, value)?,
            "x0" => s.x0 = parse(key, value)?,
            "sigma" => s.sigma = parse(key, value)?,
            "cfl" => s.cfl = parse(key, value)?,
            "t_end" => s.t_end = parse(key, value)?,
            "snapshot_interval" => s.snapshot_interval = parse(key, value)?,
            "advection" => {
                s.advection = match value.to_ascii_lowercase().as_str() {
                    "skew" => AdvectionForm::Skew,
                    "advective" => AdvectionForm::Advective,
                    "disabled" => AdvectionForm::Disabled,
                    _ => return Err(ConfigError::BadValue { key: key.into(), value: value.into() }),
                }
            }
            "coupling" => {
                s.coupling = match value.to_ascii_lowercase().as_str() {
                    "upwind" => Coupling::Upwind,
                    "periodic" => Coupling::Periodic,
                    _ => return Err(ConfigError::BadValue { key: key.into(), value: value.into() }),
                }
            }
            "rel_frac" => d.rel_frac = parse(key, value)?,
            "abs_floor_frac" => d.abs_floor_frac = parse(key, value)?,
            "slope_threshold" => d.slope_threshold = parse(key, value)?,
            "height_floor" => d.height_floor = parse(key, value)?,
            "k_min" => d.k_min = parse(key, value)?,
            "k_step" => d.k_step = parse(key, value)?,
            "max_width_factor" => d.max_width_factor = parse(key, value)?,
            "exp_alpha" => d.exp_alpha = parse(key, value)?,
            "poly_order" => d.poly_order = parse(key, value)?,
            "mollifier_theta" => m.theta = parse(key, value)?,
            "mollifier_p_scale" => m.p_scale = parse(key, value)?,
            "mollifier_resolution_cap" => m.resolution_cap = parse(key, value)?,
            "outdir" => self.outdir = PathBuf::from(value),
            _ => return Ok(false),
        }
        Ok(true)
    }

    /// Key/value pairs in the file format, in [`KEYS`] order.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let (s, d, m) = (&self.solver, &self.detection, &self.mollifier);
        vec![
            ("order", s.order.to_string()),
            ("s", s.s.to_string()),
            ("c", s.c.to_string()),
            ("x0", s.x0.to_string()),
            ("sigma", s.sigma.to_string()),
            ("cfl", s.cfl.to_string()),
            ("t_end", s.t_end.to_string()),
            ("snapshot_interval", s.snapshot_interval.to_string()),
            ("advection", advection_name(s.advection).to_string()),
            ("coupling", coupling_name(s.coupling).to_string()),
            ("rel_frac", d.rel_frac.to_string()),
            ("abs_floor_frac", d.abs_floor_frac.to_string()),
            ("slope_threshold", d.slope_threshold.to_string()),
            ("height_floor", d.height_floor.to_string()),
            ("k_min", d.k_min.to_string()),
            ("k_step", d.k_step.to_string()),
            ("max_width_factor", d.max_width_factor.to_string()),
            ("exp_alpha", d.exp_alpha.to_string()),
            ("poly_order", d.poly_order.to_string()),
            ("mollifier_theta", m.theta.to_string()),
            ("mollifier_p_scale", m.p_scale.to_string()),
            ("mollifier_resolution_cap", m.resolution_cap.to_string()),
            ("outdir", self.outdir.display().to_string()),
        ]
    }

    pub fn to_config_string(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.entries() {
            let _ = writeln!(out, "{k} = {v}");
        }
        out
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let invalid = |key: &str, reason: &str| Err(ConfigError::Invalid { key: key.into(), reason: reason.into() });
        if let Err(burgers::BurgersError::InvalidConfig { key, reason }) = self.solver.validate() {
            return invalid(key, &reason);
        }
        let d = &self.detection;
        if !(d.rel_frac > 0.0 && d.rel_frac < 1.0) {
            return invalid("rel_frac", "must lie in (0, 1)");
        }
        if !(d.abs_floor_frac >= 0.0 && d.abs_floor_frac < 1.0) {
            return invalid("abs_floor_frac", "must lie in [0, 1)");
        }
        if d.slope_threshold.is_nan() || d.slope_threshold >= 0.0 {
            return invalid("slope_threshold", "must be negative");
        }
        if d.height_floor.is_nan() || d.height_floor <= 0.0 {
            return invalid("height_floor", "must be positive");
        }
        if d.k_min < 2 {
            return invalid("k_min", "must be at least 2");
        }
        if d.k_min + 2 * d.k_step > self.solver.order {
            return invalid("k_min", "leaves fewer than three sweep orders below `order`");
        }
        if d.k_step == 0 {
            return invalid("k_step", "must be positive");
        }
        if !(d.max_width_factor > 0.0 && d.max_width_factor.is_finite()) {
            return invalid("max_width_factor", "must be positive");
        }
        if !(d.exp_alpha > 0.0 && d.exp_alpha.is_finite()) {
            return invalid("exp_alpha", "must be positive");
        }
        if d.poly_order < 1 {
            return invalid("poly_order", "must be at least 1");
        }
        let m = &self.mollifier;
        if !(m.theta > 0.0 && m.theta <= 1.0) {
            return invalid("mollifier_theta", "must lie in (0, 1]");
        }
        if !(m.p_scale >= 0.0 && m.p_scale.is_finite()) {
            return invalid("mollifier_p_scale", "must be non-negative");
        }
        if !(m.resolution_cap > 0.0 && m.resolution_cap.is_finite()) {
            return invalid("mollifier_resolution_cap", "must be positive");
        }
        if self.outdir.as_os_str().is_empty() {
            return invalid("outdir", "must not be empty");
        }
        Ok(())
    }
}

/// Parses config text on top of the defaults and validates the result.
pub fn parse_config(text: &str) -> Result<SimulationConfig, ConfigError> {
    let mut cfg = SimulationConfig::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(ConfigError::Syntax { line: i + 1, text: raw.to_string() });
        };
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || value.is_empty() {
            return Err(ConfigError::Syntax { line: i + 1, text: raw.to_string() });
        }
        if !cfg.set(key, value)? {
            return Err(ConfigError::UnknownKey { line: i + 1, key: key.to_string() });
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn load_config(path: &Path) -> Result<SimulationConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.to_path_buf(), source })?;
    parse_config(&text)
}
