use burgers::SolverState;
use edge_detect::{build_concentration_factors, detect, ConcentrationFactor, EdgeReport, Label, MinmodProfile};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use spectral_core::SpectralField;

use crate::{PipelineError, SimulationConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Treatment {
    None,
    TwoSided,
    OneSided,
}

impl Treatment {
    pub fn for_label(label: Label) -> Self {
        match label {
            Label::Smooth => Treatment::None,
            Label::ResolutionLimited => Treatment::TwoSided,
            Label::Discontinuous => Treatment::OneSided,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ProcessedSnapshot {
    pub time: f64,
    pub nodes: Vec<f64>,
    pub raw_nodal: Vec<f64>,
    pub modal: Vec<f64>,
    pub edge_report: EdgeReport,
    /// Absent exactly when the field was labelled smooth.
    pub mollified_nodal: Option<Vec<f64>>,
    pub treatment: Treatment,
    /// Number of peaks found before rejection.
    pub candidates: usize,
    pub minmod: MinmodProfile,
}

/// A snapshot whose post-processing failed; the batch carries on without it.
#[derive(Debug, Clone, PartialEq)]
pub struct SnapshotFailure {
    pub time: f64,
    pub message: String,
}

pub type SnapshotOutcome = Result<ProcessedSnapshot, SnapshotFailure>;

/// Detection and mollification for one field, with a prepared factor bank.
pub fn process_field(
    time: f64,
    field: &SpectralField,
    factors: &[ConcentrationFactor],
    config: &SimulationConfig,
) -> SnapshotOutcome {
    let fail = |message: String| SnapshotFailure { time, message };
    let detection = detect(field.modal(), field.max_abs(), field.grid(), factors, &config.detection)
        .map_err(|e| fail(e.to_string()))?;
    let report = detection.report;
    let treatment = Treatment::for_label(report.label);
    let mollified_nodal = match treatment {
        Treatment::None => None,
        _ => Some(mollifier::mollify(field, &report, &config.mollifier).map_err(|e| fail(e.to_string()))?),
    };
    Ok(ProcessedSnapshot {
        time,
        nodes: field.grid().nodes().to_vec(),
        raw_nodal: field.nodal().to_vec(),
        modal: field.modal().to_vec(),
        edge_report: report,
        mollified_nodal,
        treatment,
        candidates: detection.candidates.len(),
        minmod: detection.profile,
    })
}

pub fn postprocess_snapshot(state: &SolverState, config: &SimulationConfig) -> SnapshotOutcome {
    let factors = build_concentration_factors(&config.detection);
    process_field(state.time, &state.field, &factors, config)
}

/// Post-processes every snapshot in parallel; the output keeps input order.
pub fn postprocess_all(states: &[SolverState], config: &SimulationConfig) -> Vec<SnapshotOutcome> {
    let factors = build_concentration_factors(&config.detection);
    states.par_iter().map(|s| process_field(s.time, &s.field, &factors, config)).collect()
}

/// Result of a full run. `aborted` describes the solver failure when the
/// integration blew up; the snapshots taken before it are still processed.
#[derive(Debug)]
pub struct RunOutput {
    pub outcomes: Vec<SnapshotOutcome>,
    pub aborted: Option<String>,
}

pub fn run_pipeline(config: &SimulationConfig) -> Result<RunOutput, PipelineError> {
    config.validate()?;
    let (states, aborted) = match burgers::run_simulation(&config.solver) {
        Ok(states) => (states, None),
        Err(e @ burgers::BurgersError::Unstable { .. }) => {
            let msg = e.to_string();
            let burgers::BurgersError::Unstable { snapshots, .. } = e else { unreachable!() };
            (snapshots, Some(msg))
        }
        Err(e) => return Err(e.into()),
    };
    Ok(RunOutput { outcomes: postprocess_all(&states, config), aborted })
}
