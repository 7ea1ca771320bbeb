//! Configuration, snapshot post-processing and output writing for the
//! `shockspec` tool.

mod config;
mod error;
mod output;
mod pipeline;

pub use config::{load_config, parse_config, SimulationConfig, KEYS};
pub use error::{ConfigError, PipelineError};
pub use output::write_outputs;
pub use pipeline::{
    postprocess_all, postprocess_snapshot, process_field, run_pipeline, ProcessedSnapshot, RunOutput, SnapshotFailure,
    SnapshotOutcome, Treatment,
};
