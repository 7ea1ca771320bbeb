use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::{PipelineError, ProcessedSnapshot, SimulationConfig, SnapshotOutcome};

#[derive(Debug, Serialize)]
struct ManifestEntry<'a> {
    index: usize,
    time: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minmod_file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<edge_detect::Label>,
    #[serde(skip_serializing_if = "Option::is_none")]
    treatment: Option<crate::Treatment>,
    #[serde(skip_serializing_if = "Option::is_none")]
    candidates: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a edge_detect::EdgeReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
}

#[derive(Debug, Serialize)]
struct Manifest<'a> {
    times: Vec<f64>,
    snapshots: Vec<ManifestEntry<'a>>,
    config: &'a SimulationConfig,
    config_text: String,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> PipelineError + '_ {
    move |source| PipelineError::Io { path: path.to_path_buf(), source }
}

fn csv_err(path: &Path) -> impl FnOnce(csv::Error) -> PipelineError + '_ {
    move |e| PipelineError::Io { path: path.to_path_buf(), source: e.into() }
}

fn write_snapshot_csv(path: &Path, snap: &ProcessedSnapshot) -> Result<(), PipelineError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(["x", "u_raw", "u_mollified"]).map_err(csv_err(path))?;
    for (i, (x, u)) in snap.nodes.iter().zip(&snap.raw_nodal).enumerate() {
        let m = snap.mollified_nodal.as_ref().map(|m| m[i].to_string()).unwrap_or_default();
        w.write_record([x.to_string(), u.to_string(), m]).map_err(csv_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

fn write_minmod_csv(path: &Path, snap: &ProcessedSnapshot) -> Result<(), PipelineError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(["x", "minmod"]).map_err(csv_err(path))?;
    for (x, m) in snap.minmod.abscissae.iter().zip(&snap.minmod.minmod) {
        w.write_record([x.to_string(), m.to_string()]).map_err(csv_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

fn write_all(
    outcomes: &[SnapshotOutcome],
    config: &SimulationConfig,
    outdir: &Path,
    created: &mut Vec<PathBuf>,
) -> Result<PathBuf, PipelineError> {
    fs::create_dir_all(outdir).map_err(io_err(outdir))?;
    let mut entries = Vec::with_capacity(outcomes.len());
    for (index, outcome) in outcomes.iter().enumerate() {
        match outcome {
            Ok(snap) => {
                let (file, minmod_file) = (format!("snap_{index}.csv"), format!("minmod_{index}.csv"));
                let p = outdir.join(&file);
                created.push(p.clone());
                write_snapshot_csv(&p, snap)?;
                let p = outdir.join(&minmod_file);
                created.push(p.clone());
                write_minmod_csv(&p, snap)?;
                entries.push(ManifestEntry {
                    index,
                    time: snap.time,
                    file: Some(file),
                    minmod_file: Some(minmod_file),
                    label: Some(snap.edge_report.label),
                    treatment: Some(snap.treatment),
                    candidates: Some(snap.candidates),
                    report: Some(&snap.edge_report),
                    error: None,
                });
            }
            Err(f) => entries.push(ManifestEntry {
                index,
                time: f.time,
                file: None,
                minmod_file: None,
                label: None,
                treatment: None,
                candidates: None,
                report: None,
                error: Some(&f.message),
            }),
        }
    }
    let manifest = Manifest {
        times: entries.iter().map(|e| e.time).collect(),
        snapshots: entries,
        config,
        config_text: config.to_config_string(),
    };
    let path = outdir.join("manifest.json");
    created.push(path.clone());
    let text = serde_json::to_string_pretty(&manifest)
        .map_err(|e| PipelineError::Io { path: path.clone(), source: e.into() })?;
    fs::write(&path, text).map_err(io_err(&path))?;
    Ok(path)
}

/// Writes `snap_<i>.csv`, `minmod_<i>.csv` and `manifest.json` into `outdir`
/// and returns the manifest path. On failure every file written so far is
/// removed again.
pub fn write_outputs(
    outcomes: &[SnapshotOutcome],
    config: &SimulationConfig,
    outdir: &Path,
) -> Result<PathBuf, PipelineError> {
    let mut created = Vec::new();
    let result = write_all(outcomes, config, outdir, &mut created);
    if result.is_err() {
        for p in created {
            let _ = fs::remove_file(p);
        }
    }
    result
}
