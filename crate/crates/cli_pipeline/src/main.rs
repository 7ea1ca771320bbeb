use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cli_pipeline::*;
use edge_detect::build_concentration_factors;
use spectral_core::{build_grid, build_operators, SpectralField};

#[derive(Parser)]
#[command(name = "shockspec", version, about = "Spectral shock detection and mollification for Burgers' equation")]
struct Cli {
    /// Key-value config file; absent keys take their defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory (overrides `outdir` from the config).
    #[arg(long, global = true)]
    outdir: Option<PathBuf>,
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve, detect, classify and mollify every snapshot.
    Run,
    /// Run the detector on one field given as nodal values on the CGL grid.
    Detect {
        /// CSV with the nodal values in its last column (a header row is allowed).
        input: PathBuf,
        /// Expected order N; the file must then hold N+1 rows.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Detection and one-sided mollification of the tophat on [-0.7, -0.2].
    DemoTophat,
}

enum Failure {
    Config(String),
    Numerical(String),
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Config(_) | PipelineError::Input(_) | PipelineError::Io { .. } => {
                Failure::Config(e.to_string())
            }
            _ => Failure::Numerical(e.to_string()),
        }
    }
}

fn read_nodal(path: &Path) -> Result<Vec<f64>, PipelineError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| PipelineError::Input(e.to_string()))?;
    let mut values = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| PipelineError::Input(e.to_string()))?;
        let Some(last) = rec.iter().next_back() else { continue };
        match last.parse::<f64>() {
            Ok(v) => values.push(v),
            Err(_) if i == 0 => {}
            Err(_) => return Err(PipelineError::Input(format!("row {}: `{last}` is not a number", i + 1))),
        }
    }
    Ok(values)
}

fn summary(outcomes: &[SnapshotOutcome]) {
    for o in outcomes {
        match o {
            Ok(s) => eprintln!(
                "t = {:7.4}  {:?}  candidates {}  edges {:?}",
                s.time,
                s.edge_report.label,
                s.candidates,
                s.edge_report.edge_locations()
            ),
            Err(f) => eprintln!("t = {:7.4}  failed: {}", f.time, f.message),
        }
    }
}

fn real_main(cli: Cli) -> Result<(), Failure> {
    let mut config = match &cli.config {
        Some(p) => load_config(p).map_err(PipelineError::from)?,
        None => SimulationConfig::default(),
    };
    if let Some(d) = cli.outdir {
        config.outdir = d;
    }
    match cli.command {
        Command::Run => {
            let out = run_pipeline(&config)?;
            let manifest = write_outputs(&out.outcomes, &config, &config.outdir)?;
            if !cli.quiet {
                summary(&out.outcomes);
                eprintln!("manifest: {}", manifest.display());
            }
            if let Some(e) = out.aborted {
                return Err(Failure::Numerical(e));
            }
        }
        Command::Detect { input, order } => {
            let nodal = read_nodal(&input)?;
            if nodal.len() < 2 {
                return Err(Failure::Config("input holds fewer than two values".into()));
            }
            let n = nodal.len() - 1;
            if let Some(o) = order.filter(|&o| o != n) {
                return Err(Failure::Config(format!("--order {o} but the file holds {} values", nodal.len())));
            }
            let ops = build_operators(&build_grid(n).map_err(PipelineError::from)?);
            let field = SpectralField::from_nodal(&ops, nodal).map_err(PipelineError::from)?;
            let factors = build_concentration_factors(&config.detection);
            let det = edge_detect::detect(field.modal(), field.max_abs(), field.grid(), &factors, &config.detection)
                .map_err(PipelineError::from)?;
            println!("{}", serde_json::to_string_pretty(&det.report).expect("report serialises"));
        }
        Command::DemoTophat => {
            let grid = build_grid(config.solver.order).map_err(PipelineError::from)?;
            let ops = build_operators(&grid);
            let field = SpectralField::from_fn(&ops, |x| if x > -0.7 && x < -0.2 { 1.0 } else { 0.0 });
            let factors = build_concentration_factors(&config.detection);
            let outcome = process_field(0.0, &field, &factors, &config);
            let outcomes = vec![outcome];
            let manifest = write_outputs(&outcomes, &config, &config.outdir)?;
            if !cli.quiet {
                summary(&outcomes);
                eprintln!("manifest: {}", manifest.display());
            }
            if let Err(f) = &outcomes[0] {
                return Err(Failure::Numerical(f.message.clone()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match real_main(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Config(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Numerical(m)) => {
            eprintln!("numerical failure: {m}");
            ExitCode::from(2)
        }
    }
}
