//! Command-line front end: single simulations and perimeter-start batches.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use wildfire_ipp::harness::metrics::{write_csv, SummaryTable};
use wildfire_ipp::harness::{
    aggregate, generate_scenario, run_batch, BatchOptions, ScenarioConfig, StartSelection, WorldSnapshot,
};
use wildfire_ipp::{CellCoord, Error, OutcomeKind, PlannerKind, Result};

#[derive(Parser)]
#[command(
    name = "wildfire-ipp",
    version,
    about = "Wildfire validation and localization planners on a grid simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one planner from one start cell and print the outcome as JSON.
    Simulate(SimulateArgs),
    /// Sweep fires x perimeter starts x planners and write a CSV results table.
    Batch(BatchArgs),
}

#[derive(Args)]
struct SimulateArgs {
    /// Scenario config (JSON).
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    planner: PlannerKind,
    /// Start cell as `x,y`.
    #[arg(long, value_parser = parse_cell)]
    start: CellCoord,
    /// Write the per-timestamp trace as JSON lines.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Write a JSON snapshot of the world and search area for plotting.
    #[arg(long)]
    world: Option<PathBuf>,
    /// Override the config seed.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct BatchArgs {
    /// Scenario config (JSON); its seed is the batch base seed.
    #[arg(long)]
    config: PathBuf,
    /// Number of simulated fires.
    #[arg(long)]
    fires: usize,
    /// `all` perimeter cells or a count sampled evenly along the perimeter.
    #[arg(long)]
    starts: StartSelection,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
    /// Write one JSON-lines trace per run into this directory.
    #[arg(long)]
    traces_dir: Option<PathBuf>,
    /// Override the config seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated planners to run (default: all three).
    #[arg(long, value_delimiter = ',')]
    planners: Option<Vec<PlannerKind>>,
    /// Fill the compute_ms column with wall-clock planning time. Off by
    /// default so that repeated batches produce identical files.
    #[arg(long)]
    timing: bool,
}

fn parse_cell(s: &str) -> std::result::Result<CellCoord, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected `x,y`, got `{s}`"))?;
    let x = x.trim().parse::<i32>().map_err(|e| format!("bad x in `{s}`: {e}"))?;
    let y = y.trim().parse::<i32>().map_err(|e| format!("bad y in `{s}`: {e}"))?;
    Ok(CellCoord::new(x, y))
}

fn load_config(path: &Path, seed: Option<u64>) -> Result<ScenarioConfig> {
    let mut cfg = ScenarioConfig::load(path)?;
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    Ok(cfg)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct SimulateReport {
    planner: PlannerKind,
    start: [i32; 2],
    outcome: OutcomeKind,
    t_validate: Option<u64>,
    t_localize: Option<u64>,
    t_false_positive: Option<u64>,
    validated_in_transit: bool,
    localized_in_transit: bool,
    transit_len: u64,
    steps: usize,
    compute_ms: f64,
    world_fingerprint: String,
}

fn simulate(args: SimulateArgs) -> Result<()> {
    let cfg = load_config(&args.config, args.seed)?;
    let world = generate_scenario(&cfg)?;
    let run = args.planner.run(&world, args.start)?;
    if let Some(path) = &args.trace {
        let mut out = create(path)?;
        run.trace.write_jsonl(&mut out)?;
        out.flush()?;
    }
    if let Some(path) = &args.world {
        let snapshot = WorldSnapshot::new(&world, &world.search_area()?, &run);
        let mut out = create(path)?;
        serde_json::to_writer_pretty(&mut out, &snapshot)?;
        out.flush()?;
    }
    let o = run.outcome;
    let report = SimulateReport {
        planner: run.planner,
        start: [args.start.x, args.start.y],
        outcome: o.kind,
        t_validate: o.t_validate,
        t_localize: o.t_localize,
        t_false_positive: o.t_false_positive,
        validated_in_transit: o.validated_in_transit,
        localized_in_transit: o.localized_in_transit,
        transit_len: run.transit_len,
        steps: run.trace.len().saturating_sub(1),
        compute_ms: run.compute.as_secs_f64() * 1e3,
        world_fingerprint: format!("{:016x}", world.fingerprint()),
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

fn batch(args: BatchArgs) -> Result<()> {
    let cfg = load_config(&args.config, args.seed)?;
    let opts = BatchOptions {
        fires: args.fires,
        planners: args.planners.unwrap_or_else(|| PlannerKind::ALL.to_vec()),
        starts: args.starts,
        timing: args.timing,
        keep_traces: args.traces_dir.is_some(),
    };
    let results = run_batch(&cfg, &opts)?;

    for f in &results.failures {
        let start = f
            .start
            .map(|c| format!("({},{})", c.x, c.y))
            .unwrap_or_else(|| "-".into());
        let planner = f.planner.map(|p| p.as_str()).unwrap_or("-");
        eprintln!("failed: fire {} start {start} planner {planner}: {}", f.fire, f.error);
    }

    let rows = results.metrics();
    let mut out = create(&args.out)?;
    write_csv(&rows, &mut out)?;
    out.flush()?;

    if let Some(dir) = &args.traces_dir {
        fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
        for row in &results.rows {
            if let Some(trace) = &row.trace {
                let m = &row.metrics;
                let name = format!("fire{:03}_start{:03}_{}.jsonl", m.fire, row.start_index, m.planner);
                let mut out = create(&dir.join(name))?;
                trace.write_jsonl(&mut out)?;
                out.flush()?;
            }
        }
    }

    println!(
        "{} rows written to {} ({} failed)",
        rows.len(),
        args.out.display(),
        results.failures.len()
    );
    print!("{}", SummaryTable(&aggregate(&rows)));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Simulate(args) => simulate(args),
        Command::Batch(args) => batch(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
