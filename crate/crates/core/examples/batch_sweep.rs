//! Perimeter-start sweep and summary tables.
//!
//! Runs a reduced version of the full benchmark (a few fires, evenly
//! sampled perimeter starts), writes the CSV results table to the system
//! temp directory and prints per-planner means for true fires, false
//! alarms and both pooled.
//!
//! ```text
//! cargo run --release --example batch_sweep [fires] [starts]
//! ```

use std::fs::File;

use wildfire_ipp::harness::metrics::{write_csv, SummaryTable};
use wildfire_ipp::harness::{run_batch, BatchOptions, FireSpec, ScenarioConfig, StartSelection, Summary};
use wildfire_ipp::PlannerKind;

fn main() -> wildfire_ipp::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().ok());
    let fires = args.next().flatten().unwrap_or(4);
    let starts = args.next().flatten().unwrap_or(24);
    let opts = BatchOptions {
        fires,
        planners: PlannerKind::ALL.to_vec(),
        starts: StartSelection::Sample(starts),
        timing: true,
        keep_traces: false,
    };

    let tp = run_batch(&ScenarioConfig::default(), &opts)?;
    let fp = run_batch(
        &ScenarioConfig {
            fire: FireSpec::FalsePositive,
            ..Default::default()
        },
        &opts,
    )?;
    let (tp, fp) = (tp.metrics(), fp.metrics());

    let path = std::env::temp_dir().join("wildfire_batch_sweep.csv");
    write_csv(&tp, File::create(&path)?)?;
    println!("{} true-fire rows written to {}\n", tp.len(), path.display());

    let summary = Summary::new(&tp, &fp);
    println!("true fires\n{}", SummaryTable(&summary.true_positive));
    println!("false alarms\n{}", SummaryTable(&summary.false_positive));
    println!("pooled\n{}", SummaryTable(&summary.overall));
    Ok(())
}
