//! Resolving a false alarm.
//!
//! A sensor alerts with no fire anywhere. Every planner must fly to the
//! alerting sensor and see it clear; the example compares how long that
//! takes from a handful of perimeter starts.
//!
//! ```text
//! cargo run --release --example false_positive
//! ```

use wildfire_ipp::harness::{generate_scenario, perimeter_starts, FireSpec, ScenarioConfig, StartSelection};
use wildfire_ipp::{OutcomeKind, PlannerKind};

fn main() -> wildfire_ipp::Result<()> {
    let cfg = ScenarioConfig {
        fire: FireSpec::FalsePositive,
        seed: 12,
        ..Default::default()
    };
    let world = generate_scenario(&cfg)?;
    println!("false alarm at {:?}", world.alerting_sensors());
    let starts = StartSelection::Sample(8).select(&perimeter_starts(&world.grid));

    println!(
        "{:<10} {:>12} {:>12} {:>12}",
        "start", "fire-gipp", "tsp-cp", "tsp-sensor"
    );
    for (_, start) in starts {
        let mut line = format!("{:<10}", start.to_string());
        for kind in PlannerKind::ALL {
            let run = kind.run(&world, start)?;
            assert_eq!(run.outcome.kind, OutcomeKind::FalsePositive);
            line += &format!(" {:>12}", run.outcome.t_false_positive.unwrap());
        }
        println!("{line}");
    }
    Ok(())
}
