//! One scenario, all three planners, the same start cell.
//!
//! Prints each planner's outcome and draws the UAV path over the map
//! (`1`, `2`, `3` for the planners, `S` alerting sensors).
//!
//! ```text
//! cargo run --release --example single_run [seed]
//! ```

use wildfire_ipp::harness::{generate_scenario, ScenarioConfig};
use wildfire_ipp::{CellCoord, PlannerKind};

fn main() -> wildfire_ipp::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let cfg = ScenarioConfig {
        grid_w: 60,
        grid_h: 40,
        sensor_count: 20,
        seed,
        ..Default::default()
    };
    let world = generate_scenario(&cfg)?;
    let start = CellCoord::new(0, 20);
    println!(
        "seed {seed}: wind ({:.2},{:.2}), {} alerting sensor(s), start {start}",
        world.wind.direction.dx,
        world.wind.direction.dy,
        world.alerting_sensors().len()
    );

    let mut map: Vec<Vec<char>> = world.grid.to_string().lines().map(|l| l.chars().collect()).collect();
    let h = world.grid.height() as i32;
    for (i, kind) in PlannerKind::ALL.into_iter().enumerate() {
        let run = kind.run(&world, start)?;
        let o = run.outcome;
        println!(
            "{:<11} {:<15} validate {:>4} localize {:>4} transit {:>3} compute {:.3} ms",
            kind.as_str(),
            o.kind.as_str(),
            o.t_resolved().map_or("-".into(), |t| t.to_string()),
            o.t_localize.map_or("-".into(), |t| t.to_string()),
            run.transit_len,
            run.compute.as_secs_f64() * 1e3
        );
        for c in run.path() {
            map[(h - 1 - c.y) as usize][c.x as usize] = char::from_digit(i as u32 + 1, 10).unwrap();
        }
    }
    for s in world.alerting_sensors() {
        map[(h - 1 - s.y) as usize][s.x as usize] = 'S';
    }
    for row in map {
        println!("{}", row.into_iter().collect::<String>());
    }
    Ok(())
}
