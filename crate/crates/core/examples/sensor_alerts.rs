//! Sensor deployment and alerting.
//!
//! Scatters sensors with a minimum separation, starts a fire and reports
//! which sensors alert as fire and smoke reach them. Alerts latch.
//!
//! ```text
//! cargo run --example sensor_alerts
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wildfire_ipp::fire::{advance, ignite, FireClock};
use wildfire_ipp::sensors::{deploy_sensors, evaluate_alerts};
use wildfire_ipp::{CellCoord, Grid, Vec2, WindModel};

fn main() -> wildfire_ipp::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let grid = Grid::new(40, 40);
    let mut network = deploy_sensors(&grid, 25, 5.0, &mut rng)?;
    println!(
        "deployed {} sensors, pairwise distance > {}",
        network.sensors.len(),
        network.min_separation
    );

    let wind = WindModel::new(Vec2::new(1.0, 0.2), 60.0, 4.0)?;
    let mut grid = ignite(&grid, CellCoord::new(8, 20))?;
    let mut clock = FireClock::new(1)?;
    let mut seen = vec![false; network.sensors.len()];
    for _ in 0..30 {
        (grid, clock) = advance(&grid, &wind, clock);
        network = evaluate_alerts(&network, &grid);
        let fresh: Vec<String> = network
            .sensors
            .iter()
            .filter(|s| s.alerting && !seen[s.id])
            .map(|s| format!("#{} at {} ({:?})", s.id, s.position, grid.state(s.position)))
            .collect();
        if !fresh.is_empty() {
            println!(
                "t = {:>2}: {:>2} alerting, new: {}",
                clock.t,
                network.alert_count(),
                fresh.join(", ")
            );
        }
        for s in &network.sensors {
            seen[s.id] |= s.alerting;
        }
    }

    // Mark sensors on the final map: `A` alerting, `S` silent.
    let mut map: Vec<Vec<char>> = grid.to_string().lines().map(|l| l.chars().collect()).collect();
    for s in &network.sensors {
        let row = grid.height() - 1 - s.position.y as usize;
        map[row][s.position.x as usize] = if s.alerting { 'A' } else { 'S' };
    }
    for row in map {
        println!("{}", row.into_iter().collect::<String>());
    }
    Ok(())
}
