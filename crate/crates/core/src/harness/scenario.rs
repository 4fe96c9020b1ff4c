//! Builds worlds from a [`ScenarioConfig`].

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fire::{advance_in_place, ignite, FireClock};
use crate::grid::{CellCoord, CellState, Grid, Vec2, WindModel};
use crate::harness::config::{FireSpec, ObstacleSpec, ScenarioConfig, WindSpec};
use crate::sensors::{deploy_sensors, evaluate_alerts, inject_false_positive, SensorNetwork};
use crate::world::{AreaParams, World};

/// Spread steps a fresh ignition may take to reach a sensor.
pub const WARMUP_SPREAD_STEPS: usize = 200;
/// Ignitions tried before giving up on a true-fire scenario.
pub const MAX_IGNITION_RESAMPLES: usize = 50;

/// Seeded random stream used throughout scenario generation.
pub type ScenarioRng = ChaCha8Rng;

pub fn generate_scenario(cfg: &ScenarioConfig) -> Result<World> {
    cfg.validate()?;
    let mut rng = ScenarioRng::seed_from_u64(cfg.seed);

    let direction = match cfg.wind {
        WindSpec::Random => {
            let heading: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            Vec2::new(heading.cos(), heading.sin())
        }
        WindSpec::Fixed(v) => v,
    };
    let wind = WindModel::new(direction, cfg.delta, cfg.mu)?;

    let mut grid = Grid::new(cfg.grid_w, cfg.grid_h);
    if let ObstacleSpec::RandomRect { max_side } = cfg.obstacle {
        place_rect(&mut grid, max_side, &mut rng);
    }

    let sensors = deploy_sensors(&grid, cfg.sensor_count, cfg.d, &mut rng)?;
    let area_params = AreaParams {
        mu_a: cfg.mu_a,
        alpha: cfg.alpha,
        beta: cfg.beta,
    };

    match cfg.fire {
        FireSpec::FalsePositive => {
            let sensors = inject_false_positive(&sensors, &mut rng)?;
            Ok(World {
                grid,
                wind,
                clock: FireClock::new(cfg.spread_rate)?,
                sensors,
                area_params,
                ignition: None,
            })
        }
        FireSpec::TrueFire => {
            for _ in 0..MAX_IGNITION_RESAMPLES {
                let cell = random_free_cell(&grid, &mut rng);
                if let Some((burning, clock, net)) = warm_up(&grid, &sensors, &wind, cfg.spread_rate, cell)? {
                    return Ok(World {
                        grid: burning,
                        wind,
                        clock,
                        sensors: net,
                        area_params,
                        ignition: Some(cell),
                    });
                }
            }
            Err(Error::Scenario(format!(
                "no ignition reached a sensor within {WARMUP_SPREAD_STEPS} spread steps \
                 after {MAX_IGNITION_RESAMPLES} attempts"
            )))
        }
    }
}

/// Ignites `cell` and lets the fire spread until a sensor alerts. `None`
/// when the fire burns out or the spread budget runs out first.
fn warm_up(
    grid: &Grid,
    sensors: &SensorNetwork,
    wind: &WindModel,
    spread_rate: u64,
    cell: CellCoord,
) -> Result<Option<(Grid, FireClock, SensorNetwork)>> {
    let mut burning = ignite(grid, cell)?;
    let mut clock = FireClock::new(spread_rate)?;
    let mut net = evaluate_alerts(sensors, &burning);
    let mut steps = 0;
    while net.alert_count() == 0 {
        if steps == WARMUP_SPREAD_STEPS || burning.count(CellState::Burning) == 0 {
            return Ok(None);
        }
        while !advance_in_place(&mut burning, wind, &mut clock) {}
        steps += 1;
        net = evaluate_alerts(&net, &burning);
    }
    Ok(Some((burning, clock, net)))
}

/// Interior rectangle: it never touches the border, so every perimeter
/// start stays free.
fn place_rect<R: Rng>(grid: &mut Grid, max_side: usize, rng: &mut R) {
    let max_w = max_side.min(grid.width() - 2);
    let max_h = max_side.min(grid.height() - 2);
    let w = rng.gen_range(1..=max_w);
    let h = rng.gen_range(1..=max_h);
    let x0 = rng.gen_range(1..=grid.width() - 1 - w);
    let y0 = rng.gen_range(1..=grid.height() - 1 - h);
    for y in y0..y0 + h {
        for x in x0..x0 + w {
            grid.set_obstacle(CellCoord::new(x as i32, y as i32));
        }
    }
}

fn random_free_cell<R: Rng>(grid: &Grid, rng: &mut R) -> CellCoord {
    loop {
        let c = CellCoord::new(
            rng.gen_range(0..grid.width()) as i32,
            rng.gen_range(0..grid.height()) as i32,
        );
        if !grid.is_obstacle(c) {
            return c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_scenario_is_reproducible() {
        let cfg = ScenarioConfig::default();
        let a = generate_scenario(&cfg).unwrap();
        let b = generate_scenario(&cfg).unwrap();
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_eq!(a, b);
        let other = generate_scenario(&ScenarioConfig { seed: 2, ..cfg }).unwrap();
        assert_ne!(a.fingerprint(), other.fingerprint());
    }

    #[test]
    fn true_fire_has_evidence_at_an_alerting_sensor() {
        for seed in 0..5 {
            let w = generate_scenario(&ScenarioConfig {
                seed,
                ..Default::default()
            })
            .unwrap();
            let alerting = w.alerting_sensors();
            assert!(!alerting.is_empty());
            assert!(alerting.iter().any(|c| w.grid.state(*c) != CellState::Clear));
            assert!(w.has_fire());
        }
    }

    #[test]
    fn false_positive_has_no_fire_and_one_alert() {
        let cfg = ScenarioConfig {
            fire: FireSpec::FalsePositive,
            ..Default::default()
        };
        let w = generate_scenario(&cfg).unwrap();
        assert_eq!(w.sensors.alert_count(), 1);
        assert_eq!(w.grid.count(CellState::Burning), 0);
        assert_eq!(w.grid.count(CellState::Smoke), 0);
        assert_eq!(w.grid.count(CellState::Burned), 0);
        assert!(!w.has_fire());
    }

    #[test]
    fn obstacle_stays_off_the_border() {
        for seed in 0..20 {
            let cfg = ScenarioConfig {
                seed,
                obstacle: ObstacleSpec::RandomRect { max_side: 200 },
                ..Default::default()
            };
            let w = generate_scenario(&cfg).unwrap();
            let g = &w.grid;
            for c in g.cells() {
                let border = c.x == 0 || c.y == 0 || c.x as usize == g.width() - 1 || c.y as usize == g.height() - 1;
                if border {
                    assert!(!g.is_obstacle(c));
                }
            }
            for s in w.sensors.positions() {
                assert!(g.is_free(s));
            }
        }
    }

    #[test]
    fn warm_up_stops_when_fire_cannot_reach_a_sensor() {
        let grid = Grid::new(20, 5);
        let wind = WindModel::new(Vec2::new(1.0, 0.0), 30.0, 2.0).unwrap();
        let sensors = crate::sensors::SensorNetwork {
            sensors: vec![crate::sensors::Sensor {
                id: 0,
                position: CellCoord::new(2, 2),
                alerting: false,
            }],
            min_separation: 5.0,
        };
        // Downwind of the sensor: burns out at the east edge.
        assert!(warm_up(&grid, &sensors, &wind, 20, CellCoord::new(10, 2))
            .unwrap()
            .is_none());
        // Upwind: smoke reaches the sensor after a few spread steps.
        let (g, clock, net) = warm_up(&grid, &sensors, &wind, 20, CellCoord::new(0, 2))
            .unwrap()
            .unwrap();
        assert_eq!(net.alert_count(), 1);
        assert_eq!(clock.t % 20, 0);
        assert_ne!(g.state(CellCoord::new(2, 2)), CellState::Clear);
    }
}
