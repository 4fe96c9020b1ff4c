//! Ground sensor placement and alerting.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{euclidean, CellCoord, CellState, Grid};

/// Consecutive rejected draws allowed while placing a single sensor.
pub const MAX_PLACEMENT_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sensor {
    pub id: usize,
    pub position: CellCoord,
    pub alerting: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SensorNetwork {
    pub sensors: Vec<Sensor>,
    /// Every pair of sensors is strictly farther apart than this.
    pub min_separation: f64,
}

impl SensorNetwork {
    pub fn alerting_positions(&self) -> Vec<CellCoord> {
        self.sensors.iter().filter(|s| s.alerting).map(|s| s.position).collect()
    }

    pub fn alert_count(&self) -> usize {
        self.sensors.iter().filter(|s| s.alerting).count()
    }

    pub fn positions(&self) -> impl Iterator<Item = CellCoord> + '_ {
        self.sensors.iter().map(|s| s.position)
    }
}

/// Places `count` sensors by rejection sampling: draw a uniform cell and
/// keep it only if it is free and farther than `d` from every placed sensor.
pub fn deploy_sensors<R: Rng + ?Sized>(grid: &Grid, count: usize, d: f64, rng: &mut R) -> Result<SensorNetwork> {
    if count == 0 {
        return Err(Error::Config("sensor count must be >= 1".into()));
    }
    if grid.is_empty() {
        return Err(Error::InfeasibleDeployment {
            placed: 0,
            requested: count,
            attempts: 0,
        });
    }
    let mut sensors: Vec<Sensor> = Vec::with_capacity(count);
    while sensors.len() < count {
        let mut attempts = 0;
        let position = loop {
            if attempts == MAX_PLACEMENT_ATTEMPTS {
                return Err(Error::InfeasibleDeployment {
                    placed: sensors.len(),
                    requested: count,
                    attempts,
                });
            }
            attempts += 1;
            let c = CellCoord::new(
                rng.gen_range(0..grid.width()) as i32,
                rng.gen_range(0..grid.height()) as i32,
            );
            if grid.is_obstacle(c) {
                continue;
            }
            if sensors.iter().all(|s| euclidean(s.position, c) > d) {
                break c;
            }
        };
        sensors.push(Sensor {
            id: sensors.len(),
            position,
            alerting: false,
        });
    }
    Ok(SensorNetwork {
        sensors,
        min_separation: d,
    })
}

/// Latches an alert on every sensor whose cell shows smoke or fire.
pub fn evaluate_alerts(net: &SensorNetwork, grid: &Grid) -> SensorNetwork {
    let mut next = net.clone();
    for s in &mut next.sensors {
        if grid.state(s.position) != CellState::Clear {
            s.alerting = true;
        }
    }
    next
}

pub fn inject_false_positive<R: Rng + ?Sized>(net: &SensorNetwork, rng: &mut R) -> Result<SensorNetwork> {
    if net.sensors.is_empty() {
        return Err(Error::EmptyNetwork);
    }
    let mut next = net.clone();
    let i = rng.gen_range(0..next.sensors.len());
    next.sensors[i].alerting = true;
    Ok(next)
}
