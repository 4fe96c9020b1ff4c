//! A running scenario: the grid, the wind, the fire clock and the sensor
//! network, plus the parameters planners need to build a search area.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fire::{advance_in_place, FireClock};
use crate::grid::{CellCoord, CellState, Grid, WindModel};
use crate::search_area::{generate_search_area, Observation, SearchArea};
use crate::sensors::SensorNetwork;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AreaParams {
    pub mu_a: f64,
    pub alpha: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct World {
    pub grid: Grid,
    pub wind: WindModel,
    pub clock: FireClock,
    pub sensors: SensorNetwork,
    pub area_params: AreaParams,
    /// Ignition cell, `None` for a false-positive scenario.
    pub ignition: Option<CellCoord>,
}

impl World {
    /// Sensors alerting when the UAV is dispatched. Fixed for the run.
    pub fn alerting_sensors(&self) -> Vec<CellCoord> {
        self.sensors.alerting_positions()
    }

    pub fn has_fire(&self) -> bool {
        self.ignition.is_some()
    }

    pub fn search_area(&self) -> Result<SearchArea> {
        let anchors = self.alerting_sensors();
        if anchors.is_empty() {
            return Err(Error::NoAlerts);
        }
        generate_search_area(
            &anchors,
            &self.wind,
            self.area_params.mu_a,
            self.area_params.alpha,
            self.area_params.beta,
            &self.grid,
        )
    }

    /// One UAV timestamp of fire dynamics. Returns whether the fire spread.
    pub fn advance(&mut self) -> bool {
        advance_in_place(&mut self.grid, &self.wind, &mut self.clock)
    }

    pub fn observe(&self, c: CellCoord) -> Observation {
        Observation {
            position: c,
            state: self.grid.state(c),
        }
    }

    /// Stable digest of the grid and sensor layout, used to check that
    /// every planner starts from the same world.
    pub fn fingerprint(&self) -> u64 {
        let mut h = Sha256::new();
        h.update((self.grid.width() as u64).to_le_bytes());
        h.update((self.grid.height() as u64).to_le_bytes());
        for (s, o) in self.grid.states().iter().zip(self.grid.obstacles()) {
            let code = match s {
                CellState::Clear => 0u8,
                CellState::Burning => 1,
                CellState::Burned => 2,
                CellState::Smoke => 3,
            };
            h.update([code | (u8::from(*o) << 4)]);
        }
        for s in &self.sensors.sensors {
            h.update(s.position.x.to_le_bytes());
            h.update(s.position.y.to_le_bytes());
            h.update([u8::from(s.alerting)]);
        }
        h.update(self.wind.direction.dx.to_le_bytes());
        h.update(self.wind.direction.dy.to_le_bytes());
        h.update(self.clock.t.to_le_bytes());
        let digest = h.finalize();
        u64::from_le_bytes(digest[..8].try_into().expect("sha256 has 32 bytes"))
    }
}
