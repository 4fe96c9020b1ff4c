//! World snapshot written next to a trace so offline tools can draw the
//! search area, sensors and obstacles without re-running the simulation.

use serde::{Deserialize, Serialize};

use crate::grid::{CellCoord, Vec2};
use crate::planners::RunResult;
use crate::search_area::SearchArea;
use crate::world::World;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SnapshotSensor {
    pub x: i32,
    pub y: i32,
    pub alerting: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SnapshotCell {
    pub x: i32,
    pub y: i32,
    pub p: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WorldSnapshot {
    pub width: usize,
    pub height: usize,
    pub wind: Vec2,
    pub obstacles: Vec<[i32; 2]>,
    pub sensors: Vec<SnapshotSensor>,
    pub ignition: Option<[i32; 2]>,
    /// Search-area priors at launch.
    pub initial_area: Vec<SnapshotCell>,
    /// Search-area probabilities when the run ended.
    pub final_area: Vec<SnapshotCell>,
}

fn cells(area: &SearchArea) -> Vec<SnapshotCell> {
    area.iter().map(|(c, p)| SnapshotCell { x: c.x, y: c.y, p }).collect()
}

impl WorldSnapshot {
    pub fn new(world: &World, initial_area: &SearchArea, run: &RunResult) -> Self {
        let grid = &world.grid;
        let xy = |c: CellCoord| [c.x, c.y];
        Self {
            width: grid.width(),
            height: grid.height(),
            wind: world.wind.direction,
            obstacles: grid.cells().filter(|c| grid.is_obstacle(*c)).map(xy).collect(),
            sensors: world
                .sensors
                .sensors
                .iter()
                .map(|s| SnapshotSensor {
                    x: s.position.x,
                    y: s.position.y,
                    alerting: s.alerting,
                })
                .collect(),
            ignition: world.ignition.map(xy),
            initial_area: cells(initial_area),
            final_area: cells(&run.final_area),
        }
    }
}
