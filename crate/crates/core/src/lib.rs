//! Grid wildfire simulator and UAV planners for validating and localizing
//! sensor-reported fires.
//!
//! A [`World`] holds a wind-driven fire on a lattice and a network of ground
//! sensors. When a sensor alerts, a probabilistic search area is laid out
//! upwind of it and a UAV is dispatched. Three planners are provided: a
//! greedy informative planner that updates the search area after every
//! observation, and two TSP coverage baselines.
//!
//! ```
//! use wildfire_ipp::harness::{generate_scenario, ScenarioConfig};
//! use wildfire_ipp::planners::PlannerKind;
//! use wildfire_ipp::grid::CellCoord;
//!
//! let world = generate_scenario(&ScenarioConfig { grid_w: 40, grid_h: 40, sensor_count: 10, ..Default::default() })?;
//! let run = PlannerKind::FireGipp.run(&world, CellCoord::new(1, 0))?;
//! println!("{:?} after {} steps", run.outcome.kind, run.trace.len() - 1);
//! # Ok::<(), wildfire_ipp::Error>(())
//! ```

// Parameter checks are written `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fire;
pub mod grid;
pub mod harness;
pub mod planners;
pub mod search_area;
pub mod sensors;
pub mod trace;
pub mod world;

pub use error::{Error, Result};
pub use grid::{CellCoord, CellState, Grid, Vec2, WindModel};
pub use planners::{Outcome, OutcomeKind, PlannerKind, RunResult};
pub use search_area::{Observation, SearchArea};
pub use world::World;
