//! Scenario generation, perimeter sweeps and result tables.

pub mod batch;
pub mod config;
pub mod metrics;
pub mod scenario;
pub mod snapshot;

pub use batch::{fire_world, perimeter_starts, run_batch, run_fires, BatchOptions, BatchResults, StartSelection};
pub use config::{FireSpec, ObstacleSpec, ScenarioConfig, WindSpec};
pub use metrics::{aggregate, PlannerSummary, RunMetrics, Summary};
pub use scenario::generate_scenario;
pub use snapshot::WorldSnapshot;
