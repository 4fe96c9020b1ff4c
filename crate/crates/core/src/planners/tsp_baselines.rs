//! Coverage baselines: fly to the search area, then follow a TSP tour of
//! every search-area cell. The tour is computed once on arrival and the
//! search area is never updated.

use crate::error::Result;
use crate::grid::CellCoord;
use crate::planners::astar::astar;
use crate::planners::executor::Mission;
use crate::planners::fire_gipp::transit_path;
use crate::planners::tsp::tsp_tour;
use crate::planners::{Phase, PlannerKind, RunResult};
use crate::world::World;

/// Closest-point variant: same transit as the greedy planner.
pub fn run_tsp_cp(world: &World, start: CellCoord) -> Result<RunResult> {
    run_tour(PlannerKind::TspCp, world, start)
}

/// Sensor variant: transit to the closest alerting sensor first.
pub fn run_tsp_sensor(world: &World, start: CellCoord) -> Result<RunResult> {
    run_tour(PlannerKind::TspSensor, world, start)
}

fn run_tour(kind: PlannerKind, world: &World, start: CellCoord) -> Result<RunResult> {
    let mut m = Mission::new(kind, world, start, false)?;

    let transit = m.timed(|m| {
        let candidates: Vec<CellCoord> = match kind {
            PlannerKind::TspSensor => m.alerting().iter().copied().collect(),
            _ => m.area.cells().collect(),
        };
        transit_path(m, candidates)
    })?;
    m.transit_len = transit.len() as u64 - 1;
    m.begin();
    m.follow(&transit)?;
    m.phase = Phase::Searching;
    if m.is_done() {
        return Ok(m.finish());
    }

    let tour = m.timed(|m| {
        let nodes: Vec<CellCoord> = m.area.cells().collect();
        tsp_tour(&nodes, m.pos)
    });
    for node in tour {
        if m.is_done() {
            break;
        }
        let leg = m.timed(|m| astar(&m.world().grid, m.pos, node))?;
        if let Some(leg) = leg {
            m.follow(&leg)?;
        }
    }
    Ok(m.finish())
}
