use std::collections::VecDeque;

use crate::error::Result;
use crate::grid::{neighbors8, CellCoord};
use crate::planners::astar::astar;
use crate::planners::executor::Mission;
use crate::planners::{closest_point, Phase, PlannerKind, RunResult};
use crate::world::World;

/// Greedy informative planner.
///
/// Flies an A* path to the closest search-area cell, then repeatedly moves
/// to the most probable neighbouring cell, updating the search area after
/// every observation. When every neighbour has probability zero it flies
/// towards the nearest cell that is still positive.
pub fn run_fire_gipp(world: &World, start: CellCoord) -> Result<RunResult> {
    let mut m = Mission::new(PlannerKind::FireGipp, world, start, true)?;

    let transit = m.timed(|m| {
        let candidates: Vec<CellCoord> = m.area.cells().collect();
        transit_path(m, candidates)
    })?;
    m.transit_len = transit.len() as u64 - 1;
    m.begin();
    m.follow(&transit)?;
    m.phase = Phase::Searching;

    let mut detour: VecDeque<CellCoord> = VecDeque::new();
    while !m.is_done() {
        let next = m.timed(|m| next_move(m, &mut detour))?;
        match next {
            Some(c) => m.step(c)?,
            None => break,
        }
    }
    Ok(m.finish())
}

/// A* path from the current position to the nearest reachable cell of
/// `candidates`. Falls back to staying put when nothing is reachable.
pub(crate) fn transit_path(m: &Mission, mut candidates: Vec<CellCoord>) -> Result<Vec<CellCoord>> {
    let from = m.pos;
    candidates.sort_by(|a, b| {
        crate::grid::euclidean(*a, from)
            .total_cmp(&crate::grid::euclidean(*b, from))
            .then(a.cmp(b))
    });
    for target in candidates {
        if let Some(path) = astar(&m.world().grid, from, target)? {
            return Ok(path);
        }
    }
    Ok(vec![from])
}

fn best_neighbor(m: &Mission) -> Option<CellCoord> {
    let grid = &m.world().grid;
    let mut best: Option<(CellCoord, f64)> = None;
    for n in neighbors8(m.pos, grid) {
        let p = m.area.probability(n);
        if p <= 0.0 || grid.is_obstacle(n) {
            continue;
        }
        match best {
            Some((bc, bp)) if p < bp || (p == bp && n > bc) => {}
            _ => best = Some((n, p)),
        }
    }
    best.map(|(c, _)| c)
}

fn next_move(m: &mut Mission, detour: &mut VecDeque<CellCoord>) -> Result<Option<CellCoord>> {
    let (empty, _) = m.area.prune_and_peak();
    if empty {
        return Ok(None);
    }
    if let Some(n) = best_neighbor(m) {
        detour.clear();
        return Ok(Some(n));
    }
    // Keep following a detour only while its goal is still worth visiting.
    if let Some(goal) = detour.back().copied() {
        if m.area.probability(goal) > 0.0 {
            return Ok(detour.pop_front());
        }
        detour.clear();
    }
    loop {
        let target = match closest_point(&m.area, m.pos) {
            Ok(t) => t,
            Err(_) => return Ok(None),
        };
        match astar(&m.world().grid, m.pos, target)? {
            Some(path) if path.len() > 1 => {
                detour.extend(path.into_iter().skip(1));
                return Ok(detour.pop_front());
            }
            // Unreachable (or already here and observed): nothing to gain.
            _ => {
                m.area.zero(target);
                if m.area.prune_and_peak().0 {
                    return Ok(None);
                }
            }
        }
    }
}
