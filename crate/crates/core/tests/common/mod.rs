//! Hand-built worlds shared by the integration tests.
#![allow(dead_code)]

use wildfire_ipp::fire::FireClock;
use wildfire_ipp::sensors::{Sensor, SensorNetwork};
use wildfire_ipp::world::AreaParams;
use wildfire_ipp::{CellCoord, CellState, Grid, Vec2, WindModel, World};

pub fn c(x: i32, y: i32) -> CellCoord {
    CellCoord::new(x, y)
}

/// East wind, delta 60, mu 7, search radius 8, a fire that never spreads
/// during the run, and the given alerting sensors and cell states.
pub fn scripted_world(w: usize, h: usize, alerting: &[CellCoord], states: &[(CellCoord, CellState)]) -> World {
    let mut grid = Grid::new(w, h);
    for &(cell, s) in states {
        grid.set_state(cell, s);
    }
    let sensors = alerting
        .iter()
        .enumerate()
        .map(|(id, &position)| Sensor {
            id,
            position,
            alerting: true,
        })
        .collect();
    World {
        grid,
        wind: WindModel::new(Vec2::new(1.0, 0.0), 60.0, 7.0).unwrap(),
        clock: FireClock::new(1_000_000).unwrap(),
        sensors: SensorNetwork {
            sensors,
            min_separation: 5.0,
        },
        area_params: AreaParams {
            mu_a: 8.0,
            alpha: 1.0,
            beta: 1.0,
        },
        ignition: states.iter().find(|(_, s)| *s == CellState::Burning).map(|(c, _)| *c),
    }
}

/// Plain Dijkstra over the 8-connected free cells with unit step cost.
pub fn dijkstra_cost(grid: &Grid, start: CellCoord, goal: CellCoord) -> Option<u64> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let mut dist = vec![u64::MAX; grid.len()];
    let mut heap = BinaryHeap::new();
    dist[grid.index(start)] = 0;
    heap.push(Reverse((0u64, grid.index(start))));
    while let Some(Reverse((d, i))) = heap.pop() {
        if d > dist[i] {
            continue;
        }
        let cell = grid.coord(i);
        if cell == goal {
            return Some(d);
        }
        for dy in -1..=1 {
            for dx in -1..=1 {
                let n = cell.offset(dx, dy);
                if (dx, dy) == (0, 0) || !grid.is_free(n) {
                    continue;
                }
                let j = grid.index(n);
                if d + 1 < dist[j] {
                    dist[j] = d + 1;
                    heap.push(Reverse((d + 1, j)));
                }
            }
        }
    }
    None
}
