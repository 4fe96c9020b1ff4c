//! Wind-driven fire and smoke spread on the grid.
//!
//! Spread is synchronous: the set of newly affected cells is computed from
//! the pre-step state before anything is written.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{neighbors8, within_cone, CellCoord, CellState, Grid, Vec2, WindModel};

/// Couples the fire to the UAV clock: the fire spreads once every
/// `spread_rate` UAV timestamps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FireClock {
    pub t: u64,
    pub spread_rate: u64,
}

impl FireClock {
    pub fn new(spread_rate: u64) -> Result<Self> {
        if spread_rate == 0 {
            return Err(Error::Config("spread_rate must be >= 1".into()));
        }
        Ok(Self { t: 0, spread_rate })
    }

    /// True when the fire spreads at timestamp `t`.
    pub fn spreads_at(&self, t: u64) -> bool {
        t > 0 && t.is_multiple_of(self.spread_rate)
    }
}

pub fn ignite(grid: &Grid, cell: CellCoord) -> Result<Grid> {
    if !grid.is_free(cell) {
        return Err(Error::InvalidIgnition(cell));
    }
    let mut next = grid.clone();
    next.set_state(cell, CellState::Burning);
    Ok(next)
}

pub fn step_fire_spread(grid: &Grid, wind: &WindModel) -> Grid {
    let mut next = grid.clone();
    spread_fire_in_place(&mut next, wind);
    next
}

pub fn step_smoke_spread(grid: &Grid, wind: &WindModel) -> Grid {
    let mut next = grid.clone();
    spread_smoke_in_place(&mut next, wind);
    next
}

pub(crate) fn spread_fire_in_place(grid: &mut Grid, wind: &WindModel) {
    let burning = grid.cells_in(CellState::Burning);
    let mut ignited = Vec::new();
    for &c in &burning {
        for n in neighbors8(c, grid) {
            if grid.is_obstacle(n) {
                continue;
            }
            if matches!(grid.state(n), CellState::Clear | CellState::Smoke)
                && within_cone(c.vector_to(n), wind.direction, wind.delta)
            {
                ignited.push(n);
            }
        }
    }
    for c in burning {
        grid.set_state(c, CellState::Burned);
    }
    for c in ignited {
        grid.set_state(c, CellState::Burning);
    }
}

/// Offsets `(dx, dy)` that smoke reaches from a burning cell: nonzero,
/// within `mu`, and inside the wind cone.
pub fn smoke_offsets(wind: &WindModel) -> Vec<(i32, i32)> {
    let r = wind.mu.floor() as i32;
    let mut out = Vec::new();
    for dy in -r..=r {
        for dx in -r..=r {
            if dx == 0 && dy == 0 {
                continue;
            }
            let v = Vec2::new(dx as f64, dy as f64);
            if v.norm() <= wind.mu && within_cone(v, wind.direction, wind.delta) {
                out.push((dx, dy));
            }
        }
    }
    out
}

pub(crate) fn spread_smoke_in_place(grid: &mut Grid, wind: &WindModel) {
    let offsets = smoke_offsets(wind);
    if offsets.is_empty() {
        return;
    }
    let burning = grid.cells_in(CellState::Burning);
    let mut smoked = Vec::new();
    for c in burning {
        for &(dx, dy) in &offsets {
            let n = c.offset(dx, dy);
            if grid.is_free(n) && grid.state(n) == CellState::Clear {
                smoked.push(n);
            }
        }
    }
    for c in smoked {
        grid.set_state(c, CellState::Smoke);
    }
}

/// Advances the clock by one timestamp, spreading fire then smoke when the
/// clock lands on a spread step. Returns whether a spread happened.
pub(crate) fn advance_in_place(grid: &mut Grid, wind: &WindModel, clock: &mut FireClock) -> bool {
    clock.t += 1;
    if clock.spreads_at(clock.t) {
        spread_fire_in_place(grid, wind);
        spread_smoke_in_place(grid, wind);
        true
    } else {
        false
    }
}

pub fn advance(grid: &Grid, wind: &WindModel, clock: FireClock) -> (Grid, FireClock) {
    let mut next = grid.clone();
    let mut clock = clock;
    advance_in_place(&mut next, wind, &mut clock);
    (next, clock)
}
