use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::grid::{neighbors8, CellCoord, Grid};

/// Shortest 8-connected obstacle-free path from `start` to `goal`, both
/// included, with unit cost per move. `Ok(None)` when the goal cannot be
/// reached.
///
/// Open-list ties on `f` prefer the smaller heuristic, then earlier
/// insertion, so results are fully deterministic.
pub fn astar(grid: &Grid, start: CellCoord, goal: CellCoord) -> Result<Option<Vec<CellCoord>>> {
    for c in [start, goal] {
        if !grid.is_free(c) {
            return Err(Error::InvalidEndpoint(c));
        }
    }
    if start == goal {
        return Ok(Some(vec![start]));
    }

    let n = grid.len();
    let mut g = vec![u32::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut closed = vec![false; n];
    let mut open = BinaryHeap::new();
    let mut seq: u64 = 0;

    let si = grid.index(start);
    let gi = grid.index(goal);
    g[si] = 0;
    let h0 = start.chebyshev(goal) as u32;
    open.push(Reverse((h0, h0, seq, si)));

    while let Some(Reverse((_, _, _, i))) = open.pop() {
        if closed[i] {
            continue;
        }
        if i == gi {
            return Ok(Some(reconstruct(grid, &parent, si, gi)));
        }
        closed[i] = true;
        let c = grid.coord(i);
        let gc = g[i] + 1;
        for nb in neighbors8(c, grid) {
            if grid.is_obstacle(nb) {
                continue;
            }
            let j = grid.index(nb);
            if closed[j] || gc >= g[j] {
                continue;
            }
            g[j] = gc;
            parent[j] = i;
            let h = nb.chebyshev(goal) as u32;
            seq += 1;
            open.push(Reverse((gc + h, h, seq, j)));
        }
    }
    Ok(None)
}

fn reconstruct(grid: &Grid, parent: &[usize], start: usize, goal: usize) -> Vec<CellCoord> {
    let mut path = vec![grid.coord(goal)];
    let mut i = goal;
    while i != start {
        i = parent[i];
        path.push(grid.coord(i));
    }
    path.reverse();
    path
}

/// Number of moves along a path returned by [`astar`].
pub fn path_cost(path: &[CellCoord]) -> usize {
    path.len().saturating_sub(1)
}
