//! The path-planning building blocks: A* around obstacles and the
//! nearest-neighbour + 2-opt tour used by the coverage baselines.
//!
//! ```text
//! cargo run --example path_planning
//! ```

use wildfire_ipp::planners::tsp::{nearest_neighbor, tour_cost};
use wildfire_ipp::planners::{astar, path_cost, tsp_tour};
use wildfire_ipp::{CellCoord, Grid};

fn main() -> wildfire_ipp::Result<()> {
    let mut grid = Grid::new(20, 10);
    for y in 0..8 {
        grid.set_obstacle(CellCoord::new(7, y));
    }
    for y in 2..10 {
        grid.set_obstacle(CellCoord::new(13, y));
    }
    let (from, to) = (CellCoord::new(1, 1), CellCoord::new(18, 8));
    let path = astar(&grid, from, to)?.expect("goal reachable");
    println!("A* {from} -> {to}: {} moves", path_cost(&path));
    let mut map: Vec<Vec<char>> = grid.to_string().lines().map(|l| l.chars().collect()).collect();
    for c in &path {
        map[grid.height() - 1 - c.y as usize][c.x as usize] = 'o';
    }
    for row in &map {
        println!("{}", row.iter().collect::<String>());
    }

    let nodes: Vec<CellCoord> = [(9, 2), (2, 7), (5, 5), (12, 9), (1, 3), (8, 8), (14, 1), (4, 0)]
        .into_iter()
        .map(|(x, y)| CellCoord::new(x, y))
        .collect();
    let start = CellCoord::new(0, 0);
    let nn = nearest_neighbor(&nodes, start);
    let tour = tsp_tour(&nodes, start);
    println!("\nnearest-neighbour tour length {:.2}", tour_cost(&nn, start));
    println!("after 2-opt               {:.2}", tour_cost(&tour, start));
    let order: Vec<String> = tour.iter().map(|c| c.to_string()).collect();
    println!("order: {start} -> {}", order.join(" -> "));
    Ok(())
}
