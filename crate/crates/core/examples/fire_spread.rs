//! Wind-driven fire and smoke on an open grid.
//!
//! Ignites one cell and prints the map after each spread step. `*` is
//! burning, `x` burned, `~` smoke, `#` obstacle; north is up.
//!
//! ```text
//! cargo run --example fire_spread
//! ```

use wildfire_ipp::fire::{advance, ignite, FireClock};
use wildfire_ipp::{CellCoord, CellState, Grid, Vec2, WindModel};

fn main() -> wildfire_ipp::Result<()> {
    // North-east wind, 60 degree spread cone, smoke reaching 3 cells.
    let wind = WindModel::new(Vec2::new(1.0, 1.0), 60.0, 3.0)?;
    let mut grid = Grid::new(32, 16);
    for y in 6..10 {
        grid.set_obstacle(CellCoord::new(14, y));
    }
    let mut grid = ignite(&grid, CellCoord::new(4, 3))?;
    // One spread step every 5 timestamps.
    let mut clock = FireClock::new(5)?;

    println!("t = 0\n{grid}");
    for _ in 0..30 {
        let (next, next_clock) = advance(&grid, &wind, clock);
        let spread = next != grid;
        grid = next;
        clock = next_clock;
        if spread && clock.t % 10 == 0 {
            println!(
                "t = {}  burning {}  burned {}  smoke {}\n{grid}",
                clock.t,
                grid.count(CellState::Burning),
                grid.count(CellState::Burned),
                grid.count(CellState::Smoke)
            );
        }
    }
    Ok(())
}
