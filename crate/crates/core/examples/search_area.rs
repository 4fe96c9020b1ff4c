//! Probabilistic search area and observation updates.
//!
//! Lays out the prior upwind of an alerting sensor, then applies a few
//! observations and shows which cells they rule out. Digits are the prior
//! scaled to 0..9, `S` is the sensor, `o` an observed cell.
//!
//! ```text
//! cargo run --example search_area
//! ```

use wildfire_ipp::search_area::{generate_search_area, SearchArea};
use wildfire_ipp::{CellCoord, CellState, Grid, Observation, Vec2, WindModel};

fn render(grid: &Grid, area: &SearchArea, marks: &[(CellCoord, char)]) -> String {
    let mut out = String::new();
    for y in (0..grid.height() as i32).rev() {
        for x in 0..grid.width() as i32 {
            let c = CellCoord::new(x, y);
            let ch = if let Some((_, m)) = marks.iter().find(|(m, _)| *m == c) {
                *m
            } else if area.contains(c) {
                let p = area.probability(c);
                if p == 0.0 {
                    '-'
                } else {
                    char::from_digit((p * 9.0).round() as u32, 10).unwrap()
                }
            } else {
                ' '
            };
            out.push(ch);
        }
        out.push('\n');
    }
    out
}

fn main() -> wildfire_ipp::Result<()> {
    let grid = Grid::new(24, 17);
    let sensor = CellCoord::new(18, 8);
    // Wind blows east, so the fire that tripped the sensor lies to the west.
    let wind = WindModel::new(Vec2::new(1.0, 0.0), 60.0, 7.0)?;
    let mut area = generate_search_area(&[sensor], &wind, 8.0, 1.0, 1.0, &grid)?;
    println!("prior: {} cells, peak {:.2}", area.len(), area.max_probability());
    println!("{}", render(&grid, &area, &[(sensor, 'S')]));

    let observations = [
        Observation {
            position: CellCoord::new(14, 8),
            state: CellState::Clear,
        },
        Observation {
            position: CellCoord::new(12, 11),
            state: CellState::Clear,
        },
    ];
    let mut marks = vec![(sensor, 'S')];
    for obs in observations {
        area.apply_observation(&obs, &wind);
        marks.push((obs.position, 'o'));
        println!(
            "after {:?} at {}: {} cells still possible",
            obs.state,
            obs.position,
            area.positive_count()
        );
        println!("{}", render(&grid, &area, &marks));
    }
    let (empty, peak) = area.prune_and_peak();
    println!("area empty: {empty}, most likely cell: {peak:?}");
    Ok(())
}
