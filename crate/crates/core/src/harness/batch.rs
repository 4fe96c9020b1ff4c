//! Perimeter-start sweeps over many simulated fires.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{CellCoord, Grid};
use crate::harness::config::ScenarioConfig;
use crate::harness::metrics::RunMetrics;
use crate::harness::scenario::generate_scenario;
use crate::planners::{PlannerKind, RunResult};
use crate::trace::RunTrace;
use crate::world::World;

/// SplitMix64 finaliser.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `splitmix64(splitmix64(base) ^ index)`.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    splitmix64(splitmix64(base) ^ index)
}

/// Seed of the world for fire `fire`. Every start and every planner of that
/// fire shares the world.
pub fn fire_seed(base: u64, fire: usize) -> u64 {
    derive_seed(base, fire as u64)
}

/// Border cells without the four corners, clockwise (with `+y` up) from
/// `(1, 0)`: west edge upwards, north edge eastwards, east edge downwards,
/// then the south edge back towards the start.
pub fn perimeter_starts(grid: &Grid) -> Vec<CellCoord> {
    let w = grid.width() as i32;
    let h = grid.height() as i32;
    if w < 3 || h < 3 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(2 * (w + h - 4) as usize);
    out.push(CellCoord::new(1, 0));
    out.extend((1..h - 1).map(|y| CellCoord::new(0, y)));
    out.extend((1..w - 1).map(|x| CellCoord::new(x, h - 1)));
    out.extend((1..h - 1).rev().map(|y| CellCoord::new(w - 1, y)));
    out.extend((2..w - 1).rev().map(|x| CellCoord::new(x, 0)));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartSelection {
    AllPerimeter,
    /// `k` starts spread evenly along the perimeter order.
    Sample(usize),
}

impl StartSelection {
    pub fn select(self, all: &[CellCoord]) -> Vec<(usize, CellCoord)> {
        match self {
            StartSelection::AllPerimeter => all.iter().copied().enumerate().collect(),
            StartSelection::Sample(k) => {
                let k = k.min(all.len());
                (0..k)
                    .map(|i| {
                        let j = i * all.len() / k;
                        (j, all[j])
                    })
                    .collect()
            }
        }
    }
}

impl FromStr for StartSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(StartSelection::AllPerimeter);
        }
        match s.parse::<usize>() {
            Ok(k) if k > 0 => Ok(StartSelection::Sample(k)),
            _ => Err(Error::Config(format!(
                "--starts expects `all` or a positive count, got `{s}`"
            ))),
        }
    }
}

impl fmt::Display for StartSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StartSelection::AllPerimeter => f.write_str("all"),
            StartSelection::Sample(k) => write!(f, "{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FailedRow {
    pub fire: usize,
    pub start: Option<CellCoord>,
    pub planner: Option<PlannerKind>,
    pub error: Error,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatchRow {
    pub metrics: RunMetrics,
    pub world_fingerprint: u64,
    pub start_index: usize,
    pub trace: Option<RunTrace>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BatchResults {
    /// Sorted by (fire, start index, planner).
    pub rows: Vec<BatchRow>,
    pub failures: Vec<FailedRow>,
}

impl BatchResults {
    pub fn metrics(&self) -> Vec<RunMetrics> {
        self.rows.iter().map(|r| r.metrics.clone()).collect()
    }
}

#[derive(Debug, Clone)]
pub struct BatchOptions {
    pub fires: usize,
    pub planners: Vec<PlannerKind>,
    pub starts: StartSelection,
    /// Record wall-clock planning time in each row.
    pub timing: bool,
    pub keep_traces: bool,
}

/// World of fire `fire` in a batch based on `template`.
pub fn fire_world(template: &ScenarioConfig, fire: usize) -> Result<World> {
    generate_scenario(&ScenarioConfig {
        seed: fire_seed(template.seed, fire),
        ..template.clone()
    })
}

/// Generates the world for every fire of a batch.
pub fn batch_worlds(template: &ScenarioConfig, fires: usize) -> Vec<Result<World>> {
    (0..fires)
        .into_par_iter()
        .map(|fire| fire_world(template, fire))
        .collect()
}

/// Runs every (fire, start, planner) combination for fires `0..opts.fires`.
/// A failing scenario or run is recorded in `failures` and the rest of the
/// batch carries on.
pub fn run_batch(template: &ScenarioConfig, opts: &BatchOptions) -> Result<BatchResults> {
    if opts.fires == 0 {
        return Err(Error::Config("batch needs at least one fire".into()));
    }
    let fires: Vec<usize> = (0..opts.fires).collect();
    run_fires(template, &fires, opts)
}

/// Like [`run_batch`] for an explicit list of fire indices (`opts.fires` is
/// ignored). Each fire's rows depend only on the base seed and its index.
pub fn run_fires(template: &ScenarioConfig, fires: &[usize], opts: &BatchOptions) -> Result<BatchResults> {
    template.validate()?;
    let starts = StartSelection::select(
        opts.starts,
        &perimeter_starts(&Grid::new(template.grid_w, template.grid_h)),
    );
    let worlds: Vec<(usize, Result<World>)> = fires
        .par_iter()
        .map(|&fire| (fire, fire_world(template, fire)))
        .collect();

    let mut results = BatchResults::default();
    let mut jobs = Vec::new();
    for (fire, world) in &worlds {
        let fire = *fire;
        match world {
            Ok(w) => {
                for &(si, start) in &starts {
                    for &planner in &opts.planners {
                        jobs.push((fire, w, si, start, planner));
                    }
                }
            }
            Err(e) => results.failures.push(FailedRow {
                fire,
                start: None,
                planner: None,
                error: e.clone(),
            }),
        }
    }

    let outcomes: Vec<_> = jobs
        .par_iter()
        .map(|&(fire, world, si, start, planner)| {
            let run: Result<RunResult> = planner.run(world, start);
            (fire, world.fingerprint(), si, start, planner, run)
        })
        .collect();

    for (fire, fingerprint, si, start, planner, run) in outcomes {
        match run {
            Ok(r) => results.rows.push(BatchRow {
                metrics: RunMetrics::from_run(fire, &r, opts.timing),
                world_fingerprint: fingerprint,
                start_index: si,
                trace: opts.keep_traces.then_some(r.trace),
            }),
            Err(error) => results.failures.push(FailedRow {
                fire,
                start: Some(start),
                planner: Some(planner),
                error,
            }),
        }
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perimeter_counts() {
        assert_eq!(perimeter_starts(&Grid::new(99, 99)).len(), 388);
        assert_eq!(perimeter_starts(&Grid::new(3, 3)).len(), 4);
        assert_eq!(perimeter_starts(&Grid::new(4, 4)).len(), 8);
        assert_eq!(perimeter_starts(&Grid::new(5, 3)).len(), 8);
    }

    #[test]
    fn perimeter_order_and_membership() {
        let g = Grid::new(4, 4);
        let p = perimeter_starts(&g);
        let expected: Vec<CellCoord> = [(1, 0), (0, 1), (0, 2), (1, 3), (2, 3), (3, 2), (3, 1), (2, 0)]
            .into_iter()
            .map(|(x, y)| CellCoord::new(x, y))
            .collect();
        assert_eq!(p, expected);

        let g = Grid::new(99, 99);
        let p = perimeter_starts(&g);
        let mut uniq = p.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), p.len());
        for c in p {
            let on_border = c.x == 0 || c.y == 0 || c.x == 98 || c.y == 98;
            let corner = (c.x == 0 || c.x == 98) && (c.y == 0 || c.y == 98);
            assert!(on_border && !corner);
        }
    }

    #[test]
    fn sampling_is_even() {
        let all = perimeter_starts(&Grid::new(99, 99));
        let picked = StartSelection::Sample(97).select(&all);
        assert_eq!(picked.len(), 97);
        assert!(picked.iter().enumerate().all(|(i, (j, _))| *j == 4 * i));
        assert_eq!(StartSelection::AllPerimeter.select(&all).len(), 388);
        assert_eq!(StartSelection::Sample(1000).select(&all).len(), 388);
    }

    #[test]
    fn start_selection_parses() {
        assert_eq!("all".parse::<StartSelection>().unwrap(), StartSelection::AllPerimeter);
        assert_eq!("12".parse::<StartSelection>().unwrap(), StartSelection::Sample(12));
        assert!("0".parse::<StartSelection>().is_err());
        assert!("some".parse::<StartSelection>().is_err());
    }

    #[test]
    fn seeds_differ_per_fire() {
        let seeds: Vec<u64> = (0..16).map(|i| fire_seed(1, i)).collect();
        let mut uniq = seeds.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), 16);
        assert_eq!(fire_seed(1, 3), fire_seed(1, 3));
        assert_ne!(fire_seed(1, 3), fire_seed(2, 3));
        // Reference value of the standard SplitMix64 sequence seeded with 0.
        assert_eq!(splitmix64(0), 0xE220_A839_7B1D_CDAF);
    }
}
