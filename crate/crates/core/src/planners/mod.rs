//! UAV decision logic.
//!
//! All three planners share the same first phase shape (fly an A* path,
//! observing every cell on the way) and the same termination events. They
//! differ in where the first phase ends and in how the search area is
//! covered afterwards:
//!
//! * [`PlannerKind::FireGipp`] flies to the closest search-area cell, then
//!   greedily climbs the posterior, updating it after every observation.
//! * [`PlannerKind::TspCp`] flies to the same cell, then follows a fixed
//!   TSP tour over the search area.
//! * [`PlannerKind::TspSensor`] flies to the closest alerting sensor, then
//!   follows a fixed TSP tour.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{euclidean, CellCoord, CellState};
use crate::search_area::{Observation, SearchArea};
use crate::trace::RunTrace;
use crate::world::World;

pub mod astar;
mod executor;
mod fire_gipp;
pub mod tsp;
mod tsp_baselines;

pub use astar::{astar, path_cost};
pub use executor::step_cap;
pub use fire_gipp::run_fire_gipp;
pub use tsp::tsp_tour;
pub use tsp_baselines::{run_tsp_cp, run_tsp_sensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlannerKind {
    FireGipp,
    TspCp,
    TspSensor,
}

impl PlannerKind {
    pub const ALL: [PlannerKind; 3] = [PlannerKind::FireGipp, PlannerKind::TspCp, PlannerKind::TspSensor];

    pub fn as_str(self) -> &'static str {
        match self {
            PlannerKind::FireGipp => "fire-gipp",
            PlannerKind::TspCp => "tsp-cp",
            PlannerKind::TspSensor => "tsp-sensor",
        }
    }

    pub fn run(self, world: &World, start: CellCoord) -> Result<RunResult> {
        match self {
            PlannerKind::FireGipp => run_fire_gipp(world, start),
            PlannerKind::TspCp => run_tsp_cp(world, start),
            PlannerKind::TspSensor => run_tsp_sensor(world, start),
        }
    }
}

impl fmt::Display for PlannerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PlannerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fire-gipp" => Ok(PlannerKind::FireGipp),
            "tsp-cp" => Ok(PlannerKind::TspCp),
            "tsp-sensor" => Ok(PlannerKind::TspSensor),
            other => Err(Error::Config(format!("unknown planner `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Phase {
    InitialTransit,
    Searching,
    Done,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UavState {
    pub position: CellCoord,
    pub t: u64,
    pub phase: Phase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutcomeKind {
    Localized,
    ValidatedOnly,
    FalsePositive,
    Exhausted,
}

impl OutcomeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OutcomeKind::Localized => "localized",
            OutcomeKind::ValidatedOnly => "validated_only",
            OutcomeKind::FalsePositive => "false_positive",
            OutcomeKind::Exhausted => "exhausted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub kind: OutcomeKind,
    pub t_validate: Option<u64>,
    pub t_localize: Option<u64>,
    /// Timestamp at which every alerting sensor had been seen clear.
    pub t_false_positive: Option<u64>,
    pub validated_in_transit: bool,
    pub localized_in_transit: bool,
}

impl Outcome {
    /// Time the alert was resolved one way or the other: fire evidence seen
    /// or false positive declared.
    pub fn t_resolved(&self) -> Option<u64> {
        self.t_validate.or(self.t_false_positive)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub planner: PlannerKind,
    pub outcome: Outcome,
    pub trace: RunTrace,
    /// Moves in the initial transit path.
    pub transit_len: u64,
    /// Wall-clock time spent in planning calls.
    pub compute: Duration,
    /// The run was cut off by [`step_cap`].
    pub capped: bool,
    /// Search-area probabilities at the end of the run.
    pub final_area: SearchArea,
}

impl RunResult {
    pub fn path(&self) -> Vec<CellCoord> {
        self.trace.records.iter().map(|r| CellCoord::new(r.x, r.y)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Event {
    LocalizedNow,
    ValidatedNow,
    FalsePositiveNow,
    Nothing,
}

/// Classifies one observation. A clear observation at an alerting sensor is
/// recorded in `observed_clear_sensors`; once every alerting sensor has been
/// seen clear the alert is a false positive.
pub fn observe_and_classify(
    obs: &Observation,
    alerting_sensors: &BTreeSet<CellCoord>,
    observed_clear_sensors: &mut BTreeSet<CellCoord>,
) -> Event {
    match obs.state {
        CellState::Burning => Event::LocalizedNow,
        CellState::Smoke | CellState::Burned => Event::ValidatedNow,
        CellState::Clear => {
            if alerting_sensors.contains(&obs.position) {
                observed_clear_sensors.insert(obs.position);
                if alerting_sensors.is_subset(observed_clear_sensors) {
                    return Event::FalsePositiveNow;
                }
            }
            Event::Nothing
        }
    }
}

/// The cell of `candidates` nearest to `from` (Euclidean, row-major ties).
pub fn closest_cell<I>(candidates: I, from: CellCoord) -> Option<CellCoord>
where
    I: IntoIterator<Item = CellCoord>,
{
    let mut best: Option<(CellCoord, f64)> = None;
    for c in candidates {
        let d = euclidean(c, from);
        match best {
            Some((bc, bd)) if d > bd || (d == bd && c > bc) => {}
            _ => best = Some((c, d)),
        }
    }
    best.map(|(c, _)| c)
}

/// Closest keyed cell of `area` with positive probability.
pub fn closest_point(area: &SearchArea, from: CellCoord) -> Result<CellCoord> {
    closest_cell(area.iter().filter(|(_, p)| *p > 0.0).map(|(c, _)| c), from).ok_or(Error::EmptyArea)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Grid, Vec2, WindModel};
    use crate::search_area::generate_search_area;

    fn set(cells: &[(i32, i32)]) -> BTreeSet<CellCoord> {
        cells.iter().map(|&(x, y)| CellCoord::new(x, y)).collect()
    }

    #[test]
    fn classify_events() {
        let alerting = set(&[(3, 3)]);
        let mut seen = BTreeSet::new();
        let obs = |x, y, state| Observation {
            position: CellCoord::new(x, y),
            state,
        };
        assert_eq!(
            observe_and_classify(&obs(0, 0, CellState::Burning), &alerting, &mut seen),
            Event::LocalizedNow
        );
        assert_eq!(
            observe_and_classify(&obs(0, 0, CellState::Smoke), &alerting, &mut seen),
            Event::ValidatedNow
        );
        assert_eq!(
            observe_and_classify(&obs(0, 0, CellState::Burned), &alerting, &mut seen),
            Event::ValidatedNow
        );
        assert_eq!(
            observe_and_classify(&obs(0, 0, CellState::Clear), &alerting, &mut seen),
            Event::Nothing
        );
        assert_eq!(
            observe_and_classify(&obs(3, 3, CellState::Clear), &alerting, &mut seen),
            Event::FalsePositiveNow
        );
    }

    #[test]
    fn false_positive_needs_every_sensor() {
        let alerting = set(&[(3, 3), (8, 8)]);
        let mut seen = BTreeSet::new();
        let clear = |x, y| Observation {
            position: CellCoord::new(x, y),
            state: CellState::Clear,
        };
        assert_eq!(observe_and_classify(&clear(3, 3), &alerting, &mut seen), Event::Nothing);
        assert_eq!(observe_and_classify(&clear(3, 3), &alerting, &mut seen), Event::Nothing);
        assert_eq!(
            observe_and_classify(&clear(8, 8), &alerting, &mut seen),
            Event::FalsePositiveNow
        );
    }

    #[test]
    fn closest_point_rules() {
        let g = Grid::new(20, 20);
        let wind = WindModel::new(Vec2::new(1.0, 0.0), 60.0, 7.0).unwrap();
        let mut area = generate_search_area(&[CellCoord::new(10, 10)], &wind, 0.5, 1.0, 1.0, &g).unwrap();
        assert_eq!(area.len(), 1);
        assert_eq!(
            closest_point(&area, CellCoord::new(0, 0)).unwrap(),
            CellCoord::new(10, 10)
        );

        let area8 = generate_search_area(&[CellCoord::new(10, 10)], &wind, 8.0, 1.0, 1.0, &g).unwrap();
        assert_eq!(
            closest_point(&area8, CellCoord::new(7, 10)).unwrap(),
            CellCoord::new(7, 10)
        );

        // (8,11) and (8,9) are both at distance 1 from (8,10): row-major picks y = 9.
        let ties = [CellCoord::new(8, 11), CellCoord::new(8, 9)];
        assert_eq!(closest_cell(ties, CellCoord::new(8, 10)), Some(CellCoord::new(8, 9)));

        area.zero(CellCoord::new(10, 10));
        assert_eq!(closest_point(&area, CellCoord::new(0, 0)), Err(Error::EmptyArea));
    }

    #[test]
    fn planner_names_roundtrip() {
        for k in PlannerKind::ALL {
            assert_eq!(k.as_str().parse::<PlannerKind>().unwrap(), k);
        }
        assert!("greedy".parse::<PlannerKind>().is_err());
    }
}
