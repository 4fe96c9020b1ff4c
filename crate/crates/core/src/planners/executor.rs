//! Shared move-and-observe loop.
//!
//! Each timestamp the world advances first, then the UAV moves one cell,
//! then it observes the cell it occupies, so an observation always reflects
//! the post-spread state of that timestamp.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::grid::CellCoord;
use crate::planners::{observe_and_classify, Event, Outcome, OutcomeKind, Phase, PlannerKind, RunResult};
use crate::search_area::SearchArea;
use crate::trace::{RunTrace, TraceRecord};
use crate::world::World;

/// Hard limit on timestamps per run: `M * N * spread_rate * 4`.
pub fn step_cap(world: &World) -> u64 {
    (world.grid.len() as u64) * world.clock.spread_rate * 4
}

pub(crate) struct Mission {
    kind: PlannerKind,
    world: World,
    pub pos: CellCoord,
    pub t: u64,
    pub phase: Phase,
    pub area: SearchArea,
    /// Apply Bayesian updates to `area` after each observation.
    adaptive: bool,
    alerting: BTreeSet<CellCoord>,
    seen_clear: BTreeSet<CellCoord>,
    t_validate: Option<u64>,
    t_localize: Option<u64>,
    t_false_positive: Option<u64>,
    validated_in_transit: bool,
    localized_in_transit: bool,
    terminal: Option<OutcomeKind>,
    trace: RunTrace,
    compute: Duration,
    pub transit_len: u64,
    cap: u64,
    capped: bool,
}

impl Mission {
    pub fn new(kind: PlannerKind, world: &World, start: CellCoord, adaptive: bool) -> Result<Self> {
        if !world.grid.is_free(start) {
            return Err(Error::InvalidEndpoint(start));
        }
        let alerting: BTreeSet<CellCoord> = world.alerting_sensors().into_iter().collect();
        if alerting.is_empty() {
            return Err(Error::NoAlerts);
        }
        let t0 = Instant::now();
        let area = world.search_area()?;
        let compute = t0.elapsed();
        Ok(Self {
            kind,
            world: world.clone(),
            pos: start,
            t: 0,
            phase: Phase::InitialTransit,
            area,
            adaptive,
            alerting,
            seen_clear: BTreeSet::new(),
            t_validate: None,
            t_localize: None,
            t_false_positive: None,
            validated_in_transit: false,
            localized_in_transit: false,
            terminal: None,
            trace: RunTrace::default(),
            compute,
            transit_len: 0,
            cap: step_cap(world),
            capped: false,
        })
    }

    pub fn world(&self) -> &World {
        &self.world
    }

    pub fn alerting(&self) -> &BTreeSet<CellCoord> {
        &self.alerting
    }

    /// Runs `f`, charging its wall-clock time to the planner.
    pub fn timed<T>(&mut self, f: impl FnOnce(&mut Self) -> T) -> T {
        let t0 = Instant::now();
        let out = f(self);
        self.compute += t0.elapsed();
        out
    }

    pub fn is_done(&self) -> bool {
        self.terminal.is_some() || self.capped
    }

    /// Observes the start cell at t = 0.
    pub fn begin(&mut self) {
        debug_assert!(self.trace.is_empty());
        self.observe_here(false);
    }

    /// Moves to an adjacent free cell and observes it.
    pub fn step(&mut self, to: CellCoord) -> Result<()> {
        if self.is_done() {
            return Ok(());
        }
        if to.chebyshev(self.pos) != 1 || !self.world.grid.is_free(to) {
            return Err(Error::InvalidEndpoint(to));
        }
        if self.t >= self.cap {
            self.capped = true;
            return Ok(());
        }
        let spread = self.world.advance();
        self.pos = to;
        self.t += 1;
        self.observe_here(spread);
        Ok(())
    }

    /// Walks a path whose first cell is the current position.
    pub fn follow(&mut self, path: &[CellCoord]) -> Result<()> {
        debug_assert_eq!(path.first(), Some(&self.pos));
        for &c in path.iter().skip(1) {
            if self.is_done() {
                break;
            }
            self.step(c)?;
        }
        Ok(())
    }

    fn observe_here(&mut self, spread: bool) {
        let obs = self.world.observe(self.pos);
        let event = observe_and_classify(&obs, &self.alerting, &mut self.seen_clear);
        let in_transit = self.phase == Phase::InitialTransit;
        let label = match event {
            Event::LocalizedNow => {
                if self.t_validate.is_none() {
                    self.t_validate = Some(self.t);
                    self.validated_in_transit = in_transit;
                }
                self.t_localize = Some(self.t);
                self.localized_in_transit = in_transit;
                self.terminal = Some(OutcomeKind::Localized);
                Some("localized")
            }
            Event::ValidatedNow => {
                if self.t_validate.is_none() {
                    self.t_validate = Some(self.t);
                    self.validated_in_transit = in_transit;
                    Some("validated")
                } else {
                    None
                }
            }
            Event::FalsePositiveNow => {
                self.t_false_positive = Some(self.t);
                self.validated_in_transit = in_transit;
                self.terminal = Some(OutcomeKind::FalsePositive);
                Some("false_positive")
            }
            Event::Nothing => None,
        };
        if self.adaptive && self.terminal.is_none() {
            let wind = self.world.wind;
            self.timed(|m| m.area.apply_observation(&obs, &wind));
        }
        let (area_n, area_max_p) = if self.adaptive {
            (self.area.positive_count(), self.area.max_probability())
        } else {
            (self.area.len(), self.area.max_probability())
        };
        let event = label
            .map(str::to_string)
            .or_else(|| spread.then(|| "spread".to_string()));
        self.trace.push(TraceRecord {
            t: self.t,
            x: self.pos.x,
            y: self.pos.y,
            obs: obs.state,
            area_n,
            area_max_p,
            event,
        });
    }

    pub fn finish(mut self) -> RunResult {
        self.phase = Phase::Done;
        let kind = match self.terminal {
            Some(k) => k,
            None if self.t_validate.is_some() => OutcomeKind::ValidatedOnly,
            None => OutcomeKind::Exhausted,
        };
        RunResult {
            planner: self.kind,
            outcome: Outcome {
                kind,
                t_validate: self.t_validate,
                t_localize: self.t_localize,
                t_false_positive: self.t_false_positive,
                validated_in_transit: self.validated_in_transit,
                localized_in_transit: self.localized_in_transit,
            },
            trace: self.trace,
            transit_len: self.transit_len,
            compute: self.compute,
            capped: self.capped,
            final_area: self.area,
        }
    }
}
