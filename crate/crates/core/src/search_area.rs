//! Probabilistic search area anchored at alerting sensors.
//!
//! Cells fan out upwind of each alerting sensor. Every cell carries a prior
//! that decays with distance from the sensor and with angular offset from
//! the search direction. Observations act as binary likelihoods: a cell is
//! either ruled out (probability set to zero) or left untouched.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{angle_between, euclidean, within_cone, CellCoord, CellState, Grid, Vec2, WindModel};

/// Threshold applied by the burning and smoke/burned observation rules.
pub const HALF_PLANE_DEG: f64 = 90.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub position: CellCoord,
    pub state: CellState,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchArea {
    /// Keyed cells, sorted row-major.
    cells: Vec<(CellCoord, f64)>,
    pub anchors: Vec<CellCoord>,
    pub sigma: Vec2,
    pub delta: f64,
    pub mu_a: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// `1 / ((1 + alpha*|theta|/delta) * (beta * dist))`, with `theta` the angle
/// between `cell - anchor` and `sigma` (zero at the anchor) and `dist`
/// clamped below at one cell. Capped at 1 so that `beta < 1` still yields a
/// probability.
pub fn prior_probability(
    cell: CellCoord,
    anchor: CellCoord,
    sigma: Vec2,
    delta: f64,
    alpha: f64,
    beta: f64,
) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::Config(format!("beta must be > 0, got {beta}")));
    }
    if !(delta > 0.0) {
        return Err(Error::Config(format!("delta must be > 0, got {delta}")));
    }
    let theta = if cell == anchor {
        0.0
    } else {
        angle_between(anchor.vector_to(cell), sigma)?
    };
    let dist = euclidean(cell, anchor).max(1.0);
    let p = 1.0 / ((1.0 + alpha * theta.abs() / delta) * (beta * dist));
    Ok(p.min(1.0))
}

/// Membership predicate for one anchor: the anchor itself, or a free cell
/// within `mu_a` whose offset from the anchor lies strictly inside the
/// `delta` cone around `sigma`.
pub fn in_search_cone(cell: CellCoord, anchor: CellCoord, sigma: Vec2, delta: f64, mu_a: f64) -> bool {
    if cell == anchor {
        return true;
    }
    euclidean(cell, anchor) <= mu_a && within_cone(anchor.vector_to(cell), sigma, delta)
}

pub fn generate_search_area(
    anchors: &[CellCoord],
    wind: &WindModel,
    mu_a: f64,
    alpha: f64,
    beta: f64,
    grid: &Grid,
) -> Result<SearchArea> {
    if anchors.is_empty() {
        return Err(Error::NoAnchors);
    }
    let sigma = wind.sigma();
    let r = mu_a.max(0.0).floor() as i32;
    let mut cells: Vec<(CellCoord, f64)> = Vec::new();
    for &anchor in anchors {
        if !grid.contains(anchor) {
            return Err(Error::OutOfBounds(anchor));
        }
        for dy in -r..=r {
            for dx in -r..=r {
                let c = anchor.offset(dx, dy);
                if !grid.is_free(c) || !in_search_cone(c, anchor, sigma, wind.delta, mu_a) {
                    continue;
                }
                let p = prior_probability(c, anchor, sigma, wind.delta, alpha, beta)?;
                cells.push((c, p));
            }
        }
    }
    // Overlapping anchors: keep the largest prior per cell.
    cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.total_cmp(&a.1)));
    cells.dedup_by_key(|(c, _)| *c);
    Ok(SearchArea {
        cells,
        anchors: anchors.to_vec(),
        sigma,
        delta: wind.delta,
        mu_a,
        alpha,
        beta,
    })
}

impl SearchArea {
    /// Number of keyed cells, including zero-probability ones not yet pruned.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn slot(&self, c: CellCoord) -> Option<usize> {
        self.cells.binary_search_by(|(k, _)| k.cmp(&c)).ok()
    }

    pub fn contains(&self, c: CellCoord) -> bool {
        self.slot(c).is_some()
    }

    /// Probability of `c`; zero for cells outside the area.
    pub fn probability(&self, c: CellCoord) -> f64 {
        self.slot(c).map_or(0.0, |i| self.cells[i].1)
    }

    /// Keyed cells with their probabilities, row-major.
    pub fn iter(&self) -> impl Iterator<Item = (CellCoord, f64)> + '_ {
        self.cells.iter().copied()
    }

    pub fn cells(&self) -> impl Iterator<Item = CellCoord> + '_ {
        self.cells.iter().map(|(c, _)| *c)
    }

    pub fn positive_count(&self) -> usize {
        self.cells.iter().filter(|(_, p)| *p > 0.0).count()
    }

    pub fn max_probability(&self) -> f64 {
        self.cells.iter().map(|(_, p)| *p).fold(0.0, f64::max)
    }

    /// Removes `c` from consideration (probability zero).
    pub fn zero(&mut self, c: CellCoord) {
        if let Some(i) = self.slot(c) {
            self.cells[i].1 = 0.0;
        }
    }

    /// Applies one observation in place. Every cell ruled out by the
    /// observation drops to zero; all others keep their probability.
    ///
    /// A candidate `c` is tested with the vector from `c` to the observed
    /// cell:
    ///
    /// * `Clear`: zeroed when that vector lies within `delta` of the search
    ///   direction.
    /// * `Burning`: same, with a 90 degree threshold.
    /// * `Smoke`/`Burned`: 90 degree threshold against the wind direction.
    ///
    /// The observed cell itself is always zeroed. Anchor cells (the alerting
    /// sensors) are only zeroed by observing them directly: they are the
    /// cells a false alarm has to be confirmed at.
    pub fn apply_observation(&mut self, obs: &Observation, wind: &WindModel) {
        let (axis, threshold) = match obs.state {
            CellState::Clear => (self.sigma, wind.delta),
            CellState::Burning => (self.sigma, HALF_PLANE_DEG),
            CellState::Smoke | CellState::Burned => (wind.direction, HALF_PLANE_DEG),
        };
        // angle(v, axis) < threshold  <=>  cos(angle) > cos(threshold)
        let everywhere = threshold >= 180.0;
        let axis_norm = axis.norm();
        let cos_threshold = threshold.to_radians().cos();
        let origin = obs.position;
        for (c, p) in self.cells.iter_mut() {
            if *p == 0.0 {
                continue;
            }
            if *c == origin {
                *p = 0.0;
                continue;
            }
            if self.anchors.contains(c) {
                continue;
            }
            let v = ruled_out_vector(origin, *c);
            if everywhere || v.dot(axis) > cos_threshold * v.norm() * axis_norm {
                *p = 0.0;
            }
        }
    }

    /// Drops zero-probability cells and reports `(is_empty, peak)`, where the
    /// peak is the highest-probability cell (row-major first on ties).
    pub fn prune_and_peak(&mut self) -> (bool, Option<CellCoord>) {
        self.cells.retain(|(_, p)| *p > 0.0);
        let mut best: Option<(CellCoord, f64)> = None;
        for &(c, p) in &self.cells {
            if best.is_none_or(|(_, bp)| p > bp) {
                best = Some((c, p));
            }
        }
        (self.cells.is_empty(), best.map(|(c, _)| c))
    }
}

/// Vector compared against the rule axis when deciding whether the
/// observation at `observed` rules out `candidate`.
fn ruled_out_vector(observed: CellCoord, candidate: CellCoord) -> Vec2 {
    candidate.vector_to(observed)
}

pub fn update_on_observation(area: &SearchArea, obs: &Observation, wind: &WindModel) -> SearchArea {
    let mut next = area.clone();
    next.apply_observation(obs, wind);
    next
}

pub fn prune_and_peak(area: &mut SearchArea) -> (bool, Option<CellCoord>) {
    area.prune_and_peak()
}
