use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Vec2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WindSpec {
    /// Uniformly random heading, drawn per scenario.
    Random,
    Fixed(Vec2),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstacleSpec {
    None,
    /// One axis-aligned rectangle, each side drawn from `1..=max_side`.
    RandomRect {
        max_side: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FireSpec {
    TrueFire,
    FalsePositive,
}

/// Scenario parameters, read from a JSON object with exactly these keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub grid_w: usize,
    pub grid_h: usize,
    pub sensor_count: usize,
    /// Minimum sensor separation; pairs are strictly farther apart.
    pub d: f64,
    pub delta: f64,
    pub mu: f64,
    pub mu_a: f64,
    pub alpha: f64,
    pub beta: f64,
    pub spread_rate: u64,
    pub wind: WindSpec,
    pub obstacle: ObstacleSpec,
    pub fire: FireSpec,
    pub seed: u64,
}

impl Default for ScenarioConfig {
    /// 99x99 grid, 50 sensors 5 cells apart, random wind with a 60 degree
    /// spread, smoke reach 7, search radius 8, alpha = beta = 1, fire spread
    /// every 20 UAV moves, one random rectangular obstacle.
    fn default() -> Self {
        Self {
            grid_w: 99,
            grid_h: 99,
            sensor_count: 50,
            d: 5.0,
            delta: 60.0,
            mu: 7.0,
            mu_a: 8.0,
            alpha: 1.0,
            beta: 1.0,
            spread_rate: 20,
            wind: WindSpec::Random,
            obstacle: ObstacleSpec::RandomRect { max_side: 20 },
            fire: FireSpec::TrueFire,
            seed: 1,
        }
    }
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.grid_w < 3 || self.grid_h < 3 {
            return bad(format!(
                "grid must be at least 3x3, got {}x{}",
                self.grid_w, self.grid_h
            ));
        }
        if self.sensor_count == 0 {
            return bad("sensor_count must be >= 1".into());
        }
        if !(self.d >= 0.0) {
            return bad(format!("d must be >= 0, got {}", self.d));
        }
        if !(self.delta > 0.0 && self.delta <= 180.0) {
            return bad(format!("delta must be in (0, 180], got {}", self.delta));
        }
        if !(self.mu >= 0.0) || !(self.mu_a >= 0.0) {
            return bad("mu and mu_a must be >= 0".into());
        }
        if !(self.alpha >= 0.0) {
            return bad(format!("alpha must be >= 0, got {}", self.alpha));
        }
        if !(self.beta > 0.0) {
            return bad(format!("beta must be > 0, got {}", self.beta));
        }
        if self.spread_rate == 0 {
            return bad("spread_rate must be >= 1".into());
        }
        if let WindSpec::Fixed(v) = self.wind {
            if v.is_zero() || !v.norm().is_finite() {
                return bad("fixed wind must be a nonzero vector".into());
            }
        }
        if let ObstacleSpec::RandomRect { max_side } = self.obstacle {
            if max_side == 0 {
                return bad("obstacle max_side must be >= 1".into());
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ScenarioConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("config always serializes")
    }
}
