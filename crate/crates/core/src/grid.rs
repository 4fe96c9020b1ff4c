//! Lattice geometry shared by the simulator and the planners.
//!
//! Axes: `+x` is east, `+y` is north. The vector from cell `a` to cell `b`
//! is always `b - a` (see [`CellCoord::vector_to`]).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellCoord {
    pub x: i32,
    pub y: i32,
}

impl CellCoord {
    pub const fn new(x: i32, y: i32) -> Self {
        Self { x, y }
    }

    /// Vector pointing from `self` to `other`.
    pub fn vector_to(self, other: CellCoord) -> Vec2 {
        Vec2::new((other.x - self.x) as f64, (other.y - self.y) as f64)
    }

    pub fn offset(self, dx: i32, dy: i32) -> CellCoord {
        CellCoord::new(self.x + dx, self.y + dy)
    }

    pub fn chebyshev(self, other: CellCoord) -> i32 {
        (self.x - other.x).abs().max((self.y - other.y).abs())
    }
}

/// Row-major order: by row (`y`) first, then column (`x`). Every
/// tie-break in the crate uses this ordering.
impl Ord for CellCoord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for CellCoord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CellCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub dx: f64,
    pub dy: f64,
}

impl Vec2 {
    pub const fn new(dx: f64, dy: f64) -> Self {
        Self { dx, dy }
    }

    pub fn norm(self) -> f64 {
        self.dx.hypot(self.dy)
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.dx * other.dx + self.dy * other.dy
    }

    pub fn is_zero(self) -> bool {
        self.dx == 0.0 && self.dy == 0.0
    }
}

impl std::ops::Neg for Vec2 {
    type Output = Vec2;

    fn neg(self) -> Vec2 {
        Vec2::new(-self.dx, -self.dy)
    }
}

/// Cone test shared by fire spread, smoke spread and the search area:
/// `angle(offset, axis) < delta`. A full half-angle of 180 degrees admits
/// every direction, including straight against `axis`.
pub fn within_cone(offset: Vec2, axis: Vec2, delta: f64) -> bool {
    if delta >= 180.0 {
        return !offset.is_zero();
    }
    angle_between(offset, axis).is_ok_and(|a| a < delta)
}

/// Unsigned angle between two nonzero vectors, in degrees within `[0, 180]`.
pub fn angle_between(a: Vec2, b: Vec2) -> Result<f64> {
    let na = a.norm();
    let nb = b.norm();
    if na == 0.0 || nb == 0.0 || !na.is_finite() || !nb.is_finite() {
        return Err(Error::ZeroVector);
    }
    let cos = (a.dot(b) / (na * nb)).clamp(-1.0, 1.0);
    Ok(cos.acos().to_degrees())
}

pub fn euclidean(a: CellCoord, b: CellCoord) -> f64 {
    let dx = (a.x - b.x) as f64;
    let dy = (a.y - b.y) as f64;
    dx.hypot(dy)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellState {
    Clear,
    Burning,
    Burned,
    Smoke,
}

impl CellState {
    /// Precedence used when two processes target the same cell in one step:
    /// Burning > Burned > Smoke > Clear.
    pub fn priority(self) -> u8 {
        match self {
            CellState::Clear => 0,
            CellState::Smoke => 1,
            CellState::Burned => 2,
            CellState::Burning => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CellState::Clear => "clear",
            CellState::Burning => "burning",
            CellState::Burned => "burned",
            CellState::Smoke => "smoke",
        }
    }

    pub fn is_fire_evidence(self) -> bool {
        !matches!(self, CellState::Clear)
    }
}

/// Neighbour offsets in the fixed order E, NE, N, NW, W, SW, S, SE.
pub const NEIGHBOR_OFFSETS: [(i32, i32); 8] = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];

/// Dense `width x height` lattice of cell states plus an obstacle mask.
/// Obstacle cells are always `Clear`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grid {
    width: usize,
    height: usize,
    states: Vec<CellState>,
    obstacles: Vec<bool>,
}

impl Grid {
    pub fn new(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            states: vec![CellState::Clear; width * height],
            obstacles: vec![false; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn contains(&self, c: CellCoord) -> bool {
        c.x >= 0 && c.y >= 0 && (c.x as usize) < self.width && (c.y as usize) < self.height
    }

    /// Row-major index of an in-bounds cell.
    pub fn index(&self, c: CellCoord) -> usize {
        debug_assert!(self.contains(c), "{c} out of bounds");
        c.y as usize * self.width + c.x as usize
    }

    pub fn coord(&self, index: usize) -> CellCoord {
        CellCoord::new((index % self.width) as i32, (index / self.width) as i32)
    }

    pub fn state(&self, c: CellCoord) -> CellState {
        self.states[self.index(c)]
    }

    pub fn is_obstacle(&self, c: CellCoord) -> bool {
        self.obstacles[self.index(c)]
    }

    /// In bounds and not an obstacle.
    pub fn is_free(&self, c: CellCoord) -> bool {
        self.contains(c) && !self.is_obstacle(c)
    }

    pub fn set_state(&mut self, c: CellCoord, state: CellState) {
        let i = self.index(c);
        debug_assert!(!self.obstacles[i] || state == CellState::Clear);
        self.states[i] = state;
    }

    /// Marks `c` as an obstacle and resets its state to `Clear`.
    pub fn set_obstacle(&mut self, c: CellCoord) {
        let i = self.index(c);
        self.obstacles[i] = true;
        self.states[i] = CellState::Clear;
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = CellCoord> + '_ {
        (0..self.len()).map(move |i| self.coord(i))
    }

    pub fn cells_in(&self, state: CellState) -> Vec<CellCoord> {
        self.states
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == state)
            .map(|(i, _)| self.coord(i))
            .collect()
    }

    pub fn count(&self, state: CellState) -> usize {
        self.states.iter().filter(|s| **s == state).count()
    }

    pub fn states(&self) -> &[CellState] {
        &self.states
    }

    pub fn obstacles(&self) -> &[bool] {
        &self.obstacles
    }
}

/// The in-bounds cells at Chebyshev distance 1 from `c`, in
/// [`NEIGHBOR_OFFSETS`] order.
pub fn neighbors8(c: CellCoord, grid: &Grid) -> Vec<CellCoord> {
    NEIGHBOR_OFFSETS
        .iter()
        .map(|&(dx, dy)| c.offset(dx, dy))
        .filter(|n| grid.contains(*n))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WindModel {
    /// Direction the wind blows towards.
    pub direction: Vec2,
    /// Spread half-angle around `direction`, degrees.
    pub delta: f64,
    /// Smoke spread distance, cells.
    pub mu: f64,
}

impl WindModel {
    pub fn new(direction: Vec2, delta: f64, mu: f64) -> Result<Self> {
        if direction.is_zero() || !direction.norm().is_finite() {
            return Err(Error::Config("wind direction must be nonzero".into()));
        }
        if !(delta > 0.0 && delta <= 180.0) {
            return Err(Error::Config(format!("delta {delta} outside (0, 180]")));
        }
        if !(mu >= 0.0) {
            return Err(Error::Config(format!("mu {mu} must be >= 0")));
        }
        Ok(Self { direction, delta, mu })
    }

    /// Search direction: the negated wind.
    pub fn sigma(&self) -> Vec2 {
        -self.direction
    }
}

impl CellState {
    /// Character used by the ASCII rendering of a [`Grid`].
    pub fn glyph(self) -> char {
        match self {
            CellState::Clear => '.',
            CellState::Burning => '*',
            CellState::Burned => 'x',
            CellState::Smoke => '~',
        }
    }
}

/// ASCII map with north (`+y`) at the top; obstacles are `#`.
impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for y in (0..self.height as i32).rev() {
            for x in 0..self.width as i32 {
                let c = CellCoord::new(x, y);
                let ch = if self.is_obstacle(c) {
                    '#'
                } else {
                    self.state(c).glyph()
                };
                write!(f, "{ch}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_examples() {
        let a = angle_between(Vec2::new(1.0, 0.0), Vec2::new(1.0, 0.0)).unwrap();
        assert_eq!(a, 0.0);
        let a = angle_between(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)).unwrap();
        assert!((a - 90.0).abs() < 1e-12);
        let a = angle_between(Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0)).unwrap();
        assert!((a - 45.0).abs() < 1e-12);
    }

    #[test]
    fn angle_rejects_zero_vector() {
        let zero = Vec2::new(0.0, 0.0);
        assert_eq!(angle_between(zero, Vec2::new(1.0, 0.0)), Err(Error::ZeroVector));
        assert_eq!(angle_between(Vec2::new(1.0, 0.0), zero), Err(Error::ZeroVector));
    }

    #[test]
    fn euclidean_examples() {
        let o = CellCoord::new(0, 0);
        assert_eq!(euclidean(o, o), 0.0);
        assert_eq!(euclidean(o, CellCoord::new(3, 4)), 5.0);
        let d = euclidean(CellCoord::new(2, 2), CellCoord::new(3, 3));
        assert!((d - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn neighbor_counts() {
        let g = Grid::new(99, 99);
        assert_eq!(neighbors8(CellCoord::new(5, 5), &g).len(), 8);
        assert_eq!(neighbors8(CellCoord::new(0, 0), &g).len(), 3);
        assert_eq!(neighbors8(CellCoord::new(0, 5), &g).len(), 5);
    }

    #[test]
    fn neighbor_order_is_fixed() {
        let g = Grid::new(3, 3);
        let n = neighbors8(CellCoord::new(1, 1), &g);
        assert_eq!(n[0], CellCoord::new(2, 1));
        assert_eq!(n[1], CellCoord::new(2, 2));
        assert_eq!(n[2], CellCoord::new(1, 2));
        assert_eq!(n[7], CellCoord::new(2, 0));
    }

    #[test]
    fn row_major_ordering() {
        assert!(CellCoord::new(5, 0) < CellCoord::new(0, 1));
        assert!(CellCoord::new(0, 1) < CellCoord::new(1, 1));
    }

    #[test]
    fn obstacle_forces_clear() {
        let mut g = Grid::new(4, 4);
        let c = CellCoord::new(1, 2);
        g.set_state(c, CellState::Burning);
        g.set_obstacle(c);
        assert_eq!(g.state(c), CellState::Clear);
        assert!(!g.is_free(c));
    }

    #[test]
    fn wind_validation() {
        assert!(WindModel::new(Vec2::new(0.0, 0.0), 60.0, 7.0).is_err());
        assert!(WindModel::new(Vec2::new(1.0, 0.0), 0.0, 7.0).is_err());
        assert!(WindModel::new(Vec2::new(1.0, 0.0), 180.5, 7.0).is_err());
        assert!(WindModel::new(Vec2::new(1.0, 0.0), 180.0, 0.0).is_ok());
        assert!(WindModel::new(Vec2::new(1.0, 0.0), 60.0, -1.0).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn nonzero() -> impl Strategy<Value = Vec2> {
            (-50.0f64..50.0, -50.0f64..50.0)
                .prop_filter("nonzero", |(x, y)| x.abs() + y.abs() > 1e-6)
                .prop_map(|(x, y)| Vec2::new(x, y))
        }

        proptest! {
            #[test]
            fn angle_is_symmetric(a in nonzero(), b in nonzero()) {
                let ab = angle_between(a, b).unwrap();
                let ba = angle_between(b, a).unwrap();
                prop_assert!((ab - ba).abs() < 1e-12);
                prop_assert!((0.0..=180.0).contains(&ab));
            }

            #[test]
            fn angle_with_scaled_self(a in nonzero(), k in 0.01f64..100.0) {
                let same = angle_between(a, Vec2::new(a.dx * k, a.dy * k)).unwrap();
                prop_assert!(same.abs() < 1e-5);
                let opposite = angle_between(a, Vec2::new(-a.dx * k, -a.dy * k)).unwrap();
                prop_assert!((opposite - 180.0).abs() < 1e-5);
            }

            #[test]
            fn neighbors_in_bounds(w in 1usize..20, h in 1usize..20, x in 0i32..20, y in 0i32..20) {
                let g = Grid::new(w, h);
                let c = CellCoord::new(x % w as i32, y % h as i32);
                for n in neighbors8(c, &g) {
                    prop_assert!(g.contains(n));
                    prop_assert_ne!(n, c);
                    prop_assert_eq!(n.chebyshev(c), 1);
                }
            }
        }
    }

    #[test]
    fn ascii_rendering_puts_north_on_top() {
        let mut g = Grid::new(3, 2);
        g.set_state(CellCoord::new(0, 1), CellState::Burning);
        g.set_state(CellCoord::new(2, 0), CellState::Smoke);
        g.set_obstacle(CellCoord::new(1, 0));
        assert_eq!(g.to_string(), "*..\n.#~\n");
    }
}
