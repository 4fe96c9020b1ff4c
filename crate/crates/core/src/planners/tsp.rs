//! Open-tour TSP heuristic: nearest-neighbour construction followed by
//! 2-opt segment reversals until no reversal shortens the tour.

use crate::grid::{euclidean, CellCoord};

const IMPROVEMENT_EPS: f64 = 1e-9;

/// Visiting order over `nodes` for a walk that begins at `start`. The start
/// is not part of the returned order (it is dropped from `nodes` if present).
pub fn tsp_tour(nodes: &[CellCoord], start: CellCoord) -> Vec<CellCoord> {
    let mut order = nearest_neighbor(nodes, start);
    two_opt(&mut order, start);
    order
}

/// Euclidean length of the walk `start -> order[0] -> ... -> order[n-1]`.
pub fn tour_cost(order: &[CellCoord], start: CellCoord) -> f64 {
    let mut prev = start;
    let mut total = 0.0;
    for &c in order {
        total += euclidean(prev, c);
        prev = c;
    }
    total
}

pub fn nearest_neighbor(nodes: &[CellCoord], start: CellCoord) -> Vec<CellCoord> {
    let mut remaining: Vec<CellCoord> = nodes.iter().copied().filter(|c| *c != start).collect();
    remaining.sort();
    remaining.dedup();

    let mut order = Vec::with_capacity(remaining.len());
    let mut cur = start;
    while !remaining.is_empty() {
        // `remaining` is row-major sorted, so the first minimum wins ties.
        let mut best = 0;
        let mut best_d = f64::INFINITY;
        for (i, &c) in remaining.iter().enumerate() {
            let d = euclidean(cur, c);
            if d < best_d {
                best_d = d;
                best = i;
            }
        }
        cur = remaining.remove(best);
        order.push(cur);
    }
    order
}

/// Improves `order` in place with first-improvement 2-opt on the open path
/// anchored at `start`. Never increases [`tour_cost`].
pub fn two_opt(order: &mut [CellCoord], start: CellCoord) {
    let n = order.len();
    if n < 2 {
        return;
    }
    let at = |order: &[CellCoord], k: usize| if k == 0 { start } else { order[k - 1] };
    // Indices below are into the path [start, order...]; position k >= 1 is order[k-1].
    let mut improved = true;
    while improved {
        improved = false;
        for i in 1..n {
            for j in (i + 1)..=n {
                let a = at(order, i - 1);
                let b = at(order, i);
                let c = at(order, j);
                let mut delta = euclidean(a, c) - euclidean(a, b);
                if j < n {
                    let d = at(order, j + 1);
                    delta += euclidean(b, d) - euclidean(c, d);
                }
                if delta < -IMPROVEMENT_EPS {
                    order[i - 1..j].reverse();
                    improved = true;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(v: &[(i32, i32)]) -> Vec<CellCoord> {
        v.iter().map(|&(x, y)| CellCoord::new(x, y)).collect()
    }

    #[test]
    fn three_in_a_column() {
        let nodes = cells(&[(0, 0), (0, 1), (0, 2)]);
        let tour = tsp_tour(&nodes, CellCoord::new(0, 0));
        assert_eq!(tour, cells(&[(0, 1), (0, 2)]));
        assert_eq!(tour_cost(&tour, CellCoord::new(0, 0)), 2.0);
    }

    #[test]
    fn single_node() {
        let tour = tsp_tour(&cells(&[(3, 3)]), CellCoord::new(0, 0));
        assert_eq!(tour.len(), 1);
    }

    #[test]
    fn two_opt_untangles_crossing() {
        let start = CellCoord::new(0, 0);
        let mut order = cells(&[(3, 0), (1, 0), (2, 0), (4, 0)]);
        let before = tour_cost(&order, start);
        two_opt(&mut order, start);
        assert!(tour_cost(&order, start) < before);
        assert_eq!(order, cells(&[(1, 0), (2, 0), (3, 0), (4, 0)]));
    }

    #[test]
    fn empty_after_start_removed() {
        assert!(tsp_tour(&cells(&[(1, 1)]), CellCoord::new(1, 1)).is_empty());
    }

    fn brute_force_optimum(nodes: &[CellCoord], start: CellCoord) -> f64 {
        fn go(rest: &mut Vec<CellCoord>, at: CellCoord, acc: f64, best: &mut f64) {
            if rest.is_empty() {
                *best = best.min(acc);
                return;
            }
            for i in 0..rest.len() {
                let next = rest.remove(i);
                go(rest, next, acc + euclidean(at, next), best);
                rest.insert(i, next);
            }
        }
        let mut best = f64::INFINITY;
        go(&mut nodes.to_vec(), start, 0.0, &mut best);
        best
    }

    #[test]
    fn shuffled_line_is_recovered_in_order() {
        let start = CellCoord::new(0, 0);
        let nodes = cells(&[(5, 0), (2, 0), (7, 0), (1, 0), (3, 0), (6, 0), (4, 0)]);
        let tour = tsp_tour(&nodes, start);
        assert_eq!(tour, cells(&[(1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (6, 0), (7, 0)]));
    }

    proptest::proptest! {
        #[test]
        fn tour_is_a_permutation_no_worse_than_nearest_neighbour(
            pts in proptest::collection::btree_set((0i32..12, 0i32..12), 1..8),
            sx in 0i32..12, sy in 0i32..12,
        ) {
            let start = CellCoord::new(sx, sy);
            let mut nodes: Vec<CellCoord> = pts.iter().map(|&(x, y)| CellCoord::new(x, y)).filter(|c| *c != start).collect();
            nodes.sort();
            let tour = tsp_tour(&nodes, start);
            let mut sorted = tour.clone();
            sorted.sort();
            proptest::prop_assert_eq!(&sorted, &nodes);
            let cost = tour_cost(&tour, start);
            proptest::prop_assert!(cost <= tour_cost(&nearest_neighbor(&nodes, start), start) + 1e-9);
            if !nodes.is_empty() {
                proptest::prop_assert!(cost <= 1.5 * brute_force_optimum(&nodes, start) + 1e-9);
            }
        }
    }
}
