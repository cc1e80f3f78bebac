//! The 11x11 All or Nothing T-metacell in canonical orientation (non-exit side S).

use std::collections::BTreeMap;

use crate::geom::{Cell, Direction, ExitPair};
use crate::regions::BoundaryEdgeSet;

pub const AON_SIZE: i32 = 11;
pub const AON_NON_EXIT: Direction = Direction::S;

const POLYLINES: &[&[(i32, i32)]] = &[
    &[(0, 4), (1, 4), (1, 1), (3, 1), (3, 4), (5, 4), (5, 3), (7, 3), (7, 4), (8, 4), (8, 1), (10, 1), (10, 5), (11, 5)],
    &[(0, 6), (1, 6), (1, 7)],
    &[(1, 8), (1, 10), (4, 10), (4, 11)],
    &[(1, 7), (2, 7), (2, 8), (1, 8)],
    &[(6, 11), (6, 10), (7, 10)],
    &[(8, 10), (10, 10), (10, 7), (11, 7)],
    &[(7, 10), (7, 9), (8, 9), (8, 10)],
    &[(5, 6), (6, 6), (6, 7), (5, 7), (5, 6)],
    // stubs on the frame border beside each exit
    &[(0, 4), (0, 6)],
    &[(11, 5), (11, 7)],
    &[(4, 11), (6, 11)],
];

pub const PLUS_CELLS: [Cell; 3] = [Cell::new(1, 7), Cell::new(7, 9), Cell::new(7, 3)];
pub const QUESTION_CELLS: [Cell; 6] =
    [Cell::new(0, 6), Cell::new(0, 3), Cell::new(10, 4), Cell::new(10, 7), Cell::new(6, 10), Cell::new(3, 10)];
pub const ONE_CELL: Cell = Cell::new(5, 6);

/// Waypoints of the drawn traversals; consecutive waypoints share a row or column.
const PATH_W_N: &[(i32, i32)] = &[
    (0, 5), (0, 4), (1, 4), (1, 1), (2, 1), (2, 5), (1, 5), (1, 6), (2, 6), (2, 8), (1, 8), (1, 9), (3, 9), (3, 6),
    (3, 5), (3, 4), (5, 4), (5, 3), (6, 3), (6, 4), (8, 4), (8, 1), (9, 1), (9, 5), (10, 5), (10, 6), (8, 6), (8, 5),
    (4, 5), (4, 6), (4, 8), (5, 8), (5, 7), (6, 7), (6, 6), (7, 6), (7, 7), (9, 7), (9, 9), (8, 9), (8, 8), (6, 8),
    (6, 9), (4, 9), (4, 10), (5, 10),
];
const PATH_N_E: &[(i32, i32)] = &[
    (5, 10), (4, 10), (4, 9), (6, 9), (6, 8), (8, 8), (8, 9), (9, 9), (9, 7), (8, 7), (8, 5), (6, 5), (6, 6), (7, 6),
    (7, 7), (5, 7), (5, 8), (4, 8), (4, 6), (3, 6), (3, 9), (1, 9), (1, 8), (2, 8), (2, 6), (1, 6), (1, 5), (0, 5),
    (0, 4), (1, 4), (1, 1), (2, 1), (2, 5), (3, 5), (3, 4), (4, 4), (4, 5), (5, 5), (5, 3), (6, 3), (6, 4), (8, 4),
    (8, 1), (9, 1), (9, 6), (10, 6), (10, 5),
];
const PATH_W_E: &[(i32, i32)] = &[
    (0, 5), (0, 4), (1, 4), (1, 1), (2, 1), (2, 5), (1, 5), (1, 6), (2, 6), (2, 8), (1, 8), (1, 9), (3, 9), (3, 6),
    (4, 6), (4, 7), (5, 7), (5, 8), (4, 8), (4, 10), (5, 10), (5, 9), (6, 9), (6, 7), (7, 7), (7, 8), (8, 8), (8, 9),
    (9, 9), (9, 7), (8, 7), (8, 5), (7, 5), (7, 6), (6, 6), (6, 5), (5, 5), (3, 5), (3, 4), (5, 4), (5, 3), (6, 3),
    (6, 4), (8, 4), (8, 1), (9, 1), (9, 6), (10, 6), (10, 5),
];

pub fn boundary() -> BoundaryEdgeSet {
    let mut b = BoundaryEdgeSet::new();
    for p in POLYLINES {
        b.add_polyline(p);
    }
    b
}

pub fn exit_cell(side: Direction) -> Option<Cell> {
    match side {
        Direction::W => Some(Cell::new(0, 5)),
        Direction::E => Some(Cell::new(10, 5)),
        Direction::N => Some(Cell::new(5, 10)),
        Direction::S => None,
    }
}

pub(crate) fn expand_waypoints(points: &[(i32, i32)]) -> Vec<Cell> {
    let mut cells = vec![Cell::new(points[0].0, points[0].1)];
    for w in points.windows(2) {
        let (mut p, q) = (w[0], w[1]);
        assert!(p.0 == q.0 || p.1 == q.1, "diagonal waypoint step {p:?} -> {q:?}");
        while p != q {
            p = (p.0 + (q.0 - p.0).signum(), p.1 + (q.1 - p.1).signum());
            cells.push(Cell::new(p.0, p.1));
        }
    }
    cells
}

/// One traversal per exit pair, running from `pair.first()` to `pair.second()`.
pub fn path_table() -> BTreeMap<ExitPair, Vec<Cell>> {
    let mut t = BTreeMap::new();
    let mut put = |a, b, pts: &[(i32, i32)]| {
        let mut cells = expand_waypoints(pts);
        let pair = ExitPair::new(a, b).unwrap();
        if pair.first() != a {
            cells.reverse();
        }
        t.insert(pair, cells);
    };
    put(Direction::W, Direction::N, PATH_W_N);
    put(Direction::N, Direction::E, PATH_N_E);
    put(Direction::W, Direction::E, PATH_W_E);
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::regions_from_boundaries;

    fn frame() -> crate::regions::RegionDecomposition {
        regions_from_boundaries(AON_SIZE, AON_SIZE, &boundary())
    }

    #[test]
    fn part_sizes() {
        let r = frame();
        let mut sizes: Vec<usize> = r.regions().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 9, 9, 31, 71]);
        assert_eq!(r.cells(r.region(ONE_CELL)).len(), 1);
    }

    #[test]
    fn exits_share_the_big_region_and_the_midline() {
        let r = frame();
        let big = r.region(exit_cell(Direction::W).unwrap());
        for d in [Direction::E, Direction::N] {
            assert_eq!(r.region(exit_cell(d).unwrap()), big);
            assert_eq!(exit_cell(d), Some(crate::geom::midline_cell(AON_SIZE, d)));
        }
        assert_eq!(r.cells(big).len(), 71);
    }

    #[test]
    fn markers_sit_in_foundational_parts() {
        let r = frame();
        let big = r.region(Cell::new(0, 5));
        for c in PLUS_CELLS.iter().chain(QUESTION_CELLS.iter()) {
            let id = r.region(*c);
            assert_ne!(id, big);
            assert_ne!(id, r.region(ONE_CELL));
            assert!(r.leaves(id).contains(c), "{c} should be a leaf in isolation");
        }
    }

    #[test]
    fn drawn_paths_cover_the_big_region() {
        let r = frame();
        let big = r.region(Cell::new(0, 5));
        for (pair, cells) in path_table() {
            assert_eq!(cells.first(), exit_cell(pair.first()).as_ref());
            assert_eq!(cells.last(), exit_cell(pair.second()).as_ref());
            let mut sorted = cells.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), cells.len(), "{pair} repeats a cell");
            assert_eq!(sorted, r.cells(big), "{pair}");
            assert!(cells.windows(2).all(|w| w[0].is_adjacent(w[1])));
        }
    }
}
