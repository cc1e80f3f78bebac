//! The 5x5 Water Walk T-metacell in canonical orientation (non-exit side W).

use std::collections::BTreeMap;

use crate::geom::{Cell, Direction, ExitPair};

pub const WW_SIZE: i32 = 5;
pub const WW_NON_EXIT: Direction = Direction::W;

pub const GROUND: [Cell; 4] = [Cell::new(2, 1), Cell::new(2, 2), Cell::new(2, 3), Cell::new(3, 2)];
pub const NUMBER_CELL: Cell = Cell::new(2, 2);
pub const NUMBER: u8 = 3;

pub fn exit_cell(side: Direction) -> Option<Cell> {
    match side {
        Direction::S => Some(Cell::new(2, 0)),
        Direction::N => Some(Cell::new(2, 4)),
        Direction::E => Some(Cell::new(4, 2)),
        Direction::W => None,
    }
}

fn cells(points: &[(i32, i32)]) -> Vec<Cell> {
    points.iter().map(|&(x, y)| Cell::new(x, y)).collect()
}

fn mirror(path: &[Cell]) -> Vec<Cell> {
    path.iter().map(|c| Cell::new(c.x, WW_SIZE - 1 - c.y)).collect()
}

/// Every traversal per exit pair, each from `pair.first()` to `pair.second()`;
/// the first entry of each list is the one used for embedding.
pub fn path_table() -> BTreeMap<ExitPair, Vec<Vec<Cell>>> {
    let s_e = vec![
        cells(&[(2, 0), (2, 1), (2, 2), (3, 2), (4, 2)]),
        cells(&[(2, 0), (2, 1), (2, 2), (2, 3), (3, 3), (3, 2), (4, 2)]),
    ];
    let s_n = vec![
        cells(&[(2, 0), (2, 1), (2, 2), (2, 3), (2, 4)]),
        cells(&[(2, 0), (2, 1), (3, 1), (3, 2), (2, 2), (2, 3), (2, 4)]),
        cells(&[(2, 0), (2, 1), (2, 2), (3, 2), (3, 3), (2, 3), (2, 4)]),
    ];
    let n_e = s_e.iter().map(|p| mirror(p)).collect();
    BTreeMap::from([
        (ExitPair::new(Direction::S, Direction::E).unwrap(), s_e),
        (ExitPair::new(Direction::S, Direction::N).unwrap(), s_n),
        (ExitPair::new(Direction::N, Direction::E).unwrap(), n_e),
    ])
}

/// The embedding path for each exit pair.
pub fn canonical_paths() -> BTreeMap<ExitPair, Vec<Cell>> {
    path_table().into_iter().map(|(k, v)| (k, v[0].clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::midline_cell;

    #[test]
    fn exits_are_water_facing_ground() {
        for d in [Direction::S, Direction::N, Direction::E] {
            let e = exit_cell(d).unwrap();
            assert_eq!(e, midline_cell(WW_SIZE, d));
            assert!(!GROUND.contains(&e));
            assert!(GROUND.contains(&e.step(d.opposite())));
        }
        assert!(GROUND.contains(&NUMBER_CELL));
    }

    #[test]
    fn table_shape() {
        let t = path_table();
        for (pair, paths) in &t {
            assert_eq!(paths.len(), if pair.is_opposite() { 3 } else { 2 });
            for p in paths {
                assert_eq!(p.first(), exit_cell(pair.first()).as_ref());
                assert_eq!(p.last(), exit_cell(pair.second()).as_ref());
                assert!(p.windows(2).all(|w| w[0].is_adjacent(w[1])));
                assert!(p.contains(&NUMBER_CELL));
            }
        }
    }
}
