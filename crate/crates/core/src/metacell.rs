//! Placement of square gadgets on the compiled board.

use std::collections::BTreeMap;

use crate::error::CompileError;
use crate::framework::ExitPlan;
use crate::geom::{midline_cell, rotate_cell_unchecked, Cell, Direction, Rotation};
use crate::graph::{GridGraph, Vertex};

/// Which metacell sits where: vertex `(i, j)` occupies the frame whose
/// lower-left cell is `(size * i, size * j)`, rotated by its plan rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    size: i32,
    cols: i32,
    rows: i32,
    rotations: BTreeMap<Vertex, Rotation>,
}

impl Provenance {
    pub fn new(size: i32, plan: &ExitPlan, canonical_non_exit: Direction) -> Provenance {
        let rotations = plan.iter().map(|(v, p)| (v, p.rotation_for(canonical_non_exit))).collect();
        Provenance { size, cols: plan.cols(), rows: plan.rows(), rotations }
    }

    pub fn size(&self) -> i32 {
        self.size
    }

    pub fn cols(&self) -> i32 {
        self.cols
    }

    pub fn rows(&self) -> i32 {
        self.rows
    }

    pub fn rotation(&self, v: Vertex) -> Rotation {
        self.rotations[&v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.rotations.keys().copied()
    }

    pub fn origin(&self, v: Vertex) -> Cell {
        Cell::new(self.size * v.x, self.size * v.y)
    }

    /// Board cell of canonical-frame cell `local` in metacell `v`.
    pub fn to_global(&self, v: Vertex, local: Cell) -> Cell {
        let r = rotate_cell_unchecked(self.size, self.rotation(v), local);
        let o = self.origin(v);
        Cell::new(o.x + r.x, o.y + r.y)
    }

    /// Metacell owning a board cell.
    pub fn metacell_of(&self, c: Cell) -> Option<Vertex> {
        let v = Cell::new(c.x.div_euclid(self.size), c.y.div_euclid(self.size));
        (c.x >= 0 && c.y >= 0 && v.in_bounds(self.cols, self.rows)).then_some(v)
    }

    /// Frame-relative position of a board cell, before undoing rotation.
    pub fn frame_offset(&self, c: Cell) -> Option<(Vertex, Cell)> {
        let v = self.metacell_of(c)?;
        let o = self.origin(v);
        Some((v, Cell::new(c.x - o.x, c.y - o.y)))
    }

    /// Canonical-frame position of a board cell.
    pub fn to_local(&self, c: Cell) -> Option<(Vertex, Cell)> {
        let (v, off) = self.frame_offset(c)?;
        Some((v, rotate_cell_unchecked(self.size, self.rotation(v).inverse(), off)))
    }

    /// Board cell at the midline of side `side` of metacell `v`.
    pub fn exit_cell(&self, v: Vertex, side: Direction) -> Cell {
        let o = self.origin(v);
        let m = midline_cell(self.size, side);
        Cell::new(o.x + m.x, o.y + m.y)
    }
}

/// Checks shared by both compilers: matching sizes, an exit toward every
/// graph edge, and exit cells lined up across every shared border.
pub(crate) fn check_plan(
    g: &GridGraph,
    plan: &ExitPlan,
    size: i32,
    exit_cell: impl Fn(Vertex, Direction) -> Cell,
) -> Result<(), CompileError> {
    if (g.cols(), g.rows()) != (plan.cols(), plan.rows()) {
        return Err(CompileError::SizeMismatch {
            cols: g.cols(),
            rows: g.rows(),
            plan_cols: plan.cols(),
            plan_rows: plan.rows(),
        });
    }
    for v in g.vertices() {
        for side in g.edge_directions(v) {
            if !plan.get(v).has_exit(side) {
                return Err(CompileError::MissingExit { vertex: v, side });
            }
        }
        for side in [Direction::E, Direction::N] {
            let u = v.step(side);
            if !g.contains(u) || !plan.get(v).has_exit(side) || !plan.get(u).has_exit(side.opposite()) {
                continue;
            }
            let (a, b) = (exit_cell(v, side), exit_cell(u, side.opposite()));
            let (ao, bo) = (Cell::new(size * v.x, size * v.y), Cell::new(size * u.x, size * u.y));
            let on_border = |c: Cell, o: Cell, d: Direction| match d {
                Direction::E => c.x == o.x + size - 1,
                Direction::W => c.x == o.x,
                Direction::N => c.y == o.y + size - 1,
                Direction::S => c.y == o.y,
            };
            if a.step(side) != b || !on_border(a, ao, side) || !on_border(b, bo, side.opposite()) {
                return Err(CompileError::Misaligned(v, u));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::{plan_for, SeedRule};

    #[test]
    fn local_global_roundtrip() {
        let g = GridGraph::full(2, 2).unwrap();
        let plan = plan_for(&g, SeedRule::LexMinTail).unwrap();
        let p = Provenance::new(11, &plan, Direction::S);
        for v in p.vertices().collect::<Vec<_>>() {
            for x in 0..11 {
                for y in 0..11 {
                    let l = Cell::new(x, y);
                    assert_eq!(p.to_local(p.to_global(v, l)), Some((v, l)));
                }
            }
        }
        assert_eq!(p.metacell_of(Cell::new(21, 11)), Some(Cell::new(1, 1)));
        assert_eq!(p.metacell_of(Cell::new(22, 0)), None);
        assert_eq!(p.metacell_of(Cell::new(-1, 0)), None);
    }

    #[test]
    fn canonical_non_exit_lands_on_plan_non_exit() {
        let g = GridGraph::full(2, 2).unwrap();
        let plan = plan_for(&g, SeedRule::LexMinTail).unwrap();
        let p = Provenance::new(5, &plan, Direction::W);
        for (v, vp) in plan.iter() {
            let canon_mid = midline_cell(5, Direction::W);
            assert_eq!(p.to_global(v, canon_mid), p.exit_cell(v, vp.non_exit));
        }
    }
}
