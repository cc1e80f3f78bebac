//! Reading a Hamiltonian cycle off a puzzle loop.

use std::collections::BTreeMap;

use super::PuzzleKind;
use crate::error::LiftError;
use crate::framework::ExitPlan;
use crate::geom::Cell;
use crate::graph::GridGraph;
use crate::ham::HamCycle;
use crate::loops::LoopPath;

/// Map a loop on the compiled board back to a cycle of `g`.
///
/// Every metacell must be crossed exactly twice, each crossing must join the
/// midline exit cells of two mutual exits, and the order in which the loop
/// visits the metacells must be a Hamiltonian cycle of `g`.
pub fn lift_solution(g: &GridGraph, plan: &ExitPlan, cells: &[Cell], kind: PuzzleKind) -> Result<HamCycle, LiftError> {
    let l = LoopPath::new(cells.to_vec())?;
    let prov = kind.provenance(plan);
    let size = kind.gadget_size();
    l.check_on_board(size * g.cols(), size * g.rows())?;
    let mut crossings: BTreeMap<Cell, usize> = g.vertices().map(|v| (v, 0)).collect();
    for (a, b) in l.steps() {
        let (va, vb) = (prov.metacell_of(a).unwrap(), prov.metacell_of(b).unwrap());
        if va == vb {
            continue;
        }
        let d = a.direction_to(b).expect("loop steps are adjacent");
        if a != prov.exit_cell(va, d) || b != prov.exit_cell(vb, d.opposite()) {
            return Err(LiftError::OffMidline(a, b));
        }
        if !plan.get(va).has_exit(d) || !plan.get(vb).has_exit(d.opposite()) {
            return Err(LiftError::NonMutual(a, b));
        }
        *crossings.get_mut(&va).unwrap() += 1;
        *crossings.get_mut(&vb).unwrap() += 1;
    }
    if let Some((&vertex, &count)) = crossings.iter().find(|(_, &k)| k != 2) {
        return Err(LiftError::CrossingCount { vertex, count });
    }
    let mut order: Vec<Cell> = Vec::new();
    for &c in l.cells() {
        let v = prov.metacell_of(c).unwrap();
        if order.last() != Some(&v) {
            order.push(v);
        }
    }
    if order.len() > 1 && order.first() == order.last() {
        order.pop();
    }
    Ok(HamCycle::new(g, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::{plan_for, SeedRule};
    use crate::ham::{find_hamiltonian_cycle, HamSearch};
    use crate::lab::embed::embed_cycle;

    #[test]
    fn roundtrip_on_the_square() {
        let g = GridGraph::full(2, 2).unwrap();
        let plan = plan_for(&g, SeedRule::LexMinTail).unwrap();
        let HamSearch::Found(c) = find_hamiltonian_cycle(&g, 1000) else { panic!() };
        for kind in PuzzleKind::ALL {
            let w = embed_cycle(&g, &plan, &c, kind).unwrap();
            let back = lift_solution(&g, &plan, w.loop_path.cells(), kind).unwrap();
            assert!(back.same_cycle(&c));
        }
    }

    #[test]
    fn off_midline_crossing_fails() {
        let g = GridGraph::full(2, 2).unwrap();
        let plan = plan_for(&g, SeedRule::LexMinTail).unwrap();
        // a ring through the four corners of the 10x10 board's centre, away from midlines
        let mut cells = Vec::new();
        for x in 3..7 {
            cells.push(Cell::new(x, 3));
        }
        for y in 4..7 {
            cells.push(Cell::new(6, y));
        }
        for x in (3..6).rev() {
            cells.push(Cell::new(x, 6));
        }
        for y in (4..6).rev() {
            cells.push(Cell::new(3, y));
        }
        assert!(matches!(lift_solution(&g, &plan, &cells, PuzzleKind::Ww), Err(LiftError::OffMidline(..))));
    }

    #[test]
    fn loop_inside_one_metacell_fails() {
        let g = GridGraph::full(2, 2).unwrap();
        let plan = plan_for(&g, SeedRule::LexMinTail).unwrap();
        let cells = [Cell::new(1, 1), Cell::new(2, 1), Cell::new(2, 2), Cell::new(1, 2)];
        assert!(matches!(
            lift_solution(&g, &plan, &cells, PuzzleKind::Ww),
            Err(LiftError::CrossingCount { count: 0, .. })
        ));
    }
}
