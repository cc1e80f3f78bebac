//! Turning a Hamiltonian cycle into a puzzle loop through canonical local paths.

use std::collections::BTreeMap;

use super::PuzzleKind;
use crate::aon::gadget as aon_gadget;
use crate::error::EmbedError;
use crate::framework::ExitPlan;
use crate::geom::{Cell, Direction, ExitPair};
use crate::graph::{GridGraph, Vertex};
use crate::ham::HamCycle;
use crate::loops::LoopPath;
use crate::waterwalk::gadget as ww_gadget;

/// One canonical-frame path per exit pair, running from `pair.first()` to `pair.second()`.
pub type PathTable = BTreeMap<ExitPair, Vec<Cell>>;

pub fn canonical_table(kind: PuzzleKind) -> PathTable {
    match kind {
        PuzzleKind::Aon => aon_gadget::path_table(),
        PuzzleKind::Ww => ww_gadget::canonical_paths(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraversalWitness {
    pub cycle: HamCycle,
    /// `(vertex, entry side, exit side)` in cycle order.
    pub sides: Vec<(Vertex, Direction, Direction)>,
    pub loop_path: LoopPath,
}

pub fn embed_cycle(g: &GridGraph, plan: &ExitPlan, c: &HamCycle, kind: PuzzleKind) -> Result<TraversalWitness, EmbedError> {
    embed_cycle_with(g, plan, c, kind, &canonical_table(kind))
}

pub fn embed_cycle_with(
    g: &GridGraph,
    plan: &ExitPlan,
    c: &HamCycle,
    kind: PuzzleKind,
    table: &PathTable,
) -> Result<TraversalWitness, EmbedError> {
    // same checks the compilers run
    kind.compile(g, plan)?;
    let prov = kind.provenance(plan);
    let vs = c.vertices();
    let n = vs.len();
    let mut sides = Vec::with_capacity(n);
    let mut cells = Vec::new();
    for i in 0..n {
        let v = vs[i];
        let entry = v.direction_to(vs[(i + n - 1) % n]).expect("cycle neighbours are grid-adjacent");
        let exit = v.direction_to(vs[(i + 1) % n]).expect("cycle neighbours are grid-adjacent");
        for side in [entry, exit] {
            if !plan.get(v).has_exit(side) {
                return Err(EmbedError::NotAnExit { vertex: v, side });
            }
        }
        let back = prov.rotation(v).inverse();
        let (ce, cx) = (entry.rotate(back), exit.rotate(back));
        let pair = ExitPair::new(ce, cx).expect("entry and exit sides differ");
        let local = table.get(&pair).ok_or(EmbedError::MissingPath { vertex: v, pair })?;
        let forward = pair.first() == ce;
        let ordered: Box<dyn Iterator<Item = &Cell>> = if forward { Box::new(local.iter()) } else { Box::new(local.iter().rev()) };
        cells.extend(ordered.map(|&l| prov.to_global(v, l)));
        sides.push((v, entry, exit));
    }
    let loop_path = LoopPath::new(cells)?;
    Ok(TraversalWitness { cycle: c.clone(), sides, loop_path })
}
