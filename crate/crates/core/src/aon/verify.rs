//! Rule checker for All or Nothing.
//!
//! 1. A visited region has all of its cells on the loop.
//! 2. The loop enters and leaves each region at most once.
//! 3. No two unvisited regions are orthogonally adjacent.

use std::collections::BTreeSet;
use std::fmt;

use super::instance::AonInstance;
use crate::geom::Cell;
use crate::loops::LoopPath;
use crate::regions::boundary_crossings;
use crate::verdict::{RuleTagged, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AonViolation {
    /// Rule 1: region partly visited; `missing` is its first unvisited cell.
    PartialRegion { region: usize, missing: Cell },
    /// Rule 2: region entered more than once.
    RepeatedEntry { region: usize, crossings: usize },
    /// Rule 3: two unvisited regions touch across `cells`.
    AdjacentUnvisited { regions: (usize, usize), cells: (Cell, Cell) },
}

impl RuleTagged for AonViolation {
    fn rule(&self) -> u8 {
        match self {
            AonViolation::PartialRegion { .. } => 1,
            AonViolation::RepeatedEntry { .. } => 2,
            AonViolation::AdjacentUnvisited { .. } => 3,
        }
    }
}

impl fmt::Display for AonViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AonViolation::PartialRegion { region, missing } => {
                write!(f, "rule 1: region {region} is visited but cell {missing} is not")
            }
            AonViolation::RepeatedEntry { region, crossings } => {
                write!(f, "rule 2: region {region} has {crossings} boundary crossings")
            }
            AonViolation::AdjacentUnvisited { regions, cells } => write!(
                f,
                "rule 3: unvisited regions {} and {} touch at {} {}",
                regions.0, regions.1, cells.0, cells.1
            ),
        }
    }
}

pub type AonVerdict = Verdict<AonViolation>;

pub fn verify_aon(inst: &AonInstance, cells: &[Cell]) -> AonVerdict {
    let l = match LoopPath::new(cells.to_vec()) {
        Ok(l) => l,
        Err(e) => return Verdict::Malformed(e),
    };
    if let Err(e) = l.check_on_board(inst.width(), inst.height()) {
        return Verdict::Malformed(e);
    }
    Verdict::from_violations(aon_violations(inst, &l))
}

pub(crate) fn aon_violations(inst: &AonInstance, l: &LoopPath) -> Vec<AonViolation> {
    let r = inst.regions();
    let on_loop: BTreeSet<Cell> = l.cells().iter().copied().collect();
    let mut out = Vec::new();
    let mut visited = vec![false; r.len()];
    for &c in l.cells() {
        visited[r.region(c)] = true;
    }
    for (id, cells) in r.regions().enumerate() {
        if !visited[id] {
            continue;
        }
        if let Some(&missing) = cells.iter().find(|c| !on_loop.contains(c)) {
            out.push(AonViolation::PartialRegion { region: id, missing });
        }
        let crossings = boundary_crossings(l, r, id).expect("region ids come from the decomposition");
        if crossings > 2 {
            out.push(AonViolation::RepeatedEntry { region: id, crossings });
        }
    }
    let mut reported = BTreeSet::new();
    for c in r.all_cells() {
        let a = r.region(c);
        if visited[a] {
            continue;
        }
        for n in [c.offset(1, 0), c.offset(0, 1)] {
            if let Some(b) = r.region_at(n) {
                if a != b && !visited[b] && reported.insert((a.min(b), a.max(b))) {
                    out.push(AonViolation::AdjacentUnvisited { regions: (a.min(b), a.max(b)), cells: (c, n) });
                }
            }
        }
    }
    out
}
