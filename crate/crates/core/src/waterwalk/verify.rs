//! Rule checker for Water Walk.
//!
//! 1. Every numbered cell is on the loop.
//! 2. The run of consecutive ground cells through a numbered cell has exactly that length.
//! 3. No three consecutive water cells.
//!
//! Runs are taken cyclically along the loop.

use std::collections::BTreeMap;
use std::fmt;

use super::instance::{Terrain, WwInstance};
use crate::geom::Cell;
use crate::loops::{loop_runs, LoopPath};
use crate::verdict::{RuleTagged, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WwViolation {
    /// Rule 1.
    NumberUnvisited { cell: Cell },
    /// Rule 2.
    RunLength { cell: Cell, number: u8, run: usize },
    /// Rule 3: a water run of `len >= 3` starting at `start`.
    WaterRun { start: Cell, len: usize },
}

impl RuleTagged for WwViolation {
    fn rule(&self) -> u8 {
        match self {
            WwViolation::NumberUnvisited { .. } => 1,
            WwViolation::RunLength { .. } => 2,
            WwViolation::WaterRun { .. } => 3,
        }
    }
}

impl fmt::Display for WwViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WwViolation::NumberUnvisited { cell } => write!(f, "rule 1: numbered cell {cell} is not on the loop"),
            WwViolation::RunLength { cell, number, run } => {
                write!(f, "rule 2: ground run through {cell} has length {run}, expected {number}")
            }
            WwViolation::WaterRun { start, len } => write!(f, "rule 3: {len} consecutive water cells from {start}"),
        }
    }
}

pub type WwVerdict = Verdict<WwViolation>;

pub fn verify_ww(inst: &WwInstance, cells: &[Cell]) -> WwVerdict {
    let l = match LoopPath::new(cells.to_vec()) {
        Ok(l) => l,
        Err(e) => return Verdict::Malformed(e),
    };
    if let Err(e) = l.check_on_board(inst.width(), inst.height()) {
        return Verdict::Malformed(e);
    }
    Verdict::from_violations(ww_violations(inst, &l))
}

pub(crate) fn ww_violations(inst: &WwInstance, l: &LoopPath) -> Vec<WwViolation> {
    let mut out = Vec::new();
    let runs = loop_runs(l, |c| inst.terrain(c));
    // start offset of each run within the loop
    let n = l.len();
    let first = (0..n)
        .find(|&i| inst.terrain(l.cells()[i]) != inst.terrain(l.cells()[(i + n - 1) % n]))
        .unwrap_or(0);
    let mut run_of: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut pos = first;
    for (label, len) in &runs {
        let start = l.cells()[pos];
        if *label == Terrain::Water && *len >= 3 {
            out.push(WwViolation::WaterRun { start, len: *len });
        }
        for k in 0..*len {
            run_of.insert(l.cells()[(pos + k) % n], *len);
        }
        pos = (pos + len) % n;
    }
    for c in inst.numbered_cells() {
        let number = inst.number(c).unwrap();
        match run_of.get(&c) {
            None => out.push(WwViolation::NumberUnvisited { cell: c }),
            Some(&run) if run != number as usize => out.push(WwViolation::RunLength { cell: c, number, run }),
            Some(_) => {}
        }
    }
    out
}
