//! Regions that no valid loop can visit.
//!
//! Two sufficient conditions are recognised. A region with three or more
//! leaves is dead: every leaf on the loop forces a boundary crossing, and a
//! region allows only two. A region whose outside neighbours all belong to
//! a single region `E` is dead when some pair of adjacent cells in two other
//! regions exists: the loop would have to stay inside `E` and the region,
//! leaving those two neighbours unvisited.

use std::collections::BTreeSet;

use super::instance::AonInstance;
use crate::geom::Cell;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionStatus {
    /// The big region of a compiled metacell.
    Big,
    DeadByEnclosure { encloser: usize },
    DeadByLeafRich,
    Unknown,
}

impl RegionStatus {
    pub fn is_dead(self) -> bool {
        matches!(self, RegionStatus::DeadByEnclosure { .. } | RegionStatus::DeadByLeafRich)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionReport {
    pub status: RegionStatus,
    pub leaves: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeadRegionReport {
    pub regions: Vec<RegionReport>,
}

impl DeadRegionReport {
    pub fn status(&self, id: usize) -> RegionStatus {
        self.regions[id].status
    }

    pub fn dead_regions(&self) -> impl Iterator<Item = usize> + '_ {
        self.regions.iter().enumerate().filter(|(_, r)| r.status.is_dead()).map(|(i, _)| i)
    }

    /// Pairs of dead regions sharing a unit edge.
    pub fn adjacent_dead_pairs(&self, inst: &AonInstance) -> Vec<(usize, usize)> {
        let r = inst.regions();
        let mut out = BTreeSet::new();
        for c in r.all_cells() {
            for n in [c.offset(1, 0), c.offset(0, 1)] {
                if let Some(b) = r.region_at(n) {
                    let a = r.region(c);
                    if a != b && self.status(a).is_dead() && self.status(b).is_dead() {
                        out.insert((a.min(b), a.max(b)));
                    }
                }
            }
        }
        out.into_iter().collect()
    }
}

pub fn analyze_dead_regions(inst: &AonInstance) -> DeadRegionReport {
    let r = inst.regions();
    let adjacent_pairs: Vec<(usize, usize)> = r
        .all_cells()
        .flat_map(|c| [c.offset(1, 0), c.offset(0, 1)].map(|n| (c, n)))
        .filter_map(|(c, n)| r.region_at(n).map(|b| (r.region(c), b)))
        .filter(|(a, b)| a != b)
        .collect();
    let exit_regions: BTreeSet<usize> = match inst.provenance() {
        Some(p) => p
            .vertices()
            .flat_map(|v| crate::geom::Direction::ALL.map(|d| p.exit_cell(v, d)))
            .filter(|&c| is_exit_cell(inst, c))
            .map(|c| r.region(c))
            .collect(),
        None => BTreeSet::new(),
    };
    let regions = (0..r.len())
        .map(|id| {
            let leaves = r.leaves(id).len();
            let neighbours = r.neighbors_of(id);
            let status = if leaves >= 3 {
                RegionStatus::DeadByLeafRich
            } else if neighbours.len() == 1 {
                let e = *neighbours.iter().next().unwrap();
                let blocked = adjacent_pairs.iter().any(|&(a, b)| ![id, e].contains(&a) && ![id, e].contains(&b));
                if blocked {
                    RegionStatus::DeadByEnclosure { encloser: e }
                } else if exit_regions.contains(&id) {
                    RegionStatus::Big
                } else {
                    RegionStatus::Unknown
                }
            } else if exit_regions.contains(&id) {
                RegionStatus::Big
            } else {
                RegionStatus::Unknown
            };
            RegionReport { status, leaves }
        })
        .collect();
    DeadRegionReport { regions }
}

/// Whether a midline cell of a compiled board lies in a metacell's big region,
/// i.e. sits on an exit side of that metacell.
fn is_exit_cell(inst: &AonInstance, c: Cell) -> bool {
    let Some(p) = inst.provenance() else { return false };
    match p.to_local(c) {
        Some((_, local)) => crate::geom::Direction::ALL
            .into_iter()
            .any(|d| super::gadget::exit_cell(d) == Some(local)),
        None => false,
    }
}
