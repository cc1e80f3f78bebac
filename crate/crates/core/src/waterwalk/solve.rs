//! Backtracking solver for Water Walk.
//!
//! The loop grows from its smallest numbered cell (or, on boards without
//! numbers, from each cell in turn as the loop's smallest cell). Water runs
//! are capped at two as the path grows, a ground run is cut off as soon as
//! it cannot match its number, and every unvisited numbered cell must stay
//! reachable from the head.

use std::collections::{BTreeSet, VecDeque};
use std::ops::ControlFlow;

use super::instance::WwInstance;
use super::verify::ww_violations;
use crate::geom::Cell;
use crate::loops::LoopPath;
use crate::search::{Budget, SearchStatus, SolveMode, SolveResult};

struct Search<'a> {
    inst: &'a WwInstance,
    start: Cell,
    allowed: Box<dyn Fn(Cell) -> bool + 'a>,
    visited: BTreeSet<Cell>,
    path: Vec<Cell>,
    numbered: Vec<Cell>,
    found: &'a mut BTreeSet<Vec<Cell>>,
    cap: usize,
}

/// Run state after the head cell.
#[derive(Clone, Copy)]
struct Runs {
    water: usize,
    ground: usize,
    need: Option<u8>,
    /// Still inside the run that began at the start cell; it may wrap.
    opening: bool,
}

impl Search<'_> {
    fn step_runs(&self, r: Runs, c: Cell) -> Option<Runs> {
        if self.inst.is_ground(c) {
            let ground = if r.ground > 0 || r.water == 0 { r.ground + 1 } else { 1 };
            let need = match (r.need, self.inst.number(c)) {
                (Some(a), Some(b)) if a != b => return None,
                (a, b) => if r.ground > 0 { a.or(b) } else { b },
            };
            if need.is_some_and(|n| ground > n as usize) {
                return None;
            }
            Some(Runs { water: 0, ground, need, opening: r.opening && r.water == 0 })
        } else {
            if r.ground > 0 && !r.opening {
                if let Some(n) = r.need {
                    if r.ground != n as usize {
                        return None;
                    }
                }
            }
            let water = r.water + 1;
            if water > 2 {
                return None;
            }
            Some(Runs { water, ground: 0, need: None, opening: false })
        }
    }

    fn reachable(&self, head: Cell) -> bool {
        let mut seen = BTreeSet::from([head]);
        let mut queue = VecDeque::from([head]);
        let mut start_seen = false;
        while let Some(c) = queue.pop_front() {
            for nb in c.neighbors() {
                if nb == self.start {
                    start_seen = true;
                }
                if nb.in_bounds(self.inst.width(), self.inst.height())
                    && (self.allowed)(nb)
                    && !self.visited.contains(&nb)
                    && seen.insert(nb)
                {
                    queue.push_back(nb);
                }
            }
        }
        start_seen && self.numbered.iter().all(|c| self.visited.contains(c) || seen.contains(c))
    }

    fn dfs(&mut self, runs: Runs, budget: &mut Budget) -> ControlFlow<SearchStatus> {
        if !budget.tick() {
            return ControlFlow::Break(SearchStatus::BudgetExhausted);
        }
        let head = *self.path.last().unwrap();
        if self.path.len() >= 4 && head.is_adjacent(self.start) && self.numbered.iter().all(|c| self.visited.contains(c)) {
            let l = LoopPath::new(self.path.clone()).expect("search keeps cells distinct and adjacent");
            if ww_violations(self.inst, &l).is_empty() && self.found.insert(l.canonical().cells().to_vec()) && self.found.len() >= self.cap {
                return ControlFlow::Break(SearchStatus::CapReached);
            }
        }
        for nb in head.neighbors() {
            if !nb.in_bounds(self.inst.width(), self.inst.height()) || !(self.allowed)(nb) || self.visited.contains(&nb) {
                continue;
            }
            let Some(next) = self.step_runs(runs, nb) else { continue };
            self.visited.insert(nb);
            self.path.push(nb);
            let r = if self.reachable(nb) { self.dfs(next, budget) } else { ControlFlow::Continue(()) };
            self.path.pop();
            self.visited.remove(&nb);
            r?;
        }
        ControlFlow::Continue(())
    }
}

pub fn solve_ww(inst: &WwInstance, mode: SolveMode, budget: u64) -> SolveResult {
    let mut budget = Budget::new(budget);
    let mut found = BTreeSet::new();
    let numbered = inst.numbered_cells();
    let starts: Vec<Cell> = match numbered.first() {
        Some(&s) => vec![s],
        None => {
            let mut all: Vec<Cell> = inst.cells().collect();
            all.sort();
            all
        }
    };
    let mut status = SearchStatus::Complete;
    for s in starts {
        let anchored = numbered.is_empty();
        let mut search = Search {
            inst,
            start: s,
            allowed: Box::new(move |c: Cell| !anchored || c > s),
            visited: BTreeSet::from([s]),
            path: vec![s],
            numbered: numbered.clone(),
            found: &mut found,
            cap: mode.cap(),
        };
        let init = if inst.is_ground(s) {
            Runs { water: 0, ground: 1, need: inst.number(s), opening: true }
        } else {
            Runs { water: 1, ground: 0, need: None, opening: true }
        };
        if let ControlFlow::Break(st) = search.dfs(init, &mut budget) {
            status = st;
            break;
        }
    }
    SolveResult {
        solutions: found.into_iter().map(|c| LoopPath::new(c).expect("verified loops are valid")).collect(),
        status,
        nodes: budget.nodes,
    }
}
