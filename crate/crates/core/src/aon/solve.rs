//! Backtracking solver for All or Nothing.
//!
//! The loop is grown one cell at a time from a cell `s` of an anchor region
//! toward a fixed final cell `p` outside it, so that `p -> s` closes the loop.
//! A step may leave a region only once all of its cells are on the path, and
//! may enter only a region never entered before; together these make rules 1
//! and 2 hold by construction. Rule 3 is checked on completed loops.
//!
//! Pruning, per step:
//! - the unvisited cells of the current region stay connected to the head;
//! - each unvisited cell of the current region keeps two usable neighbours
//!   inside it, except for at most one cell that can end the region's arc by
//!   stepping out;
//! - after a region change, `p` stays reachable.
//!
//! Cells of regions reported dead are excluded up front.

use std::collections::{BTreeSet, VecDeque};
use std::ops::ControlFlow;

use super::dead::analyze_dead_regions;
use super::instance::AonInstance;
use super::verify::aon_violations;
use crate::geom::Cell;
use crate::loops::LoopPath;
use crate::search::{Budget, SearchStatus, SolveMode, SolveResult};

#[derive(Clone, Copy, PartialEq, Eq)]
enum RegionState {
    Fresh,
    Active,
    Done,
}

/// Path search over one board with a fixed start and final cell.
pub(crate) struct Engine<'a> {
    region_of: Vec<usize>,
    region_cells: &'a [Vec<usize>],
    nbrs: Vec<Vec<usize>>,
    allowed: Vec<bool>,
    visited: Vec<bool>,
    remaining: Vec<usize>,
    state: Vec<RegionState>,
    path: Vec<usize>,
    end: usize,
    mark: Vec<u32>,
    stamp: u32,
}

/// Region layout in index form, shared by every engine run on a board.
pub(crate) struct Layout {
    pub w: i32,
    pub h: i32,
    pub region_of: Vec<usize>,
    pub region_cells: Vec<Vec<usize>>,
}

impl Layout {
    pub fn new(inst: &AonInstance) -> Layout {
        let (w, h) = (inst.width(), inst.height());
        let r = inst.regions();
        let mut region_of = vec![0; (w * h) as usize];
        let mut region_cells = vec![Vec::new(); r.len()];
        for y in 0..h {
            for x in 0..w {
                let id = r.region(Cell::new(x, y));
                let i = (y * w + x) as usize;
                region_of[i] = id;
                region_cells[id].push(i);
            }
        }
        Layout { w, h, region_of, region_cells }
    }

    pub fn index(&self, c: Cell) -> usize {
        (c.y * self.w + c.x) as usize
    }

    pub fn cell(&self, i: usize) -> Cell {
        Cell::new(i as i32 % self.w, i as i32 / self.w)
    }
}

impl<'a> Engine<'a> {
    pub fn new(layout: &'a Layout, allowed: Vec<bool>) -> Engine<'a> {
        let n = (layout.w * layout.h) as usize;
        let nbrs = (0..n)
            .map(|i| {
                let c = layout.cell(i);
                c.neighbors()
                    .into_iter()
                    .filter(|nb| nb.in_bounds(layout.w, layout.h))
                    .map(|nb| layout.index(nb))
                    .collect()
            })
            .collect();
        let remaining = layout.region_cells.iter().map(Vec::len).collect();
        Engine {
            region_of: layout.region_of.clone(),
            region_cells: &layout.region_cells,
            nbrs,
            allowed,
            visited: vec![false; n],
            remaining,
            state: vec![RegionState::Fresh; layout.region_cells.len()],
            path: Vec::new(),
            end: 0,
            mark: vec![0; n],
            stamp: 0,
        }
    }

    /// Enumerate paths `start .. end` satisfying the region discipline; each
    /// finished path (as cell indices) goes to `found`, which may stop the search.
    pub fn run(
        &mut self,
        start: usize,
        end: usize,
        budget: &mut Budget,
        found: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<Stop> {
        if !self.allowed[start] || !self.allowed[end] || start == end {
            return ControlFlow::Continue(());
        }
        self.end = end;
        self.path.clear();
        self.enter(start);
        let r = self.dfs(budget, found);
        self.leave(start);
        r
    }

    fn enter(&mut self, c: usize) {
        let rc = self.region_of[c];
        if let Some(&h) = self.path.last() {
            let rh = self.region_of[h];
            if rh != rc {
                self.state[rh] = RegionState::Done;
            }
        }
        self.visited[c] = true;
        self.remaining[rc] -= 1;
        self.state[rc] = RegionState::Active;
        self.path.push(c);
    }

    fn leave(&mut self, c: usize) {
        self.path.pop();
        let rc = self.region_of[c];
        self.visited[c] = false;
        self.remaining[rc] += 1;
        if self.remaining[rc] == self.region_cells[rc].len() {
            self.state[rc] = RegionState::Fresh;
        }
        if let Some(&h) = self.path.last() {
            self.state[self.region_of[h]] = RegionState::Active;
        }
    }

    fn can_step(&self, from: usize, to: usize) -> bool {
        if !self.allowed[to] || self.visited[to] {
            return false;
        }
        let (rf, rt) = (self.region_of[from], self.region_of[to]);
        if to == self.end {
            return self.remaining[rt] == 1 && (rf == rt || (self.remaining[rf] == 0 && self.state[rt] == RegionState::Fresh));
        }
        rf == rt || (self.remaining[rf] == 0 && self.state[rt] == RegionState::Fresh)
    }

    /// A cell from which the arc of its region could step out into a fresh region.
    fn has_exit(&self, c: usize) -> bool {
        let rc = self.region_of[c];
        self.nbrs[c].iter().any(|&nb| {
            let rn = self.region_of[nb];
            rn != rc && self.allowed[nb] && !self.visited[nb] && self.state[rn] == RegionState::Fresh
        })
    }

    fn region_ok(&mut self, head: usize) -> bool {
        let r = self.region_of[head];
        let end_region = self.region_of[self.end];
        if self.remaining[r] == 0 {
            return r == end_region || self.has_exit(head);
        }
        // connectivity of the unvisited rest through in-region steps
        self.stamp += 1;
        let stamp = self.stamp;
        let mut queue = VecDeque::from([head]);
        self.mark[head] = stamp;
        let mut reached = 0;
        while let Some(c) = queue.pop_front() {
            for i in 0..self.nbrs[c].len() {
                let nb = self.nbrs[c][i];
                if self.region_of[nb] == r && !self.visited[nb] && self.mark[nb] != stamp {
                    self.mark[nb] = stamp;
                    reached += 1;
                    queue.push_back(nb);
                }
            }
        }
        if reached != self.remaining[r] {
            return false;
        }
        let mut last_candidates = 0;
        let region_cells = self.region_cells;
        for &c in &region_cells[r] {
            if self.visited[c] {
                continue;
            }
            let usable = self.nbrs[c]
                .iter()
                .filter(|&&nb| self.region_of[nb] == r && (!self.visited[nb] || nb == head))
                .count();
            if c == self.end {
                if usable == 0 {
                    return false;
                }
                continue;
            }
            match usable {
                0 => return false,
                1 => {
                    if r == end_region || !self.has_exit(c) {
                        return false;
                    }
                    last_candidates += 1;
                    if last_candidates > 1 {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn end_reachable(&mut self, head: usize) -> bool {
        self.stamp += 1;
        let stamp = self.stamp;
        let mut queue = VecDeque::from([head]);
        self.mark[head] = stamp;
        let rh = self.region_of[head];
        while let Some(c) = queue.pop_front() {
            for i in 0..self.nbrs[c].len() {
                let nb = self.nbrs[c][i];
                let rn = self.region_of[nb];
                if nb == self.end && (rn == rh || self.state[rn] == RegionState::Fresh) {
                    return true;
                }
                let open = self.allowed[nb]
                    && !self.visited[nb]
                    && (rn == rh || self.state[rn] == RegionState::Fresh)
                    && self.mark[nb] != stamp;
                if open {
                    self.mark[nb] = stamp;
                    queue.push_back(nb);
                }
            }
        }
        false
    }

    fn dfs(&mut self, budget: &mut Budget, found: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<Stop> {
        if !budget.tick() {
            return ControlFlow::Break(Stop::Budget);
        }
        let head = *self.path.last().unwrap();
        for i in 0..self.nbrs[head].len() {
            let nb = self.nbrs[head][i];
            if !self.can_step(head, nb) {
                continue;
            }
            if nb == self.end {
                self.path.push(nb);
                let flow = found(&self.path);
                self.path.pop();
                if flow.is_break() {
                    return ControlFlow::Break(Stop::Enough);
                }
                continue;
            }
            let crossing = self.region_of[nb] != self.region_of[head];
            self.enter(nb);
            let ok = self.region_ok(nb) && (!crossing || self.end_reachable(nb));
            let r = if ok { self.dfs(budget, found) } else { ControlFlow::Continue(()) };
            self.leave(nb);
            r?;
        }
        ControlFlow::Continue(())
    }

}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Stop {
    Budget,
    Enough,
}

pub fn solve_aon(inst: &AonInstance, mode: SolveMode, budget: u64) -> SolveResult {
    let layout = Layout::new(inst);
    let report = analyze_dead_regions(inst);
    let r = inst.regions();
    let mut budget = Budget::new(budget);
    let mut found: BTreeSet<Vec<Cell>> = BTreeSet::new();
    let cap = mode.cap();
    let finish = |found: BTreeSet<Vec<Cell>>, status: SearchStatus, nodes| SolveResult {
        solutions: found.into_iter().map(|c| LoopPath::new(c).expect("solver emits valid loops")).collect(),
        status,
        nodes,
    };

    if !report.adjacent_dead_pairs(inst).is_empty() {
        return finish(found, SearchStatus::Complete, 0);
    }
    let dead: Vec<bool> = (0..r.len()).map(|id| report.status(id).is_dead()).collect();
    let live_cells = |forbidden: &dyn Fn(usize) -> bool| -> Vec<bool> {
        layout.region_of.iter().map(|&id| !dead[id] && !forbidden(id)).collect()
    };

    let record = |cells: &[usize], found: &mut BTreeSet<Vec<Cell>>| -> ControlFlow<()> {
        let loop_cells: Vec<Cell> = cells.iter().map(|&i| layout.cell(i)).collect();
        let l = LoopPath::new(loop_cells).expect("engine paths are simple and closed");
        if aon_violations(inst, &l).is_empty() {
            found.insert(l.canonical().cells().to_vec());
        }
        if found.len() >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };

    let mut jobs: Vec<(Vec<bool>, usize, usize)> = Vec::new();
    // loops inside a single region leave every other region unvisited
    let adjacent_pairs: BTreeSet<(usize, usize)> = r
        .all_cells()
        .flat_map(|c| [c.offset(1, 0), c.offset(0, 1)].map(|n| (c, n)))
        .filter_map(|(c, n)| r.region_at(n).map(|b| (r.region(c), b)))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    for (id, &is_dead) in dead.iter().enumerate() {
        if is_dead || r.cells(id).len() < 4 || adjacent_pairs.iter().any(|&(a, b)| a != id && b != id) {
            continue;
        }
        let allowed: Vec<bool> = layout.region_of.iter().map(|&x| x == id).collect();
        let s = layout.region_cells[id][0];
        for &p in &Engine::new(&layout, allowed.clone()).nbrs[s] {
            if layout.region_of[p] == id {
                jobs.push((allowed.clone(), s, p));
            }
        }
    }
    // loops through several regions, anchored at a region every solution visits
    let forced: Vec<usize> = (0..r.len())
        .filter(|&id| !dead[id] && r.neighbors_of(id).iter().any(|&n| dead[n]))
        .collect();
    let anchors: Vec<usize> = match forced.first() {
        Some(&f) => vec![f],
        None => (0..r.len()).filter(|&id| !dead[id]).collect(),
    };
    for (k, &a) in anchors.iter().enumerate() {
        let earlier: BTreeSet<usize> = if forced.is_empty() { anchors[..k].iter().copied().collect() } else { BTreeSet::new() };
        let allowed = live_cells(&|id| earlier.contains(&id));
        for &s in &layout.region_cells[a] {
            let c = layout.cell(s);
            for nb in c.neighbors() {
                if !nb.in_bounds(layout.w, layout.h) {
                    continue;
                }
                let p = layout.index(nb);
                if allowed[p] && layout.region_of[p] != a {
                    jobs.push((allowed.clone(), s, p));
                }
            }
        }
    }

    for (allowed, s, p) in jobs {
        let mut engine = Engine::new(&layout, allowed);
        let flow = engine.run(s, p, &mut budget, &mut |cells| record(cells, &mut found));
        match flow {
            ControlFlow::Break(Stop::Budget) => return finish(found, SearchStatus::BudgetExhausted, budget.nodes),
            ControlFlow::Break(Stop::Enough) => return finish(found, SearchStatus::CapReached, budget.nodes),
            ControlFlow::Continue(()) => {}
        }
    }
    finish(found, SearchStatus::Complete, budget.nodes)
}

impl From<Stop> for SearchStatus {
    fn from(s: Stop) -> Self {
        match s {
            Stop::Budget => SearchStatus::BudgetExhausted,
            Stop::Enough => SearchStatus::CapReached,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aon::instance::parse_aon;
    use crate::aon::verify::verify_aon;
    use crate::fixtures::{SAMPLE_AON, SAMPLE_AON_LOOP};
    use crate::loops::parse_loop;

    #[test]
    fn sample_solutions_include_the_drawn_loop() {
        let inst = parse_aon(SAMPLE_AON).unwrap();
        let res = solve_aon(&inst, SolveMode::Count { cap: usize::MAX }, 10_000_000);
        assert_eq!(res.status, SearchStatus::Complete);
        let drawn = LoopPath::new(parse_loop(SAMPLE_AON_LOOP).unwrap()).unwrap().canonical();
        assert!(res.solutions.contains(&drawn));
        for s in &res.solutions {
            assert!(verify_aon(&inst, s.cells()).is_accept());
        }
    }

    #[test]
    fn first_mode_stops_early() {
        let inst = parse_aon(SAMPLE_AON).unwrap();
        let res = solve_aon(&inst, SolveMode::First, 10_000_000);
        assert_eq!(res.solutions.len(), 1);
        assert_eq!(res.status, SearchStatus::CapReached);
    }

    #[test]
    fn adjacent_dead_regions_are_unsat() {
        // two leaf-rich plus-shaped regions side by side
        let inst = parse_aon("aon 6 3\nb A c e D f\nA A A D D D\ng A h i D j\n").unwrap();
        let rep = analyze_dead_regions(&inst);
        assert!(!rep.adjacent_dead_pairs(&inst).is_empty());
        assert!(solve_aon(&inst, SolveMode::First, 1000).is_unsat());
    }

    #[test]
    fn budget_is_reported() {
        let inst = parse_aon(SAMPLE_AON).unwrap();
        assert!(solve_aon(&inst, SolveMode::First, 1).is_budget_exhausted());
    }

    #[test]
    fn single_region_board() {
        let inst = parse_aon("aon 2 3\nA A\nA A\nA A\n").unwrap();
        let res = solve_aon(&inst, SolveMode::Count { cap: 100 }, 100_000);
        // the 2x3 cell grid has one loop through all six cells
        assert_eq!(res.solutions.len(), 1);
        assert_eq!(res.status, SearchStatus::Complete);
    }
}
