//! Exhaustive enumeration of single-gadget traversals.
//!
//! A traversal enters the frame at one pinned border cell and leaves at
//! another; the rest of the loop is assumed to continue off-frame. Water
//! runs are measured inside the frame only, so the stubs break them.

use std::fmt::Write as _;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use super::PuzzleKind;
use crate::aon::gadget as ag;
use crate::aon::solve::{Engine, Layout, Stop};
use crate::aon::AonInstance;
use crate::error::CertifyError;
use crate::geom::{midline_cell, rotate_cell_unchecked, Cell, Direction, ExitPair, Rotation};
use crate::search::Budget;
use crate::waterwalk::gadget as wg;
use crate::waterwalk::{Terrain, WwInstance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetCertificate {
    pub kind: PuzzleKind,
    pub rotation: Rotation,
    /// Exact traversal count per exit pair, in the rotated frame.
    pub pairs: Vec<(ExitPair, u64)>,
    /// Named measurements, e.g. `("one-cell-entered", "0")`.
    pub findings: Vec<(String, String)>,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl GadgetCertificate {
    pub fn count(&self, pair: ExitPair) -> Option<u64> {
        self.pairs.iter().find(|(p, _)| *p == pair).map(|(_, k)| *k)
    }

    pub fn finding(&self, name: &str) -> Option<&str> {
        self.findings.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_str())
    }
}

pub fn certify_gadget(kind: PuzzleKind, budget: u64) -> Result<GadgetCertificate, CertifyError> {
    certify_gadget_rotated(kind, Rotation::R0, budget)
}

/// Certify the gadget turned by `rotation`; pairs are reported in the turned frame.
pub fn certify_gadget_rotated(kind: PuzzleKind, rotation: Rotation, budget: u64) -> Result<GadgetCertificate, CertifyError> {
    let t0 = Instant::now();
    let mut cert = match kind {
        PuzzleKind::Aon => certify_aon(rotation, budget)?,
        PuzzleKind::Ww => certify_ww(rotation, budget)?,
    };
    cert.elapsed = t0.elapsed();
    Ok(cert)
}

/// Stable text form; wall-clock time is left out so output diffs cleanly.
pub fn emit_certificate(c: &GadgetCertificate) -> String {
    let mut s = format!("certificate {} rotation {}\n", c.kind, c.rotation.degrees());
    for (p, k) in &c.pairs {
        let _ = writeln!(s, "pair {p} count {k}");
    }
    for (name, value) in &c.findings {
        let _ = writeln!(s, "finding {name} {value}");
    }
    let _ = writeln!(s, "nodes {}", c.nodes);
    s
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn certify_aon(rot: Rotation, limit: u64) -> Result<GadgetCertificate, CertifyError> {
    let size = ag::AON_SIZE;
    let turn = |c: Cell| rotate_cell_unchecked(size, rot, c);
    let inst = AonInstance::from_boundaries(size, size, ag::boundary().rotated(size, rot));
    let r = inst.regions();
    let big = r.region(turn(ag::exit_cell(Direction::W).unwrap()));
    let one = r.region(turn(ag::ONE_CELL));
    let layout = Layout::new(&inst);
    let mut budget = Budget::new(limit);
    let mut pairs = Vec::new();
    let (mut covering, mut foundational_entered, mut one_entered) = (0u64, 0u64, 0u64);
    let exits = [Direction::W, Direction::N, Direction::E];
    for (i, &a) in exits.iter().enumerate() {
        for &b in &exits[i + 1..] {
            let (sa, sb) = (turn(ag::exit_cell(a).unwrap()), turn(ag::exit_cell(b).unwrap()));
            let pair = ExitPair::new(a, b).unwrap().rotate(rot);
            let mut engine = Engine::new(&layout, vec![true; (size * size) as usize]);
            let mut count = 0u64;
            let flow = engine.run(layout.index(sa), layout.index(sb), &mut budget, &mut |path: &[usize]| {
                count += 1;
                let regions: Vec<usize> = path.iter().map(|&i| layout.region_of[i]).collect();
                if regions.iter().filter(|&&id| id == big).count() == r.cells(big).len() {
                    covering += 1;
                }
                if regions.iter().any(|&id| id != big && id != one) {
                    foundational_entered += 1;
                }
                if regions.contains(&one) {
                    one_entered += 1;
                }
                ControlFlow::Continue(())
            });
            if let ControlFlow::Break(Stop::Budget) = flow {
                return Err(CertifyError::Budget { pair: pair.to_string(), budget: limit });
            }
            pairs.push((pair, count));
        }
    }
    pairs.sort();
    let small: Vec<usize> = (0..r.len()).filter(|&id| id != big).collect();
    let small_adjacent = small.iter().flat_map(|&a| small.iter().map(move |&b| (a, b))).filter(|&(a, b)| a < b && r.adjacent(a, b)).count();
    let leaf = |c: Cell| r.leaves(r.region(c)).contains(&c);
    let plus_leaves = ag::PLUS_CELLS.iter().filter(|&&c| leaf(turn(c))).count();
    let question_leaves = ag::QUESTION_CELLS.iter().filter(|&&c| leaf(turn(c))).count();
    let findings = vec![
        ("big-region-cells".into(), r.cells(big).len().to_string()),
        ("covering-traversals".into(), covering.to_string()),
        ("foundational-entered".into(), foundational_entered.to_string()),
        ("one-cell-entered".into(), one_entered.to_string()),
        ("locally-unique".into(), yes_no(pairs.iter().all(|&(_, k)| k == 1))),
        ("small-parts-adjacent".into(), small_adjacent.to_string()),
        ("plus-cells-leaves".into(), format!("{plus_leaves}/{}", ag::PLUS_CELLS.len())),
        ("question-cells-leaves".into(), format!("{question_leaves}/{}", ag::QUESTION_CELLS.len())),
    ];
    Ok(GadgetCertificate { kind: PuzzleKind::Aon, rotation: rot, pairs, findings, nodes: budget.nodes, elapsed: Duration::ZERO })
}

/// Frame-only path enumeration under the Water Walk rules.
struct WwFrame<'a> {
    inst: &'a WwInstance,
    visited: Vec<bool>,
    path: Vec<Cell>,
}

impl WwFrame<'_> {
    fn idx(&self, c: Cell) -> usize {
        (c.y * self.inst.width() + c.x) as usize
    }

    fn trailing_water(&self) -> usize {
        self.path.iter().rev().take_while(|&&c| self.inst.terrain(c) == Terrain::Water).count()
    }

    /// Runs of the open path satisfy the numbers; ends are not joined.
    fn numbers_ok(&self) -> bool {
        self.inst.numbered_cells().into_iter().all(|nc| {
            let Some(i) = self.path.iter().position(|&c| c == nc) else { return false };
            let ground = |c: &&Cell| self.inst.is_ground(**c);
            let before = self.path[..i].iter().rev().take_while(ground).count();
            let after = self.path[i + 1..].iter().take_while(ground).count();
            before + 1 + after == self.inst.number(nc).unwrap() as usize
        })
    }

    fn dfs(&mut self, end: &dyn Fn(Cell) -> bool, budget: &mut Budget, found: &mut dyn FnMut(&[Cell])) -> Result<(), ()> {
        if !budget.tick() {
            return Err(());
        }
        let head = *self.path.last().unwrap();
        if self.path.len() > 1 && end(head) {
            if self.numbers_ok() {
                found(&self.path);
            }
            return Ok(());
        }
        for nb in head.neighbors() {
            if !nb.in_bounds(self.inst.width(), self.inst.height()) || self.visited[self.idx(nb)] {
                continue;
            }
            self.path.push(nb);
            if self.trailing_water() < 3 {
                let i = self.idx(nb);
                self.visited[i] = true;
                let r = self.dfs(end, budget, found);
                self.visited[i] = false;
                self.path.pop();
                r?;
            } else {
                self.path.pop();
            }
        }
        Ok(())
    }

    fn enumerate(&mut self, start: Cell, end: &dyn Fn(Cell) -> bool, budget: &mut Budget, found: &mut dyn FnMut(&[Cell])) -> Result<(), ()> {
        let i = self.idx(start);
        self.visited[i] = true;
        self.path.push(start);
        let r = self.dfs(end, budget, found);
        self.path.clear();
        self.visited[i] = false;
        r
    }
}

fn ww_frame(rot: Rotation) -> WwInstance {
    let turn = |c: Cell| rotate_cell_unchecked(wg::WW_SIZE, rot, c);
    let mut inst = WwInstance::water(wg::WW_SIZE, wg::WW_SIZE);
    for c in wg::GROUND {
        inst.set_ground(turn(c));
    }
    inst.set_number(turn(wg::NUMBER_CELL), wg::NUMBER);
    inst
}

fn certify_ww(rot: Rotation, limit: u64) -> Result<GadgetCertificate, CertifyError> {
    let size = wg::WW_SIZE;
    let inst = ww_frame(rot);
    let mut frame = WwFrame { inst: &inst, visited: vec![false; (size * size) as usize], path: Vec::new() };
    let mut budget = Budget::new(limit);
    let mut pairs = Vec::new();
    // every side's midline, including the non-exit one
    for pair in ExitPair::all() {
        let (a, b) = (midline_cell(size, pair.first()), midline_cell(size, pair.second()));
        let mut count = 0u64;
        frame
            .enumerate(a, &|c| c == b, &mut budget, &mut |_| count += 1)
            .map_err(|_| CertifyError::Budget { pair: pair.to_string(), budget: limit })?;
        pairs.push((pair, count));
    }
    pairs.sort();

    // leaving through any cell of the long side, not only its midline
    let long = wg::WW_NON_EXIT.rotate(rot);
    let on_long = |c: Cell| match long {
        Direction::W => c.x == 0,
        Direction::E => c.x == size - 1,
        Direction::S => c.y == 0,
        Direction::N => c.y == size - 1,
    };
    let mut frame_only = 0u64;
    let mut survives_junction = 0u64;
    let border_water = (0..size)
        .flat_map(|i| [Cell::new(i, 0), Cell::new(i, size - 1), Cell::new(0, i), Cell::new(size - 1, i)])
        .all(|c| !inst.is_ground(c));
    for d in Direction::ALL.into_iter().filter(|&d| d != long) {
        let start = midline_cell(size, d);
        frame
            .enumerate(start, &on_long, &mut budget, &mut |path| {
                frame_only += 1;
                let tail = path.iter().rev().take_while(|&&c| !inst.is_ground(c)).count();
                // the neighbouring frame's border cell is water too
                if !border_water || tail + 1 < 3 {
                    survives_junction += 1;
                }
            })
            .map_err(|_| CertifyError::Budget { pair: format!("{d} long-side"), budget: limit })?;
    }
    let findings = vec![
        ("long-side".into(), long.to_string()),
        ("long-side-exits-frame-only".into(), frame_only.to_string()),
        ("long-side-exits-with-junction".into(), survives_junction.to_string()),
        ("border-all-water".into(), yes_no(border_water)),
    ];
    Ok(GadgetCertificate { kind: PuzzleKind::Ww, rotation: rot, pairs, findings, nodes: budget.nodes, elapsed: Duration::ZERO })
}
