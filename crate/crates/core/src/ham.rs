//! Hamiltonian cycles of grid graphs.
//!
//! Backtracking from the smallest vertex with two prunes: every unvisited
//! vertex keeps at least two usable neighbours, and a neighbour of the path
//! head with exactly two usable neighbours forces the next step.

use crate::error::HamCycleError;
use crate::graph::{GridGraph, Vertex};

/// A Hamiltonian cycle of a specific graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamCycle {
    vertices: Vec<Vertex>,
}

impl HamCycle {
    pub fn new(g: &GridGraph, vertices: Vec<Vertex>) -> Result<Self, HamCycleError> {
        if vertices.len() != g.vertex_count() {
            return Err(HamCycleError::WrongLength { got: vertices.len(), expected: g.vertex_count() });
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in &vertices {
            if !g.contains(v) || std::mem::replace(&mut seen[g.index_of(v)], true) {
                return Err(HamCycleError::BadVertex(v));
            }
        }
        let n = vertices.len();
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if !g.has_edge(a, b) {
                return Err(HamCycleError::MissingEdge(a, b));
            }
        }
        Ok(HamCycle { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Rotation/reflection-invariant form: smallest vertex first, then the
    /// direction whose second vertex is smaller.
    pub fn canonical(&self) -> Vec<Vertex> {
        canonical_cycle(&self.vertices)
    }

    pub fn same_cycle(&self, other: &HamCycle) -> bool {
        self.canonical() == other.canonical()
    }
}

pub(crate) fn canonical_cycle<T: Ord + Copy>(items: &[T]) -> Vec<T> {
    let n = items.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| items[i]).unwrap();
    let fwd: Vec<T> = (0..n).map(|k| items[(start + k) % n]).collect();
    let bwd: Vec<T> = (0..n).map(|k| items[(start + n - k) % n]).collect();
    if n > 1 && bwd[1] < fwd[1] {
        bwd
    } else {
        fwd
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamSearch {
    Found(HamCycle),
    /// Exhaustive search completed without a cycle.
    NoCycle,
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExhausted;

struct Search<'a> {
    adj: &'a [Vec<usize>],
    visited: Vec<bool>,
    path: Vec<usize>,
    nodes: u64,
    budget: u64,
    count_all: bool,
    count: u64,
    found: Option<Vec<usize>>,
}

enum Step {
    Continue,
    Stop,
    OutOfBudget,
}

impl Search<'_> {
    fn usable(&self, v: usize, head: usize) -> usize {
        self.adj[v].iter().filter(|&&u| !self.visited[u] || u == head || u == self.path[0]).count()
    }

    fn feasible(&self, head: usize) -> bool {
        let n = self.adj.len();
        (0..n).all(|v| self.visited[v] || self.usable(v, head) >= 2)
    }

    fn dfs(&mut self) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        let n = self.adj.len();
        let head = *self.path.last().unwrap();
        if self.path.len() == n {
            if self.adj[head].contains(&self.path[0]) {
                if self.count_all {
                    // each cycle is met once per direction
                    if self.path[1] < self.path[n - 1] {
                        self.count += 1;
                    }
                } else {
                    self.found = Some(self.path.clone());
                    return Step::Stop;
                }
            }
            return Step::Continue;
        }
        if !self.feasible(head) {
            return Step::Continue;
        }
        let candidates: Vec<usize> = self.adj[head].iter().copied().filter(|&u| !self.visited[u]).collect();
        let forced: Vec<usize> = candidates.iter().copied().filter(|&u| self.usable(u, head) == 2).collect();
        let order = match forced.len() {
            // the start vertex still owes two cycle edges
            _ if self.path.len() == 1 => candidates,
            0 => candidates,
            1 => forced,
            _ => return Step::Continue,
        };
        for u in order {
            self.visited[u] = true;
            self.path.push(u);
            let r = self.dfs();
            self.path.pop();
            self.visited[u] = false;
            match r {
                Step::Continue => {}
                other => return other,
            }
        }
        Step::Continue
    }
}

fn adjacency(g: &GridGraph) -> (Vec<Vertex>, Vec<Vec<usize>>) {
    let verts: Vec<Vertex> = g.vertices().collect();
    let adj = verts.iter().map(|&v| g.neighbors(v).map(|u| g.index_of(u)).collect()).collect();
    (verts, adj)
}

pub fn find_hamiltonian_cycle(g: &GridGraph, budget: u64) -> HamSearch {
    let (verts, adj) = adjacency(g);
    if verts.len() < 3 {
        return HamSearch::NoCycle;
    }
    let mut s = new_search(&adj, budget, false);
    match s.dfs() {
        Step::OutOfBudget => HamSearch::BudgetExhausted,
        Step::Stop => {
            let cyc = s.found.take().unwrap().into_iter().map(|i| verts[i]).collect();
            HamSearch::Found(HamCycle::new(g, cyc).expect("search only follows graph edges"))
        }
        Step::Continue => HamSearch::NoCycle,
    }
}

/// Number of distinct Hamiltonian cycles (a cycle and its reversal count once).
pub fn count_hamiltonian_cycles(g: &GridGraph, budget: u64) -> Result<u64, BudgetExhausted> {
    let (verts, adj) = adjacency(g);
    if verts.len() < 3 {
        return Ok(0);
    }
    let mut s = new_search(&adj, budget, true);
    match s.dfs() {
        Step::OutOfBudget => Err(BudgetExhausted),
        _ => Ok(s.count),
    }
}

fn new_search(adj: &[Vec<usize>], budget: u64, count_all: bool) -> Search<'_> {
    let mut visited = vec![false; adj.len()];
    visited[0] = true;
    Search { adj, visited, path: vec![0], nodes: 0, budget, count_all, count: 0, found: None }
}
