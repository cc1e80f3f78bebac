//! Candidate source instances: spanning subgraphs of a full grid with every
//! vertex of degree 2 or 3.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::EnumError;
use crate::graph::{full_grid_edges, Edge, GridGraph};

/// Exhaustive enumeration refuses grids with more free edges than this.
pub const MAX_FREE_EDGES: usize = 12;

/// Edges of the full grid touching a vertex of full-grid degree <= 2 must be
/// kept by every candidate; the rest are free.
fn split_edges(cols: i32, rows: i32) -> (Vec<Edge>, Vec<Edge>) {
    let full = GridGraph::full(cols, rows).expect("positive dimensions");
    full_grid_edges(cols, rows).into_iter().partition(|e| {
        let (a, b) = e.endpoints();
        full.degree(a) <= 2 || full.degree(b) <= 2
    })
}

fn degrees_ok(g: &GridGraph) -> bool {
    g.vertices().all(|v| matches!(g.degree(v), 2 | 3))
}

/// Stream of candidate subgraphs.
///
/// Order: free edges are sorted, free edge `i` is bit `i` of a counter, and
/// the counter runs from 0 to `2^free - 1`; forced edges are always present.
#[derive(Debug, Clone)]
pub struct CandidateSubgraphs {
    cols: i32,
    rows: i32,
    forced: Vec<Edge>,
    free: Vec<Edge>,
    next: u64,
}

impl Iterator for CandidateSubgraphs {
    type Item = GridGraph;

    fn next(&mut self) -> Option<GridGraph> {
        while self.next < 1u64 << self.free.len() {
            let mask = self.next;
            self.next += 1;
            let mut edges: BTreeSet<Edge> = self.forced.iter().copied().collect();
            edges.extend(self.free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e));
            let g = GridGraph::from_edge_set(self.cols, self.rows, edges);
            if degrees_ok(&g) {
                return Some(g);
            }
        }
        None
    }
}

pub fn enumerate_candidate_subgraphs(cols: i32, rows: i32) -> Result<CandidateSubgraphs, EnumError> {
    if cols < 1 || rows < 1 {
        return Err(EnumError::Infeasible { cols, rows });
    }
    let (forced, free) = split_edges(cols, rows);
    if free.len() > MAX_FREE_EDGES {
        return Err(EnumError::TooLarge { cols, rows, free: free.len(), limit: MAX_FREE_EDGES });
    }
    Ok(CandidateSubgraphs { cols, rows, forced, free, next: 0 })
}

/// Draw one random candidate subgraph.
///
/// Free edges are visited in random order; an edge is dropped when both ends
/// stay at degree >= 2 and either end still has degree 4 or a fair coin says
/// so. Draws that leave a degree-4 vertex are rejected and redrawn.
pub fn random_candidate<R: Rng>(cols: i32, rows: i32, rng: &mut R) -> Result<GridGraph, EnumError> {
    if cols < 2 || rows < 2 {
        return Err(EnumError::Infeasible { cols, rows });
    }
    let (_, free) = split_edges(cols, rows);
    let full = GridGraph::full(cols, rows).expect("positive dimensions");
    for _ in 0..10_000 {
        let mut edges: BTreeSet<Edge> = full.edges().collect();
        let mut deg: Vec<usize> = full.vertices().map(|v| full.degree(v)).collect();
        let mut order = free.clone();
        order.shuffle(rng);
        for e in order {
            let (a, b) = e.endpoints();
            let (ia, ib) = (full.index_of(a), full.index_of(b));
            if deg[ia] < 3 || deg[ib] < 3 {
                continue;
            }
            if deg[ia] == 4 || deg[ib] == 4 || rng.gen_bool(0.5) {
                edges.remove(&e);
                deg[ia] -= 1;
                deg[ib] -= 1;
            }
        }
        let g = GridGraph::from_edge_set(cols, rows, edges);
        if degrees_ok(&g) {
            return Ok(g);
        }
    }
    Err(EnumError::Infeasible { cols, rows })
}

/// `count` draws from a ChaCha8 stream seeded with `seed`.
pub fn seeded_candidates(cols: i32, rows: i32, seed: u64, count: usize) -> Result<Vec<GridGraph>, EnumError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_candidate(cols, rows, &mut rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_has_only_the_square() {
        let all: Vec<_> = enumerate_candidate_subgraphs(2, 2).unwrap().collect();
        assert_eq!(all, vec![GridGraph::full(2, 2).unwrap()]);
    }

    #[test]
    fn size_guard() {
        assert!(enumerate_candidate_subgraphs(3, 4).is_ok());
        assert!(matches!(enumerate_candidate_subgraphs(4, 4), Err(EnumError::TooLarge { free: 16, .. })));
    }

    #[test]
    fn random_draws_are_candidates_and_reproducible() {
        for (c, r) in [(2, 2), (3, 3), (4, 5), (6, 6)] {
            let a = random_candidate(c, r, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
            let b = random_candidate(c, r, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
            assert_eq!(a, b);
            assert!(degrees_ok(&a));
        }
        assert!(random_candidate(1, 4, &mut ChaCha8Rng::seed_from_u64(0)).is_err());
    }

    #[test]
    fn seeded_batches_repeat() {
        let a = seeded_candidates(3, 3, 7, 5).unwrap();
        assert_eq!(a.len(), 5);
        assert_eq!(a, seeded_candidates(3, 3, 7, 5).unwrap());
        assert_eq!(seeded_candidates(2, 2, 1, 1).unwrap(), vec![GridGraph::full(2, 2).unwrap()]);
    }
}
