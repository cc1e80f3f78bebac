//! Independent reference implementations used by the integration tests.
//!
//! Each oracle is deliberately naive: no pruning and no code shared with
//! the library beyond its data types.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use loopred::graph::GridGraph;
use loopred::regions::BoundaryEdgeSet;
use loopred::{Cell, Vertex};

fn adjacent(a: Cell, b: Cell) -> bool {
    (a.x - b.x).abs() + (a.y - b.y).abs() == 1
}

/// Cycle as a sequence starting at its smallest element, in the direction
/// whose second element is smaller.
pub fn normalize(cells: &[Cell]) -> Vec<Cell> {
    let n = cells.len();
    let k = (0..n).min_by_key(|&i| cells[i]).unwrap();
    let fwd: Vec<Cell> = (0..n).map(|i| cells[(k + i) % n]).collect();
    let bwd: Vec<Cell> = (0..n).map(|i| cells[(k + n - i) % n]).collect();
    if n > 1 && bwd[1] < fwd[1] {
        bwd
    } else {
        fwd
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every Hamiltonian cycle of `g`, normalized, by trying all vertex orders
/// with the first vertex fixed.
pub fn brute_force_ham_cycles(g: &GridGraph) -> BTreeSet<Vec<Vertex>> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let n = verts.len();
    let mut out = BTreeSet::new();
    if n < 3 {
        return out;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let order: Vec<Vertex> = std::iter::once(verts[0]).chain(rest.iter().map(|&i| verts[i])).collect();
        if (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n])) {
            out.insert(normalize(&order));
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

/// All spanning subgraphs of the full grid with every degree in {2, 3}, by
/// filtering every edge subset. Each graph is keyed by its sorted edge list.
pub fn brute_force_candidates(cols: i32, rows: i32) -> BTreeSet<Vec<(Vertex, Vertex)>> {
    let mut all = Vec::new();
    for y in 0..rows {
        for x in 0..cols {
            if x + 1 < cols {
                all.push((Cell::new(x, y), Cell::new(x + 1, y)));
            }
            if y + 1 < rows {
                all.push((Cell::new(x, y), Cell::new(x, y + 1)));
            }
        }
    }
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << all.len() {
        let chosen: Vec<(Vertex, Vertex)> = all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
        let mut deg: HashMap<Vertex, usize> = HashMap::new();
        for (a, b) in &chosen {
            *deg.entry(*a).or_default() += 1;
            *deg.entry(*b).or_default() += 1;
        }
        let ok = (0..rows).all(|y| (0..cols).all(|x| matches!(deg.get(&Cell::new(x, y)), Some(2 | 3))));
        if ok {
            let mut sorted = chosen;
            sorted.sort();
            out.insert(sorted);
        }
    }
    out
}

/// Sorted edge list of a graph, matching [`brute_force_candidates`] keys.
pub fn edge_key(g: &GridGraph) -> Vec<(Vertex, Vertex)> {
    let mut v: Vec<(Vertex, Vertex)> = g.edges().map(|e| e.endpoints()).map(|(a, b)| if a < b { (a, b) } else { (b, a) }).collect();
    v.sort();
    v
}

/// Region partition by recursive flood fill, as sets of cells.
pub fn flood_fill_regions(width: i32, height: i32, b: &BoundaryEdgeSet) -> BTreeSet<BTreeSet<Cell>> {
    fn fill(c: Cell, w: i32, h: i32, b: &BoundaryEdgeSet, seen: &mut BTreeSet<Cell>, part: &mut BTreeSet<Cell>) {
        if c.x < 0 || c.y < 0 || c.x >= w || c.y >= h || !seen.insert(c) {
            return;
        }
        part.insert(c);
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let n = Cell::new(c.x + dx, c.y + dy);
            if !b.separates(c, n) {
                fill(n, w, h, b, seen, part);
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = BTreeSet::new();
    for y in 0..height {
        for x in 0..width {
            let mut part = BTreeSet::new();
            fill(Cell::new(x, y), width, height, b, &mut seen, &mut part);
            if !part.is_empty() {
                out.insert(part);
            }
        }
    }
    out
}

/// Every simple cycle of the `width x height` cell grid, normalized.
///
/// Each cycle is grown from its smallest cell through larger cells only,
/// with no other pruning.
pub fn all_simple_loops(width: i32, height: i32) -> BTreeSet<Vec<Cell>> {
    fn grow(path: &mut Vec<Cell>, w: i32, h: i32, out: &mut BTreeSet<Vec<Cell>>) {
        let head = *path.last().unwrap();
        let start = path[0];
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let n = Cell::new(head.x + dx, head.y + dy);
            if n.x < 0 || n.y < 0 || n.x >= w || n.y >= h || n < start {
                continue;
            }
            if n == start {
                if path.len() >= 4 {
                    out.insert(normalize(path));
                }
                continue;
            }
            if path.contains(&n) {
                continue;
            }
            path.push(n);
            grow(path, w, h, out);
            path.pop();
        }
    }
    let mut out = BTreeSet::new();
    for y in 0..height {
        for x in 0..width {
            let mut path = vec![Cell::new(x, y)];
            grow(&mut path, width, height, &mut out);
        }
    }
    debug_assert!(out.iter().all(|l| (0..l.len()).all(|i| adjacent(l[i], l[(i + 1) % l.len()]))));
    out
}
