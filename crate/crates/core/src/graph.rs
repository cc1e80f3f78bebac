//! Spanning subgraphs of rectangular grid graphs and their text format.
//!
//! Graph file:
//!
//! ```text
//! # optional comment lines
//! grid <cols> <rows>
//! edge <x1> <y1> <x2> <y2>
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::geom::{Cell, Direction};

/// Grid-graph vertex `(column, row)`.
pub type Vertex = Cell;

/// Undirected unit edge, smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Option<Edge> {
        if !a.is_adjacent(b) {
            return None;
        }
        Some(if a < b { Edge(a, b) } else { Edge(b, a) })
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridGraph {
    cols: i32,
    rows: i32,
    edges: BTreeSet<Edge>,
}

impl GridGraph {
    pub fn new(
        cols: i32,
        rows: i32,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut g = GridGraph::empty(cols, rows)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn empty(cols: i32, rows: i32) -> Result<Self, GraphError> {
        if cols < 1 || rows < 1 {
            return Err(GraphError::EmptyGrid { cols, rows });
        }
        Ok(GridGraph { cols, rows, edges: BTreeSet::new() })
    }

    /// The full rectangular grid graph.
    pub fn full(cols: i32, rows: i32) -> Result<Self, GraphError> {
        let mut g = GridGraph::empty(cols, rows)?;
        g.edges = full_grid_edges(cols, rows).into_iter().collect();
        Ok(g)
    }

    pub(crate) fn from_edge_set(cols: i32, rows: i32, edges: BTreeSet<Edge>) -> Self {
        GridGraph { cols, rows, edges }
    }

    fn add_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        for v in [a, b] {
            if !self.contains(v) {
                return Err(GraphError::OutOfRange(v));
            }
        }
        let e = Edge::new(a, b).ok_or(GraphError::NonUnitEdge(a, b))?;
        if !self.edges.insert(e) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        Ok(())
    }

    pub fn cols(&self) -> i32 {
        self.cols
    }

    pub fn rows(&self) -> i32 {
        self.rows
    }

    pub fn vertex_count(&self) -> usize {
        (self.cols * self.rows) as usize
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.in_bounds(self.cols, self.rows)
    }

    /// Vertices in lexicographic `(x, y)` order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.cols).flat_map(move |x| (0..self.rows).map(move |y| Cell::new(x, y)))
    }

    /// Position of `v` in [`GridGraph::vertices`] order.
    pub fn index_of(&self, v: Vertex) -> usize {
        (v.x * self.rows + v.y) as usize
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        Edge::new(a, b).is_some_and(|e| self.edges.contains(&e))
    }

    /// Neighbours of `v` in N, E, S, W order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        v.neighbors().into_iter().filter(move |&u| self.has_edge(v, u))
    }

    /// Sides of `v` carrying a graph edge.
    pub fn edge_directions(&self, v: Vertex) -> Vec<Direction> {
        Direction::ALL.into_iter().filter(|d| self.has_edge(v, v.step(*d))).collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count()
    }
}

pub(crate) fn full_grid_edges(cols: i32, rows: i32) -> Vec<Edge> {
    let mut out = Vec::new();
    for x in 0..cols {
        for y in 0..rows {
            let v = Cell::new(x, y);
            if x + 1 < cols {
                out.push(Edge::new(v, v.step(Direction::E)).unwrap());
            }
            if y + 1 < rows {
                out.push(Edge::new(v, v.step(Direction::N)).unwrap());
            }
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: BTreeMap<Vertex, usize>,
    pub min: usize,
    pub max: usize,
}

pub fn degree_profile(g: &GridGraph) -> DegreeProfile {
    let degrees: BTreeMap<_, _> = g.vertices().map(|v| (v, g.degree(v))).collect();
    let min = degrees.values().copied().min().unwrap_or(0);
    let max = degrees.values().copied().max().unwrap_or(0);
    DegreeProfile { degrees, min, max }
}

/// Split a line-based file into `(line number, tokens)` skipping blank and `#` lines.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, t.split_whitespace().collect()))
        }
    })
}

pub(crate) fn parse_int(tok: &str, line: usize) -> Result<i32, ParseError> {
    tok.parse::<i32>()
        .map_err(|_| ParseError::new(line, format!("expected an integer, found `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<GridGraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing `grid` header"))?;
    let (cols, rows) = match header.as_slice() {
        ["grid", c, r] => (parse_int(c, hline)?, parse_int(r, hline)?),
        _ => return Err(ParseError::new(hline, "expected `grid <cols> <rows>`")),
    };
    let mut g = GridGraph::empty(cols, rows).map_err(|e| ParseError::new(hline, e.to_string()))?;
    for (ln, toks) in lines {
        match toks.as_slice() {
            ["edge", x1, y1, x2, y2] => {
                let a = Cell::new(parse_int(x1, ln)?, parse_int(y1, ln)?);
                let b = Cell::new(parse_int(x2, ln)?, parse_int(y2, ln)?);
                g.add_edge(a, b).map_err(|e| ParseError::new(ln, e.to_string()))?;
            }
            _ => return Err(ParseError::new(ln, "expected `edge <x1> <y1> <x2> <y2>`")),
        }
    }
    Ok(g)
}

pub fn emit_graph(g: &GridGraph) -> String {
    let mut s = format!("grid {} {}\n", g.cols, g.rows);
    for Edge(a, b) in &g.edges {
        let _ = writeln!(s, "edge {} {} {} {}", a.x, a.y, b.x, b.y);
    }
    s
}
