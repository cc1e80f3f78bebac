//! Puzzle loops: cyclic sequences of distinct, orthogonally adjacent cells.
//!
//! Loop file:
//!
//! ```text
//! loop <n>
//! <x> <y>      (n lines, cyclic order)
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{LoopError, ParseError};
use crate::geom::Cell;
use crate::graph::{content_lines, parse_int};
use crate::ham::canonical_cycle;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoopPath {
    cells: Vec<Cell>,
}

impl LoopPath {
    pub fn new(cells: Vec<Cell>) -> Result<Self, LoopError> {
        if cells.len() < 4 {
            return Err(LoopError::TooShort(cells.len()));
        }
        let mut seen = HashSet::with_capacity(cells.len());
        for &c in &cells {
            if !seen.insert(c) {
                return Err(LoopError::Repeated(c));
            }
        }
        let n = cells.len();
        for i in 0..n {
            let (a, b) = (cells[i], cells[(i + 1) % n]);
            if !a.is_adjacent(b) {
                return Err(LoopError::NotAdjacent(a, b));
            }
        }
        Ok(LoopPath { cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cyclic successor pairs `(cells[i], cells[i + 1])`.
    pub fn steps(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        let n = self.cells.len();
        (0..n).map(move |i| (self.cells[i], self.cells[(i + 1) % n]))
    }

    pub fn check_on_board(&self, width: i32, height: i32) -> Result<(), LoopError> {
        match self.cells.iter().find(|c| !c.in_bounds(width, height)) {
            Some(&c) => Err(LoopError::OffBoard(c, width, height)),
            None => Ok(()),
        }
    }

    /// Smallest cell first, then the direction with the smaller second cell.
    pub fn canonical(&self) -> LoopPath {
        LoopPath { cells: canonical_cycle(&self.cells) }
    }

    pub fn reversed(&self) -> LoopPath {
        let mut cells = self.cells.clone();
        cells.reverse();
        LoopPath { cells }
    }
}

/// Cyclic run-length encoding of `classify` along the loop.
///
/// Runs start at a label change, so a run never wraps across the output's
/// ends; a uniformly labelled loop is one run.
pub fn loop_runs<L, F>(l: &LoopPath, classify: F) -> Vec<(L, usize)>
where
    L: PartialEq,
    F: Fn(Cell) -> L,
{
    let labels: Vec<L> = l.cells().iter().map(|&c| classify(c)).collect();
    let n = labels.len();
    let Some(start) = (0..n).find(|&i| labels[i] != labels[(i + n - 1) % n]) else {
        return labels.into_iter().next().map(|lab| vec![(lab, n)]).unwrap_or_default();
    };
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for k in 0..n {
        let i = (start + k) % n;
        match runs.last_mut() {
            Some((j, len)) if labels[*j] == labels[i] => *len += 1,
            _ => runs.push((i, 1)),
        }
    }
    let mut labels: Vec<Option<L>> = labels.into_iter().map(Some).collect();
    runs.into_iter().map(|(i, len)| (labels[i].take().unwrap(), len)).collect()
}

/// Parse the raw cell list of a loop file; [`LoopPath::new`] validates it.
pub fn parse_loop(text: &str) -> Result<Vec<Cell>, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing `loop` header"))?;
    let n = match header.as_slice() {
        ["loop", n] => n
            .parse::<usize>()
            .map_err(|_| ParseError::new(hline, format!("expected a cell count, found `{n}`")))?,
        _ => return Err(ParseError::new(hline, "expected `loop <n>`")),
    };
    let mut cells = Vec::with_capacity(n);
    let mut last = hline;
    for (ln, toks) in lines {
        if cells.len() == n {
            return Err(ParseError::new(ln, "trailing content after the last cell"));
        }
        match toks.as_slice() {
            [x, y] => cells.push(Cell::new(parse_int(x, ln)?, parse_int(y, ln)?)),
            _ => return Err(ParseError::new(ln, "expected `<x> <y>`")),
        }
        last = ln;
    }
    if cells.len() != n {
        return Err(ParseError::new(last, format!("header promises {n} cells, found {}", cells.len())));
    }
    Ok(cells)
}

pub fn emit_loop(cells: &[Cell]) -> String {
    let mut s = format!("loop {}\n", cells.len());
    for c in cells {
        let _ = writeln!(s, "{} {}", c.x, c.y);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq() -> LoopPath {
        LoopPath::new(vec![Cell::new(0, 0), Cell::new(1, 0), Cell::new(1, 1), Cell::new(0, 1)]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(matches!(LoopPath::new(vec![Cell::new(0, 0); 3]), Err(LoopError::TooShort(3))));
        let rep = vec![Cell::new(0, 0), Cell::new(1, 0), Cell::new(0, 0), Cell::new(1, 0)];
        assert!(matches!(LoopPath::new(rep), Err(LoopError::Repeated(_))));
        let gap = vec![Cell::new(0, 0), Cell::new(1, 0), Cell::new(1, 1), Cell::new(0, 2)];
        assert!(matches!(LoopPath::new(gap), Err(LoopError::NotAdjacent(_, _))));
        assert!(sq().check_on_board(2, 2).is_ok());
        assert!(sq().check_on_board(1, 2).is_err());
    }

    #[test]
    fn runs_uniform_and_alternating() {
        assert_eq!(loop_runs(&sq(), |_| 'g'), vec![('g', 4)]);
        let runs = loop_runs(&sq(), |c| (c.x + c.y) % 2);
        assert_eq!(runs.len(), 4);
        assert!(runs.iter().all(|r| r.1 == 1));
    }

    #[test]
    fn runs_wrap_around() {
        // labels a a b a  -> runs b:1, a:3
        let runs = loop_runs(&sq(), |c| c == Cell::new(1, 1));
        assert_eq!(runs, vec![(true, 1), (false, 3)]);
    }

    #[test]
    fn file_format() {
        let text = emit_loop(sq().cells());
        assert_eq!(text, "loop 4\n0 0\n1 0\n1 1\n0 1\n");
        assert_eq!(parse_loop(&text).unwrap(), sq().cells());
        assert!(parse_loop("loop 2\n0 0\n").is_err());
        assert!(parse_loop("loop 1\n0 0\n1 1\n").is_err());
        assert!(parse_loop("loop 1\n0 0 0\n").is_err());
        assert!(parse_loop("lop 1\n0 0\n").is_err());
    }

    #[test]
    fn canonical_loop() {
        let l = LoopPath::new(vec![Cell::new(1, 1), Cell::new(0, 1), Cell::new(0, 0), Cell::new(1, 0)]).unwrap();
        assert_eq!(l.canonical(), sq().canonical());
        assert_eq!(l.reversed().canonical(), sq().canonical());
        assert_eq!(sq().canonical().cells()[0], Cell::new(0, 0));
    }
}
