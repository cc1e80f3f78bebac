//! Unit-edge boundaries and the regions they cut a board into.

use std::collections::{BTreeSet, VecDeque};

use crate::error::RegionError;
use crate::geom::{rotate_lattice_point, Cell, Rotation};
use crate::loops::LoopPath;

/// A unit lattice segment.
///
/// `V { x, y }` runs from `(x, y)` to `(x, y + 1)` and separates cells
/// `(x - 1, y)` and `(x, y)`; `H { x, y }` runs from `(x, y)` to `(x + 1, y)`
/// and separates `(x, y - 1)` and `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Segment {
    V { x: i32, y: i32 },
    H { x: i32, y: i32 },
}

impl Segment {
    pub fn between(a: (i32, i32), b: (i32, i32)) -> Option<Segment> {
        match (b.0 - a.0, b.1 - a.1) {
            (0, 1) => Some(Segment::V { x: a.0, y: a.1 }),
            (0, -1) => Some(Segment::V { x: a.0, y: b.1 }),
            (1, 0) => Some(Segment::H { x: a.0, y: a.1 }),
            (-1, 0) => Some(Segment::H { x: b.0, y: a.1 }),
            _ => None,
        }
    }

    pub fn endpoints(self) -> ((i32, i32), (i32, i32)) {
        match self {
            Segment::V { x, y } => ((x, y), (x, y + 1)),
            Segment::H { x, y } => ((x, y), (x + 1, y)),
        }
    }

    /// The two cells on either side; either may lie off the board.
    pub fn cells(self) -> (Cell, Cell) {
        match self {
            Segment::V { x, y } => (Cell::new(x - 1, y), Cell::new(x, y)),
            Segment::H { x, y } => (Cell::new(x, y - 1), Cell::new(x, y)),
        }
    }

    /// The segment between two orthogonally adjacent cells.
    pub fn separating(a: Cell, b: Cell) -> Option<Segment> {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if lo.x + 1 == hi.x && lo.y == hi.y {
            Some(Segment::V { x: hi.x, y: hi.y })
        } else if lo.x == hi.x && lo.y + 1 == hi.y {
            Some(Segment::H { x: hi.x, y: hi.y })
        } else {
            None
        }
    }

    pub fn translated(self, dx: i32, dy: i32) -> Segment {
        match self {
            Segment::V { x, y } => Segment::V { x: x + dx, y: y + dy },
            Segment::H { x, y } => Segment::H { x: x + dx, y: y + dy },
        }
    }

    pub fn rotated(self, size: i32, r: Rotation) -> Segment {
        let (a, b) = self.endpoints();
        Segment::between(rotate_lattice_point(size, r, a), rotate_lattice_point(size, r, b))
            .expect("rotation keeps unit segments unit")
    }
}

/// A set of region-boundary unit segments.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundaryEdgeSet {
    segments: BTreeSet<Segment>,
}

impl BoundaryEdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, s: Segment) -> bool {
        self.segments.insert(s)
    }

    /// Add every unit segment of an axis-parallel polyline.
    ///
    /// Panics on a diagonal step; polylines are static geometry.
    pub fn add_polyline(&mut self, points: &[(i32, i32)]) {
        for w in points.windows(2) {
            let (mut p, q) = (w[0], w[1]);
            assert!(p.0 == q.0 || p.1 == q.1, "diagonal polyline step {p:?} -> {q:?}");
            while p != q {
                let next = (p.0 + (q.0 - p.0).signum(), p.1 + (q.1 - p.1).signum());
                self.segments.insert(Segment::between(p, next).unwrap());
                p = next;
            }
        }
    }

    pub fn add_perimeter(&mut self, width: i32, height: i32) {
        self.add_polyline(&[(0, 0), (width, 0), (width, height), (0, height), (0, 0)]);
    }

    pub fn extend(&mut self, other: &BoundaryEdgeSet) {
        self.segments.extend(other.segments.iter().copied());
    }

    pub fn contains(&self, s: Segment) -> bool {
        self.segments.contains(&s)
    }

    /// Whether a boundary segment lies between adjacent cells `a` and `b`.
    pub fn separates(&self, a: Cell, b: Cell) -> bool {
        Segment::separating(a, b).is_some_and(|s| self.segments.contains(&s))
    }

    pub fn iter(&self) -> impl Iterator<Item = Segment> + '_ {
        self.segments.iter().copied()
    }

    /// Each segment as the pair of cells it separates.
    pub fn cell_pairs(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.segments.iter().map(|s| s.cells())
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn rotated(&self, size: i32, r: Rotation) -> BoundaryEdgeSet {
        BoundaryEdgeSet { segments: self.segments.iter().map(|s| s.rotated(size, r)).collect() }
    }

    pub fn translated(&self, dx: i32, dy: i32) -> BoundaryEdgeSet {
        BoundaryEdgeSet { segments: self.segments.iter().map(|s| s.translated(dx, dy)).collect() }
    }
}

/// Connected components of a board under boundary-free orthogonal adjacency.
///
/// Region ids are assigned in row-major scan order starting from `y = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionDecomposition {
    width: i32,
    height: i32,
    region_of: Vec<usize>,
    regions: Vec<Vec<Cell>>,
    leaves: Vec<Vec<Cell>>,
}

impl RegionDecomposition {
    pub fn width(&self) -> i32 {
        self.width
    }

    pub fn height(&self) -> i32 {
        self.height
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    fn idx(&self, c: Cell) -> usize {
        (c.y * self.width + c.x) as usize
    }

    pub fn region_at(&self, c: Cell) -> Option<usize> {
        c.in_bounds(self.width, self.height).then(|| self.region_of[self.idx(c)])
    }

    /// Region of an on-board cell.
    pub fn region(&self, c: Cell) -> usize {
        self.region_of[self.idx(c)]
    }

    pub fn cells(&self, id: usize) -> &[Cell] {
        &self.regions[id]
    }

    pub fn leaves(&self, id: usize) -> &[Cell] {
        &self.leaves[id]
    }

    pub fn regions(&self) -> impl Iterator<Item = &[Cell]> + '_ {
        self.regions.iter().map(|r| r.as_slice())
    }

    pub fn all_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let w = self.width;
        (0..self.height).flat_map(move |y| (0..w).map(move |x| Cell::new(x, y)))
    }

    /// Regions owning a cell orthogonally adjacent to a cell of `id`.
    pub fn neighbors_of(&self, id: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &c in &self.regions[id] {
            for n in c.neighbors() {
                if let Some(r) = self.region_at(n) {
                    if r != id {
                        out.insert(r);
                    }
                }
            }
        }
        out
    }

    /// Whether the two regions touch along some unit edge.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.neighbors_of(a).contains(&b)
    }
}

pub fn regions_from_boundaries(width: i32, height: i32, b: &BoundaryEdgeSet) -> RegionDecomposition {
    let n = (width * height) as usize;
    let mut region_of = vec![usize::MAX; n];
    let mut regions: Vec<Vec<Cell>> = Vec::new();
    let idx = |c: Cell| (c.y * width + c.x) as usize;
    let open = |a: Cell, c: Cell| c.in_bounds(width, height) && !b.separates(a, c);
    for y in 0..height {
        for x in 0..width {
            let start = Cell::new(x, y);
            if region_of[idx(start)] != usize::MAX {
                continue;
            }
            let id = regions.len();
            let mut cells = Vec::new();
            let mut queue = VecDeque::from([start]);
            region_of[idx(start)] = id;
            while let Some(c) = queue.pop_front() {
                cells.push(c);
                for nb in c.neighbors() {
                    if open(c, nb) && region_of[idx(nb)] == usize::MAX {
                        region_of[idx(nb)] = id;
                        queue.push_back(nb);
                    }
                }
            }
            cells.sort();
            regions.push(cells);
        }
    }
    let leaves = regions
        .iter()
        .map(|cells| {
            cells
                .iter()
                .copied()
                .filter(|&c| c.neighbors().into_iter().filter(|&nb| open(c, nb)).count() == 1)
                .collect()
        })
        .collect();
    RegionDecomposition { width, height, region_of, regions, leaves }
}

/// Positions `i` where exactly one of loop cells `i`, `i + 1` lies in `region`.
pub fn boundary_crossings(l: &LoopPath, r: &RegionDecomposition, region: usize) -> Result<usize, RegionError> {
    if region >= r.len() {
        return Err(RegionError::UnknownRegion(region));
    }
    let inside = |c: Cell| r.region_at(c) == Some(region);
    Ok(l.steps().filter(|&(a, b)| inside(a) != inside(b)).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_cells_roundtrip() {
        let a = Cell::new(3, 4);
        for nb in a.neighbors() {
            let s = Segment::separating(a, nb).unwrap();
            let (p, q) = s.cells();
            assert!((p, q) == (a, nb) || (p, q) == (nb, a));
        }
        assert!(Segment::separating(a, Cell::new(4, 5)).is_none());
    }

    #[test]
    fn single_region_board() {
        let r = regions_from_boundaries(2, 2, &BoundaryEdgeSet::new());
        assert_eq!(r.len(), 1);
        assert!(r.leaves(0).is_empty());
    }

    #[test]
    fn strip_has_two_leaves() {
        let r = regions_from_boundaries(1, 3, &BoundaryEdgeSet::new());
        assert_eq!(r.len(), 1);
        assert_eq!(r.leaves(0), &[Cell::new(0, 0), Cell::new(0, 2)]);
    }

    #[test]
    fn perimeter_is_idempotent() {
        let mut b = BoundaryEdgeSet::new();
        b.add_polyline(&[(0, 1), (3, 1)]);
        let r1 = regions_from_boundaries(3, 3, &b);
        b.add_perimeter(3, 3);
        assert_eq!(regions_from_boundaries(3, 3, &b), r1);
        assert_eq!(r1.len(), 2);
    }

    #[test]
    fn crossings_and_unknown_region() {
        let mut b = BoundaryEdgeSet::new();
        b.add_polyline(&[(1, 0), (1, 2)]);
        let r = regions_from_boundaries(2, 2, &b);
        let l = LoopPath::new(vec![Cell::new(0, 0), Cell::new(1, 0), Cell::new(1, 1), Cell::new(0, 1)]).unwrap();
        assert_eq!(boundary_crossings(&l, &r, 0), Ok(2));
        assert_eq!(boundary_crossings(&l, &r, 1), Ok(2));
        assert_eq!(boundary_crossings(&l, &r, 2), Err(RegionError::UnknownRegion(2)));
    }

    #[test]
    fn rotation_of_segments() {
        // the left edge of a 5-frame becomes the bottom edge
        let s = Segment::V { x: 0, y: 2 };
        assert_eq!(s.rotated(5, Rotation::R90), Segment::H { x: 2, y: 0 });
        let full = (0..4).fold(s, |t, _| t.rotated(5, Rotation::R90));
        assert_eq!(full, s);
    }
}
