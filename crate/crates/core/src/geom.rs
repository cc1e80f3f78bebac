//! Lattice primitives: cells, sides, quarter-turn rotations.
//!
//! Coordinates have their origin at the bottom-left corner of a board, `x`
//! growing to the right and `y` growing upward. Cell `(x, y)` is the unit
//! square with lattice corners `(x, y)` and `(x + 1, y + 1)`.

use std::fmt;

use crate::error::FrameError;

/// A board cell, or a grid-graph vertex when used as one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    pub fn step(self, d: Direction) -> Cell {
        let (dx, dy) = d.delta();
        Cell::new(self.x + dx, self.y + dy)
    }

    pub fn offset(self, dx: i32, dy: i32) -> Cell {
        Cell::new(self.x + dx, self.y + dy)
    }

    /// Orthogonal neighbours in `Direction::ALL` order.
    pub fn neighbors(self) -> [Cell; 4] {
        Direction::ALL.map(|d| self.step(d))
    }

    /// Direction of `other` seen from `self`, if the two are orthogonally adjacent.
    pub fn direction_to(self, other: Cell) -> Option<Direction> {
        match (other.x - self.x, other.y - self.y) {
            (0, 1) => Some(Direction::N),
            (1, 0) => Some(Direction::E),
            (0, -1) => Some(Direction::S),
            (-1, 0) => Some(Direction::W),
            _ => None,
        }
    }

    pub fn is_adjacent(self, other: Cell) -> bool {
        self.direction_to(other).is_some()
    }

    pub fn in_bounds(self, width: i32, height: i32) -> bool {
        self.x >= 0 && self.y >= 0 && self.x < width && self.y < height
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i32, i32)> for Cell {
    fn from((x, y): (i32, i32)) -> Self {
        Cell::new(x, y)
    }
}

/// One of the four sides of a cell or metacell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    N,
    E,
    S,
    W,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::N, Direction::E, Direction::S, Direction::W];

    pub fn delta(self) -> (i32, i32) {
        match self {
            Direction::N => (0, 1),
            Direction::E => (1, 0),
            Direction::S => (0, -1),
            Direction::W => (-1, 0),
        }
    }

    pub fn opposite(self) -> Direction {
        match self {
            Direction::N => Direction::S,
            Direction::E => Direction::W,
            Direction::S => Direction::N,
            Direction::W => Direction::E,
        }
    }

    /// Quarter turn counterclockwise: N -> W -> S -> E -> N.
    pub fn rotate_ccw(self) -> Direction {
        match self {
            Direction::N => Direction::W,
            Direction::W => Direction::S,
            Direction::S => Direction::E,
            Direction::E => Direction::N,
        }
    }

    pub fn rotate(self, r: Rotation) -> Direction {
        (0..r.quarter_turns()).fold(self, |d, _| d.rotate_ccw())
    }

    pub fn letter(self) -> char {
        match self {
            Direction::N => 'N',
            Direction::E => 'E',
            Direction::S => 'S',
            Direction::W => 'W',
        }
    }

    pub fn from_letter(c: char) -> Option<Direction> {
        match c {
            'N' => Some(Direction::N),
            'E' => Some(Direction::E),
            'S' => Some(Direction::S),
            'W' => Some(Direction::W),
            _ => None,
        }
    }

    pub fn is_opposite(self, other: Direction) -> bool {
        self.opposite() == other
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Counterclockwise rotation by a multiple of 90 degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rotation(u8);

impl Rotation {
    pub const R0: Rotation = Rotation(0);
    pub const R90: Rotation = Rotation(1);
    pub const R180: Rotation = Rotation(2);
    pub const R270: Rotation = Rotation(3);
    pub const ALL: [Rotation; 4] = [Self::R0, Self::R90, Self::R180, Self::R270];

    pub fn from_quarter_turns(q: u32) -> Rotation {
        Rotation((q % 4) as u8)
    }

    pub fn from_degrees(deg: u32) -> Option<Rotation> {
        (deg.is_multiple_of(90) && deg < 360).then_some(Rotation((deg / 90) as u8))
    }

    pub fn quarter_turns(self) -> u32 {
        self.0 as u32
    }

    pub fn degrees(self) -> u32 {
        self.0 as u32 * 90
    }

    /// The rotation taking side `from` onto side `to`.
    pub fn between(from: Direction, to: Direction) -> Rotation {
        Rotation::ALL
            .into_iter()
            .find(|r| from.rotate(*r) == to)
            .expect("some quarter turn maps any side onto any other")
    }

    pub fn then(self, other: Rotation) -> Rotation {
        Rotation((self.0 + other.0) % 4)
    }

    pub fn inverse(self) -> Rotation {
        Rotation((4 - self.0) % 4)
    }
}

/// Rotate cell `p` inside a `size` x `size` frame: 90 degrees maps
/// `(x, y)` to `(size - 1 - y, x)`.
pub fn rotate_gadget_frame(size: i32, rotation: Rotation, p: Cell) -> Result<Cell, FrameError> {
    if !p.in_bounds(size, size) {
        return Err(FrameError::OutOfFrame { cell: p, size });
    }
    Ok(rotate_cell_unchecked(size, rotation, p))
}

pub(crate) fn rotate_cell_unchecked(size: i32, rotation: Rotation, p: Cell) -> Cell {
    let mut c = p;
    for _ in 0..rotation.quarter_turns() {
        c = Cell::new(size - 1 - c.y, c.x);
    }
    c
}

/// Rotate a lattice corner of a `size` frame: 90 degrees maps `(x, y)` to `(size - y, x)`.
pub fn rotate_lattice_point(size: i32, rotation: Rotation, p: (i32, i32)) -> (i32, i32) {
    let mut q = p;
    for _ in 0..rotation.quarter_turns() {
        q = (size - q.1, q.0);
    }
    q
}

/// The cell at the middle of side `side` of a `size` frame (size is odd).
pub fn midline_cell(size: i32, side: Direction) -> Cell {
    let m = size / 2;
    match side {
        Direction::N => Cell::new(m, size - 1),
        Direction::E => Cell::new(size - 1, m),
        Direction::S => Cell::new(m, 0),
        Direction::W => Cell::new(0, m),
    }
}

/// Unordered pair of distinct metacell sides.
///
/// Stored in the fixed order S, N, W, E so that printed certificates read
/// `S E`, `N E`, `S N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExitPair {
    first: Direction,
    second: Direction,
}

impl ExitPair {
    fn rank(d: Direction) -> u8 {
        match d {
            Direction::S => 0,
            Direction::N => 1,
            Direction::W => 2,
            Direction::E => 3,
        }
    }

    pub fn new(a: Direction, b: Direction) -> Option<ExitPair> {
        if a == b {
            return None;
        }
        let (first, second) = if Self::rank(a) < Self::rank(b) { (a, b) } else { (b, a) };
        Some(ExitPair { first, second })
    }

    pub fn first(self) -> Direction {
        self.first
    }

    pub fn second(self) -> Direction {
        self.second
    }

    pub fn contains(self, d: Direction) -> bool {
        self.first == d || self.second == d
    }

    pub fn is_opposite(self) -> bool {
        self.first.is_opposite(self.second)
    }

    /// All six unordered pairs.
    pub fn all() -> Vec<ExitPair> {
        let mut v = Vec::new();
        for (i, a) in Direction::ALL.iter().enumerate() {
            for b in &Direction::ALL[i + 1..] {
                v.push(ExitPair::new(*a, *b).unwrap());
            }
        }
        v.sort();
        v
    }

    pub fn rotate(self, r: Rotation) -> ExitPair {
        ExitPair::new(self.first.rotate(r), self.second.rotate(r)).unwrap()
    }
}

impl fmt::Display for ExitPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.first, self.second)
    }
}
