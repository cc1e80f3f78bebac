use thiserror::Error;

use crate::geom::{Cell, Direction};

/// A text file that does not conform to its format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("grid dimensions must be positive, got {cols}x{rows}")]
    EmptyGrid { cols: i32, rows: i32 },
    #[error("edge {0} -- {1} is not a unit grid edge")]
    NonUnitEdge(Cell, Cell),
    #[error("vertex {0} lies outside the grid")]
    OutOfRange(Cell),
    #[error("duplicate edge {0} -- {1}")]
    DuplicateEdge(Cell, Cell),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopError {
    #[error("a loop needs at least 4 cells, got {0}")]
    TooShort(usize),
    #[error("cell {0} is visited twice")]
    Repeated(Cell),
    #[error("consecutive cells {0} and {1} are not orthogonally adjacent")]
    NotAdjacent(Cell, Cell),
    #[error("cell {0} lies outside the {1}x{2} board")]
    OffBoard(Cell, i32, i32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("cell {cell} lies outside the {size}x{size} frame")]
    OutOfFrame { cell: Cell, size: i32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HamCycleError {
    #[error("cycle has {got} vertices but the graph has {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("vertex {0} repeats or is not in the graph")]
    BadVertex(Cell),
    #[error("{0} -- {1} is not an edge of the graph")]
    MissingEdge(Cell, Cell),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("{cols}x{rows} grid has {free} free edges, more than the limit of {limit}")]
    TooLarge { cols: i32, rows: i32, free: usize, limit: usize },
    #[error("no candidate subgraph exists for a {cols}x{rows} grid")]
    Infeasible { cols: i32, rows: i32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameworkError {
    #[error("vertex {vertex} has degree {degree}; T-metacells need degree 2 or 3")]
    BadDegree { vertex: Cell, degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error("exit plan is for a {plan_cols}x{plan_rows} grid, graph is {cols}x{rows}")]
    SizeMismatch { cols: i32, rows: i32, plan_cols: i32, plan_rows: i32 },
    #[error("vertex {vertex} has a graph edge toward {side} but no exit there")]
    MissingExit { vertex: Cell, side: Direction },
    #[error("exit cells of {0} and {1} do not line up across their shared border")]
    Misaligned(Cell, Cell),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegionError {
    #[error("unknown region id {0}")]
    UnknownRegion(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("loop cell {0} lies off the board")]
    OffBoard(Cell),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("no local path for exit pair {pair} at vertex {vertex}")]
    MissingPath { vertex: Cell, pair: crate::geom::ExitPair },
    #[error("cycle uses side {side} of vertex {vertex}, which is not an exit")]
    NotAnExit { vertex: Cell, side: Direction },
    #[error(transparent)]
    Compile(#[from] CompileError),
    #[error("assembled cells do not form a loop: {0}")]
    BadLoop(#[from] LoopError),
}

/// A puzzle solution that does not map back to a Hamiltonian cycle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("not a loop on the board: {0}")]
    BadLoop(#[from] LoopError),
    #[error("metacell {vertex} is crossed {count} times, expected 2")]
    CrossingCount { vertex: Cell, count: usize },
    #[error("border crossing {0} -> {1} is off the exit midline")]
    OffMidline(Cell, Cell),
    #[error("border crossing {0} -> {1} is not between mutual exits")]
    NonMutual(Cell, Cell),
    #[error("induced vertex sequence is not a Hamiltonian cycle: {0}")]
    NotHamiltonian(#[from] HamCycleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("enumeration for pair {pair} exceeded the budget of {budget} nodes")]
    Budget { pair: String, budget: u64 },
}
