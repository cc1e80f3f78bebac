//! Reductions from Hamiltonian cycle on max-degree-3 grid graphs to the
//! All or Nothing and Water Walk loop puzzles, built from T-metacells.

pub mod aon;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod framework;
pub mod geom;
pub mod graph;
pub mod ham;
pub mod lab;
pub mod loops;
pub mod metacell;
pub mod regions;
pub mod render;
pub mod search;
pub mod verdict;
pub mod waterwalk;

pub use error::*;
pub use geom::{Cell, Direction, ExitPair, Rotation};
pub use graph::{GridGraph, Vertex};
pub use ham::HamCycle;
pub use loops::LoopPath;
