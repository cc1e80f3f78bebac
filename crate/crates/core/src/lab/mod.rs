//! End-to-end checks of the reductions: embedding cycles as puzzle
//! solutions, lifting solutions back to cycles, gadget certification and
//! exhaustive round trips.

pub mod certify;
pub mod embed;
pub mod lift;
pub mod roundtrip;

use std::fmt;
use std::str::FromStr;

use crate::aon::{self, AonInstance};
use crate::error::CompileError;
use crate::framework::ExitPlan;
use crate::geom::{Cell, Direction};
use crate::graph::GridGraph;
use crate::metacell::Provenance;
use crate::search::{SolveMode, SolveResult};
use crate::waterwalk::{self, WwInstance};

pub use certify::{certify_gadget, certify_gadget_rotated, emit_certificate, GadgetCertificate};
pub use embed::{embed_cycle, embed_cycle_with, PathTable, TraversalWitness};
pub use lift::lift_solution;
pub use roundtrip::{emit_report, roundtrip_experiment, RoundtripConfig, RoundtripReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PuzzleKind {
    Aon,
    Ww,
}

impl PuzzleKind {
    pub const ALL: [PuzzleKind; 2] = [PuzzleKind::Aon, PuzzleKind::Ww];

    pub fn gadget_size(self) -> i32 {
        match self {
            PuzzleKind::Aon => aon::gadget::AON_SIZE,
            PuzzleKind::Ww => waterwalk::gadget::WW_SIZE,
        }
    }

    pub fn canonical_non_exit(self) -> Direction {
        match self {
            PuzzleKind::Aon => aon::gadget::AON_NON_EXIT,
            PuzzleKind::Ww => waterwalk::gadget::WW_NON_EXIT,
        }
    }

    pub fn provenance(self, plan: &ExitPlan) -> Provenance {
        Provenance::new(self.gadget_size(), plan, self.canonical_non_exit())
    }

    pub fn compile(self, g: &GridGraph, plan: &ExitPlan) -> Result<PuzzleBoard, CompileError> {
        Ok(match self {
            PuzzleKind::Aon => PuzzleBoard::Aon(aon::compile_aon(g, plan)?),
            PuzzleKind::Ww => PuzzleBoard::Ww(waterwalk::compile_ww(g, plan)?),
        })
    }
}

impl fmt::Display for PuzzleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PuzzleKind::Aon => "aon",
            PuzzleKind::Ww => "ww",
        })
    }
}

impl FromStr for PuzzleKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "aon" => Ok(PuzzleKind::Aon),
            "ww" => Ok(PuzzleKind::Ww),
            other => Err(format!("unknown puzzle `{other}`, expected `aon` or `ww`")),
        }
    }
}

/// A board of either puzzle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PuzzleBoard {
    Aon(AonInstance),
    Ww(WwInstance),
}

impl PuzzleBoard {
    pub fn kind(&self) -> PuzzleKind {
        match self {
            PuzzleBoard::Aon(_) => PuzzleKind::Aon,
            PuzzleBoard::Ww(_) => PuzzleKind::Ww,
        }
    }

    /// Verifier outcome rendered as text, and whether it accepted.
    pub fn verify(&self, cells: &[Cell]) -> (bool, String) {
        match self {
            PuzzleBoard::Aon(i) => {
                let v = aon::verify_aon(i, cells);
                (v.is_accept(), v.to_string())
            }
            PuzzleBoard::Ww(i) => {
                let v = waterwalk::verify_ww(i, cells);
                (v.is_accept(), v.to_string())
            }
        }
    }

    pub fn solve(&self, mode: SolveMode, budget: u64) -> SolveResult {
        match self {
            PuzzleBoard::Aon(i) => aon::solve_aon(i, mode, budget),
            PuzzleBoard::Ww(i) => waterwalk::solve_ww(i, mode, budget),
        }
    }

    pub fn emit(&self) -> String {
        match self {
            PuzzleBoard::Aon(i) => aon::emit_aon(i),
            PuzzleBoard::Ww(i) => waterwalk::emit_ww(i),
        }
    }

    pub fn width(&self) -> i32 {
        match self {
            PuzzleBoard::Aon(i) => i.width(),
            PuzzleBoard::Ww(i) => i.width(),
        }
    }

    pub fn height(&self) -> i32 {
        match self {
            PuzzleBoard::Aon(i) => i.height(),
            PuzzleBoard::Ww(i) => i.height(),
        }
    }
}

/// Parse a board file of either kind, chosen by its header word.
pub fn parse_board(text: &str) -> Result<PuzzleBoard, crate::error::ParseError> {
    let first = text.lines().find(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#')).unwrap_or("");
    match first.split_whitespace().next() {
        Some("ww") => waterwalk::parse_ww(text).map(PuzzleBoard::Ww),
        _ => aon::parse_aon(text).map(PuzzleBoard::Aon),
    }
}
