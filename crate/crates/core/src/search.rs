//! Shared solver vocabulary.

use crate::loops::LoopPath;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMode {
    /// Stop at the first solution.
    First,
    /// Enumerate distinct solutions (up to rotation and reversal), stopping at `cap`.
    Count { cap: usize },
}

impl SolveMode {
    pub(crate) fn cap(self) -> usize {
        match self {
            SolveMode::First => 1,
            SolveMode::Count { cap } => cap,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// The whole search space was explored.
    Complete,
    /// Stopped early after reaching the requested number of solutions.
    CapReached,
    /// Node budget ran out; the solutions found so far are reported, absence proves nothing.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Distinct solutions in canonical form, sorted.
    pub solutions: Vec<LoopPath>,
    pub status: SearchStatus,
    pub nodes: u64,
}

impl SolveResult {
    /// Exhaustive search finished without a solution.
    pub fn is_unsat(&self) -> bool {
        self.status == SearchStatus::Complete && self.solutions.is_empty()
    }

    pub fn is_budget_exhausted(&self) -> bool {
        self.status == SearchStatus::BudgetExhausted
    }
}

/// Budget counter shared by the sub-searches of one solve call.
#[derive(Debug)]
pub(crate) struct Budget {
    pub nodes: u64,
    pub limit: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { nodes: 0, limit }
    }

    /// Count one node; `false` once the limit is passed.
    pub fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.limit
    }
}
