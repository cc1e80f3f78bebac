//! Exhaustive reduction experiments: every candidate subgraph of a small grid
//! is compiled, solved, and compared with the Hamiltonicity oracle.

use std::fmt::Write as _;

use super::lift::lift_solution;
use super::PuzzleKind;
use crate::enumerate::enumerate_candidate_subgraphs;
use crate::error::EnumError;
use crate::framework::{plan_for, SeedRule};
use crate::graph::{emit_graph, GridGraph};
use crate::ham::{find_hamiltonian_cycle, HamSearch};
use crate::loops::emit_loop;
use crate::search::{SearchStatus, SolveMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoundtripConfig {
    /// Solver node budget per instance.
    pub budget: u64,
    /// Solutions enumerated (and lifted) per instance.
    pub cap: usize,
    /// Node budget of the Hamiltonicity oracle per instance.
    pub ham_budget: u64,
}

impl Default for RoundtripConfig {
    fn default() -> Self {
        RoundtripConfig { budget: 50_000_000, cap: 4, ham_budget: 10_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tally {
    Agree,
    Disagree,
    /// Some search ran out of budget before deciding; counts for nothing.
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub index: usize,
    pub hamiltonian: Option<bool>,
    pub solutions: usize,
    pub status: SearchStatus,
    pub nodes: u64,
    pub lift_failures: usize,
    pub tally: Tally,
}

/// Files reproducing a disagreement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub index: usize,
    pub reason: String,
    pub graph: String,
    pub instance: String,
    pub loop_text: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    pub kind: PuzzleKind,
    pub cols: i32,
    pub rows: i32,
    pub config: RoundtripConfig,
    pub outcomes: Vec<InstanceOutcome>,
    pub counterexamples: Vec<Counterexample>,
}

impl RoundtripReport {
    fn tally(&self, t: Tally) -> usize {
        self.outcomes.iter().filter(|o| o.tally == t).count()
    }

    pub fn agreements(&self) -> usize {
        self.tally(Tally::Agree)
    }

    pub fn disagreements(&self) -> usize {
        self.tally(Tally::Disagree)
    }

    pub fn timeouts(&self) -> usize {
        self.tally(Tally::Timeout)
    }
}

pub fn roundtrip_experiment(cols: i32, rows: i32, kind: PuzzleKind, config: RoundtripConfig) -> Result<RoundtripReport, EnumError> {
    let mut report = RoundtripReport { kind, cols, rows, config, outcomes: Vec::new(), counterexamples: Vec::new() };
    for (index, g) in enumerate_candidate_subgraphs(cols, rows)?.enumerate() {
        let (outcome, cex) = run_instance(index, &g, kind, &config);
        report.outcomes.push(outcome);
        report.counterexamples.extend(cex);
    }
    Ok(report)
}

fn run_instance(index: usize, g: &GridGraph, kind: PuzzleKind, config: &RoundtripConfig) -> (InstanceOutcome, Vec<Counterexample>) {
    let hamiltonian = match find_hamiltonian_cycle(g, config.ham_budget) {
        HamSearch::Found(_) => Some(true),
        HamSearch::NoCycle => Some(false),
        HamSearch::BudgetExhausted => None,
    };
    let plan = plan_for(g, SeedRule::LexMinTail).expect("candidates have degrees 2 and 3");
    let board = kind.compile(g, &plan).expect("framework plans compile");
    let res = board.solve(SolveMode::Count { cap: config.cap }, config.budget);
    let dump = |reason: String, loop_text: Option<String>| Counterexample {
        index,
        reason,
        graph: emit_graph(g),
        instance: board.emit(),
        loop_text,
    };
    let mut cex = Vec::new();
    for l in &res.solutions {
        if let Err(e) = lift_solution(g, &plan, l.cells(), kind) {
            cex.push(dump(format!("lift failed: {e}"), Some(emit_loop(l.cells()))));
        }
    }
    let lift_failures = cex.len();
    let solvable = if res.solutions.is_empty() && res.is_budget_exhausted() { None } else { Some(!res.solutions.is_empty()) };
    let tally = match (hamiltonian, solvable) {
        _ if lift_failures > 0 => Tally::Disagree,
        (Some(h), Some(s)) if h == s => Tally::Agree,
        (Some(h), Some(s)) => {
            let reason = format!("hamiltonian {} but solvable {}", yes_no(h), yes_no(s));
            cex.push(dump(reason, res.solutions.first().map(|l| emit_loop(l.cells()))));
            Tally::Disagree
        }
        _ => Tally::Timeout,
    };
    let outcome = InstanceOutcome {
        index,
        hamiltonian,
        solutions: res.solutions.len(),
        status: res.status,
        nodes: res.nodes,
        lift_failures,
        tally,
    };
    (outcome, cex)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn status_word(s: SearchStatus) -> &'static str {
    match s {
        SearchStatus::Complete => "complete",
        SearchStatus::CapReached => "cap",
        SearchStatus::BudgetExhausted => "budget",
    }
}

pub fn emit_report(r: &RoundtripReport) -> String {
    let mut s = format!(
        "roundtrip {} {}x{} budget {} cap {}\n",
        r.kind, r.cols, r.rows, r.config.budget, r.config.cap
    );
    for o in &r.outcomes {
        let ham = o.hamiltonian.map_or("unknown", yes_no);
        let tally = match o.tally {
            Tally::Agree => "agree",
            Tally::Disagree => "disagree",
            Tally::Timeout => "timeout",
        };
        let _ = writeln!(
            s,
            "instance {} hamiltonian {ham} solutions {} status {} lift-failures {} result {tally}",
            o.index,
            o.solutions,
            status_word(o.status),
            o.lift_failures
        );
    }
    for c in &r.counterexamples {
        let _ = writeln!(s, "counterexample {} {}", c.index, c.reason);
    }
    let _ = writeln!(
        s,
        "summary instances {} agree {} disagree {} timeout {}",
        r.outcomes.len(),
        r.agreements(),
        r.disagreements(),
        r.timeouts()
    );
    s
}
