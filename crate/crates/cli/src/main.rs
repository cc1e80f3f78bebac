//! `loopred` command-line front end.
//!
//! Exit codes: 0 accepted / solved / agreement, 1 rejected / unsatisfiable /
//! disagreement, 2 budget exhausted, 3 bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use loopred::enumerate::seeded_candidates;
use loopred::framework::{emit_exit_plan, plan_for, SeedRule};
use loopred::graph::{emit_graph, parse_graph, GridGraph};
use loopred::ham::{count_hamiltonian_cycles, find_hamiltonian_cycle, HamSearch};
use loopred::lab::{
    certify_gadget, emit_certificate, emit_report, lift_solution, parse_board, roundtrip_experiment, PuzzleBoard, PuzzleKind,
    RoundtripConfig,
};
use loopred::loops::{emit_loop, parse_loop};
use loopred::render::{render, RenderFormat};
use loopred::search::{SearchStatus, SolveMode};
use loopred::Cell;

#[derive(Parser, Debug)]
#[command(name = "loopred", version, about = "Grid-graph Hamiltonicity reductions to All or Nothing and Water Walk")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Draw seeded random candidate subgraphs.
    Gen {
        #[arg(long)]
        cols: i32,
        #[arg(long)]
        rows: i32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Directory for `graph-<i>.txt` files; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a Hamiltonian cycle, or count them with `--all`.
    Ham {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Orient the complement graph and dump the exit plan.
    Orient {
        #[command(flatten)]
        io: Io,
        /// Flip mask over complement components; the default orientation when absent.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Compile a graph into a puzzle board.
    Compile {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        puzzle: PuzzleKind,
    },
    /// Solve a board: first solution, or all up to `--cap` with `--all`.
    Solve {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1000)]
        cap: usize,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Check a loop against a board.
    Verify {
        #[command(flatten)]
        io: Io,
        #[arg(long = "loop")]
        loop_file: PathBuf,
    },
    /// Map a puzzle loop on the compiled board back to a Hamiltonian cycle.
    Lift {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        puzzle: PuzzleKind,
        #[arg(long = "loop")]
        loop_file: PathBuf,
    },
    /// Compare solvability with Hamiltonicity over every candidate subgraph.
    Roundtrip {
        #[arg(long)]
        puzzle: PuzzleKind,
        #[arg(long)]
        cols: i32,
        #[arg(long)]
        rows: i32,
        #[arg(long, default_value_t = RoundtripConfig::default().budget)]
        budget: u64,
        #[arg(long, default_value_t = RoundtripConfig::default().cap)]
        cap: usize,
        /// Directory for the report and counterexample dumps; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the gadget's local traversals.
    Lab {
        #[arg(long)]
        puzzle: PuzzleKind,
        #[arg(long, default_value_t = 1_000_000_000)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a board with an optional loop.
    Render {
        #[command(flatten)]
        io: Io,
        #[arg(long = "loop")]
        loop_file: Option<PathBuf>,
        #[arg(long, default_value = "ascii")]
        format: RenderFormat,
    },
}

#[derive(Args, Debug)]
struct Io {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failed run and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 3, message: message.into() }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| input_error(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<GridGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_board(path: &Path) -> Result<PuzzleBoard, Failure> {
    parse_board(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_loop(path: &Path) -> Result<Vec<Cell>, Failure> {
    parse_loop(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn status_code(found: bool, status: SearchStatus) -> u8 {
    match (found, status) {
        (true, _) => 0,
        (false, SearchStatus::BudgetExhausted) => 2,
        (false, _) => 1,
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Gen { cols, rows, seed, count, out } => {
            let graphs = seeded_candidates(cols, rows, seed, count).map_err(|e| input_error(e.to_string()))?;
            match out {
                Some(dir) => {
                    fs::create_dir_all(&dir).map_err(|e| input_error(format!("{}: {e}", dir.display())))?;
                    for (i, g) in graphs.iter().enumerate() {
                        write_out(Some(&dir.join(format!("graph-{i}.txt"))), &emit_graph(g))?;
                    }
                }
                None => {
                    let text: Vec<String> = graphs.iter().map(emit_graph).collect();
                    print!("{}", text.join("\n"));
                }
            }
            Ok(0)
        }
        Command::Ham { io, all, budget } => {
            let g = load_graph(&io.input)?;
            if all {
                return match count_hamiltonian_cycles(&g, budget) {
                    Ok(n) => {
                        write_out(io.out.as_deref(), &format!("cycles {n}\n"))?;
                        Ok(if n > 0 { 0 } else { 1 })
                    }
                    Err(_) => Err(Failure { code: 2, message: format!("budget of {budget} nodes exhausted") }),
                };
            }
            match find_hamiltonian_cycle(&g, budget) {
                HamSearch::Found(c) => {
                    write_out(io.out.as_deref(), &emit_loop(c.vertices()))?;
                    Ok(0)
                }
                HamSearch::NoCycle => {
                    eprintln!("no Hamiltonian cycle");
                    Ok(1)
                }
                HamSearch::BudgetExhausted => Err(Failure { code: 2, message: format!("budget of {budget} nodes exhausted") }),
            }
        }
        Command::Orient { io, seed } => {
            let g = load_graph(&io.input)?;
            let rule = seed.map_or(SeedRule::LexMinTail, SeedRule::Flip);
            let plan = plan_for(&g, rule).map_err(|e| input_error(e.to_string()))?;
            write_out(io.out.as_deref(), &emit_exit_plan(&plan))?;
            Ok(0)
        }
        Command::Compile { io, puzzle } => {
            let g = load_graph(&io.input)?;
            let plan = plan_for(&g, SeedRule::LexMinTail).map_err(|e| input_error(e.to_string()))?;
            let board = puzzle.compile(&g, &plan).map_err(|e| input_error(e.to_string()))?;
            write_out(io.out.as_deref(), &board.emit())?;
            Ok(0)
        }
        Command::Solve { io, all, cap, budget } => {
            let board = load_board(&io.input)?;
            let mode = if all { SolveMode::Count { cap } } else { SolveMode::First };
            let res = board.solve(mode, budget);
            let mut text = String::new();
            if all {
                text.push_str(&format!("solutions {}\n", res.solutions.len()));
            }
            for l in &res.solutions {
                text.push_str(&emit_loop(l.cells()));
            }
            write_out(io.out.as_deref(), &text)?;
            let code = status_code(!res.solutions.is_empty(), res.status);
            match code {
                1 => eprintln!("unsatisfiable"),
                2 => eprintln!("budget of {budget} nodes exhausted"),
                _ if res.is_budget_exhausted() => eprintln!("budget exhausted; the count is a lower bound"),
                _ => {}
            }
            Ok(code)
        }
        Command::Verify { io, loop_file } => {
            let board = load_board(&io.input)?;
            let cells = load_loop(&loop_file)?;
            let (ok, text) = board.verify(&cells);
            if text.starts_with("malformed") {
                return Err(input_error(text));
            }
            write_out(io.out.as_deref(), &format!("{text}\n"))?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Lift { io, puzzle, loop_file } => {
            let g = load_graph(&io.input)?;
            let cells = load_loop(&loop_file)?;
            let plan = plan_for(&g, SeedRule::LexMinTail).map_err(|e| input_error(e.to_string()))?;
            let board = puzzle.compile(&g, &plan).map_err(|e| input_error(e.to_string()))?;
            let (ok, text) = board.verify(&cells);
            if !ok {
                return Err(Failure { code: 1, message: format!("loop is not a solution: {text}") });
            }
            let c = lift_solution(&g, &plan, &cells, puzzle).map_err(|e| Failure { code: 1, message: format!("lift failed: {e}") })?;
            write_out(io.out.as_deref(), &emit_loop(c.vertices()))?;
            Ok(0)
        }
        Command::Roundtrip { puzzle, cols, rows, budget, cap, out } => {
            let config = RoundtripConfig { budget, cap, ..RoundtripConfig::default() };
            let report = roundtrip_experiment(cols, rows, puzzle, config).map_err(|e| input_error(e.to_string()))?;
            let text = emit_report(&report);
            match &out {
                Some(dir) => {
                    fs::create_dir_all(dir).map_err(|e| input_error(format!("{}: {e}", dir.display())))?;
                    write_out(Some(&dir.join("report.txt")), &text)?;
                    for (k, c) in report.counterexamples.iter().enumerate() {
                        let stem = format!("cex-{k}-instance-{}", c.index);
                        write_out(Some(&dir.join(format!("{stem}.graph"))), &c.graph)?;
                        write_out(Some(&dir.join(format!("{stem}.{puzzle}"))), &c.instance)?;
                        if let Some(l) = &c.loop_text {
                            write_out(Some(&dir.join(format!("{stem}.loop"))), l)?;
                        }
                    }
                }
                None => print!("{text}"),
            }
            Ok(if report.disagreements() > 0 {
                1
            } else if report.timeouts() > 0 {
                2
            } else {
                0
            })
        }
        Command::Lab { puzzle, budget, out } => {
            let cert = certify_gadget(puzzle, budget).map_err(|e| Failure { code: 2, message: e.to_string() })?;
            write_out(out.as_deref(), &emit_certificate(&cert))?;
            eprintln!("elapsed {:.3}s", cert.elapsed.as_secs_f64());
            Ok(0)
        }
        Command::Render { io, loop_file, format } => {
            let board = load_board(&io.input)?;
            let cells = match &loop_file {
                Some(p) => load_loop(p)?,
                None => Vec::new(),
            };
            let text = render(&board, &cells, format).map_err(|e| input_error(e.to_string()))?;
            write_out(io.out.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
