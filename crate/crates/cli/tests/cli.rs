//! Each subcommand's output equals the library call it wraps.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use loopred::enumerate::seeded_candidates;
use loopred::fixtures::{SAMPLE_GRAPH, SAMPLE_AON, SAMPLE_AON_LOOP, SAMPLE_WW_LOOP, SAMPLE_WW};
use loopred::framework::{emit_exit_plan, plan_for, SeedRule};
use loopred::graph::{emit_graph, parse_graph, GridGraph};
use loopred::ham::{find_hamiltonian_cycle, HamSearch};
use loopred::lab::{certify_gadget, emit_certificate, emit_report, parse_board, roundtrip_experiment, PuzzleKind, RoundtripConfig};
use loopred::loops::{emit_loop, parse_loop};
use loopred::render::{render, RenderFormat};
use loopred::search::SolveMode;

struct Scratch(PathBuf);

impl Scratch {
    fn new(name: &str) -> Scratch {
        let dir = std::env::temp_dir().join(format!("loopred-cli-{}-{name}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.join(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

fn loopred(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopred")).args(args).output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn square() -> GridGraph {
    GridGraph::full(2, 2).unwrap()
}

#[test]
fn gen_is_seeded_and_matches_library() {
    let a = loopred(&["gen", "--cols", "3", "--rows", "3", "--seed", "7", "--count", "5"]);
    let b = loopred(&["gen", "--cols", "3", "--rows", "3", "--seed", "7", "--count", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lib: Vec<String> = seeded_candidates(3, 3, 7, 5).unwrap().iter().map(emit_graph).collect();
    assert_eq!(stdout(&a), lib.join("\n"));
    let one = loopred(&["gen", "--cols", "2", "--rows", "2", "--seed", "1", "--count", "1"]);
    assert_eq!(parse_graph(&stdout(&one)).unwrap(), square());
}

#[test]
fn gen_writes_files_and_rejects_bad_sizes() {
    let dir = Scratch::new("gen");
    let o = loopred(&["gen", "--cols", "4", "--rows", "3", "--seed", "2", "--count", "3", "--out", s(&dir.0)]);
    assert_eq!(o.status.code(), Some(0));
    let lib = seeded_candidates(4, 3, 2, 3).unwrap();
    for (i, g) in lib.iter().enumerate() {
        assert_eq!(fs::read_to_string(dir.path(&format!("graph-{i}.txt"))).unwrap(), emit_graph(g));
    }
    assert_eq!(loopred(&["gen", "--cols", "1", "--rows", "3"]).status.code(), Some(3));
}

#[test]
fn ham_and_orient() {
    let dir = Scratch::new("ham");
    let g = dir.file("g.txt", SAMPLE_GRAPH);
    let graph = parse_graph(SAMPLE_GRAPH).unwrap();
    let o = loopred(&["ham", "--in", s(&g)]);
    let expected = match find_hamiltonian_cycle(&graph, 10_000_000) {
        HamSearch::Found(c) => (0, emit_loop(c.vertices())),
        _ => (1, String::new()),
    };
    assert_eq!((o.status.code().unwrap(), stdout(&o)), expected);
    let o = loopred(&["orient", "--in", s(&g)]);
    assert_eq!(stdout(&o), emit_exit_plan(&plan_for(&graph, SeedRule::LexMinTail).unwrap()));
    let o = loopred(&["orient", "--in", s(&g), "--seed", "3"]);
    assert_eq!(stdout(&o), emit_exit_plan(&plan_for(&graph, SeedRule::Flip(3)).unwrap()));
    let odd = dir.file("odd.txt", &emit_graph(&GridGraph::full(3, 3).unwrap()));
    assert_eq!(loopred(&["ham", "--in", s(&odd)]).status.code(), Some(1));
    let o = loopred(&["ham", "--in", s(&odd), "--all"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(1), "cycles 0\n".to_string()));
}

#[test]
fn compile_solve_verify_lift() {
    let dir = Scratch::new("pipeline");
    let g = dir.file("g.txt", &emit_graph(&square()));
    let plan = plan_for(&square(), SeedRule::LexMinTail).unwrap();
    for kind in PuzzleKind::ALL {
        let board_path = dir.path(&format!("b.{kind}"));
        let o = loopred(&["compile", "--puzzle", &kind.to_string(), "--in", s(&g), "--out", s(&board_path)]);
        assert_eq!(o.status.code(), Some(0));
        let board = kind.compile(&square(), &plan).unwrap();
        assert_eq!(fs::read_to_string(&board_path).unwrap(), board.emit());

        let o = loopred(&["solve", "--in", s(&board_path)]);
        assert_eq!(o.status.code(), Some(0));
        let first = board.solve(SolveMode::First, 100_000_000);
        assert_eq!(stdout(&o), emit_loop(first.solutions[0].cells()));
        let loop_path = dir.file(&format!("{kind}.loop"), &stdout(&o));

        let o = loopred(&["verify", "--in", s(&board_path), "--loop", s(&loop_path)]);
        assert_eq!((o.status.code(), stdout(&o)), (Some(0), "accept\n".to_string()));

        let o = loopred(&["lift", "--puzzle", &kind.to_string(), "--in", s(&g), "--loop", s(&loop_path)]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(parse_loop(&stdout(&o)).unwrap().len(), 4);
    }
}

#[test]
fn solve_all_counts_and_budget_exit() {
    let dir = Scratch::new("solve");
    let b = dir.file("sample.ww", SAMPLE_WW);
    let o = loopred(&["solve", "--in", s(&b), "--all"]);
    let lib = parse_board(SAMPLE_WW).unwrap().solve(SolveMode::Count { cap: 1000 }, 100_000_000);
    let mut expected = format!("solutions {}\n", lib.solutions.len());
    for l in &lib.solutions {
        expected.push_str(&emit_loop(l.cells()));
    }
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), expected));
    assert_eq!(loopred(&["solve", "--in", s(&b), "--budget", "1"]).status.code(), Some(2));
    let unsat = dir.file("unsat.ww", "ww 3 3\n~~~\n~1~\n~~~\n");
    assert_eq!(loopred(&["solve", "--in", s(&unsat)]).status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let dir = Scratch::new("verify");
    let ww = dir.file("sample.ww", SAMPLE_WW);
    let good = dir.file("sample.loop", SAMPLE_WW_LOOP);
    assert_eq!(loopred(&["verify", "--in", s(&ww), "--loop", s(&good)]).status.code(), Some(0));
    let aon = dir.file("sample-aon.aon", SAMPLE_AON);
    let aon_loop = dir.file("sample-aon.loop", SAMPLE_AON_LOOP);
    assert_eq!(loopred(&["verify", "--in", s(&aon), "--loop", s(&aon_loop)]).status.code(), Some(0));
    // the AoN sample loop on the Water Walk board misses the numbered cells
    let o = loopred(&["verify", "--in", s(&ww), "--loop", s(&aon_loop)]);
    assert!(matches!(o.status.code(), Some(1 | 3)));
    let repeated = dir.file("rep.loop", "loop 4\n0 0\n1 0\n0 0\n1 0\n");
    let o = loopred(&["verify", "--in", s(&ww), "--loop", s(&repeated)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed loop"));
    let missing = dir.path("nope.loop");
    assert_eq!(loopred(&["verify", "--in", s(&ww), "--loop", s(&missing)]).status.code(), Some(3));
    let garbage = dir.file("garbage.ww", "ww 2 2\n~~\n");
    assert_eq!(loopred(&["verify", "--in", s(&garbage), "--loop", s(&good)]).status.code(), Some(3));
}

#[test]
fn lab_prints_the_certificate() {
    let o = loopred(&["lab", "--puzzle", "ww"]);
    assert_eq!(o.status.code(), Some(0));
    let lib = certify_gadget(PuzzleKind::Ww, 1_000_000_000).unwrap();
    assert_eq!(stdout(&o), emit_certificate(&lib));
    for line in ["pair S E count 2", "pair N E count 2", "pair S N count 3"] {
        assert!(stdout(&o).contains(line));
    }
    assert_eq!(loopred(&["lab", "--puzzle", "ww", "--budget", "5"]).status.code(), Some(2));
    assert_eq!(loopred(&["lab", "--puzzle", "xyz"]).status.code(), Some(3));
}

#[test]
fn roundtrip_report() {
    let o = loopred(&["roundtrip", "--puzzle", "ww", "--cols", "2", "--rows", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let lib = roundtrip_experiment(2, 3, PuzzleKind::Ww, RoundtripConfig::default()).unwrap();
    assert_eq!(stdout(&o), emit_report(&lib));
    let dir = Scratch::new("roundtrip");
    let o = loopred(&["roundtrip", "--puzzle", "aon", "--cols", "2", "--rows", "2", "--out", s(&dir.0)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(dir.path("report.txt")).unwrap().ends_with("disagree 0 timeout 0\n"));
    let starved = loopred(&["roundtrip", "--puzzle", "ww", "--cols", "2", "--rows", "2", "--budget", "3"]);
    assert_eq!(starved.status.code(), Some(2));
}

#[test]
fn render_matches_library() {
    let dir = Scratch::new("render");
    let b = dir.file("sample.ww", SAMPLE_WW);
    let l = dir.file("sample.loop", SAMPLE_WW_LOOP);
    let board = parse_board(SAMPLE_WW).unwrap();
    let cells = parse_loop(SAMPLE_WW_LOOP).unwrap();
    let o = loopred(&["render", "--in", s(&b)]);
    assert_eq!(stdout(&o), render(&board, &[], RenderFormat::Ascii).unwrap());
    assert_eq!(stdout(&o), SAMPLE_WW.split_once('\n').unwrap().1);
    let o = loopred(&["render", "--in", s(&b), "--loop", s(&l)]);
    assert_eq!(stdout(&o).matches('#').count(), 14);
    let svg = dir.path("sample.svg");
    let o = loopred(&["render", "--in", s(&b), "--loop", s(&l), "--format", "svg", "--out", s(&svg)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&svg).unwrap(), render(&board, &cells, RenderFormat::Svg).unwrap());
    let off = dir.file("off.loop", "loop 4\n9 9\n10 9\n10 10\n9 10\n");
    assert_eq!(loopred(&["render", "--in", s(&b), "--loop", s(&off)]).status.code(), Some(3));
}
