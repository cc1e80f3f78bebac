//! Text and SVG pictures of boards, with an optional loop overlay.
//!
//! All or Nothing ascii uses a `(2w+1) x (2h+1)` character grid: lattice
//! points `+`, region borders `|` and `-`, cells in the odd positions.
//! Water Walk ascii is the file body. In both, loop cells show as `#`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::aon::AonInstance;
use crate::error::RenderError;
use crate::geom::Cell;
use crate::lab::PuzzleBoard;
use crate::regions::Segment;
use crate::waterwalk::instance::cell_char;
use crate::waterwalk::WwInstance;

const UNIT: i32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(format!("unknown format `{other}`, expected `ascii` or `svg`")),
        }
    }
}

/// Render `board`; an empty `cells` draws the board alone.
pub fn render(board: &PuzzleBoard, cells: &[Cell], format: RenderFormat) -> Result<String, RenderError> {
    if let Some(&c) = cells.iter().find(|c| !c.in_bounds(board.width(), board.height())) {
        return Err(RenderError::OffBoard(c));
    }
    let on_loop: BTreeSet<Cell> = cells.iter().copied().collect();
    Ok(match (board, format) {
        (PuzzleBoard::Aon(i), RenderFormat::Ascii) => aon_ascii(i, &on_loop),
        (PuzzleBoard::Ww(i), RenderFormat::Ascii) => ww_ascii(i, &on_loop),
        (b, RenderFormat::Svg) => svg(b, cells),
    })
}

/// Borders drawn for an All or Nothing board: internal boundaries plus the perimeter.
fn separates(inst: &AonInstance, a: Cell, b: Cell) -> bool {
    let (w, h) = (inst.width(), inst.height());
    !a.in_bounds(w, h) || !b.in_bounds(w, h) || inst.regions().region(a) != inst.regions().region(b)
}

fn aon_ascii(inst: &AonInstance, on_loop: &BTreeSet<Cell>) -> String {
    let (w, h) = (inst.width(), inst.height());
    let mut s = String::new();
    for row in (0..=2 * h).rev() {
        for col in 0..=2 * w {
            let ch = match (col % 2, row % 2) {
                (0, 0) => '+',
                (0, 1) => {
                    let c = Cell::new(col / 2, row / 2);
                    if separates(inst, c.offset(-1, 0), c) { '|' } else { ' ' }
                }
                (1, 0) => {
                    let c = Cell::new(col / 2, row / 2);
                    if separates(inst, c.offset(0, -1), c) { '-' } else { ' ' }
                }
                _ => {
                    if on_loop.contains(&Cell::new(col / 2, row / 2)) { '#' } else { ' ' }
                }
            };
            s.push(ch);
        }
        s.push('\n');
    }
    s
}

fn ww_ascii(inst: &WwInstance, on_loop: &BTreeSet<Cell>) -> String {
    let mut s = String::new();
    for y in (0..inst.height()).rev() {
        for x in 0..inst.width() {
            let c = Cell::new(x, y);
            s.push(if on_loop.contains(&c) { '#' } else { cell_char(inst, c) });
        }
        s.push('\n');
    }
    s
}

/// Screen coordinates of lattice point `(x, y)`; the y axis points down on screen.
fn px(h: i32, x: i32, y: i32) -> (i32, i32) {
    (x * UNIT, (h - y) * UNIT)
}

fn svg(board: &PuzzleBoard, cells: &[Cell]) -> String {
    let (w, h) = (board.width(), board.height());
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="-2 -2 {} {}">"#,
        w * UNIT + 4,
        h * UNIT + 4,
        w * UNIT + 4,
        h * UNIT + 4
    );
    match board {
        PuzzleBoard::Ww(inst) => {
            for y in 0..h {
                for x in 0..w {
                    let c = Cell::new(x, y);
                    let (sx, sy) = px(h, x, y + 1);
                    let fill = if inst.is_ground(c) { "#ffffff" } else { "#9fc5e8" };
                    let _ = writeln!(
                        s,
                        r##"<rect x="{sx}" y="{sy}" width="{UNIT}" height="{UNIT}" fill="{fill}" stroke="#999999" stroke-width="0.5"/>"##
                    );
                    if let Some(n) = inst.number(c) {
                        let _ = writeln!(
                            s,
                            r#"<text x="{}" y="{}" font-size="14" text-anchor="middle">{n}</text>"#,
                            sx + UNIT / 2,
                            sy + UNIT / 2 + 5
                        );
                    }
                }
            }
        }
        PuzzleBoard::Aon(inst) => {
            for y in 0..h {
                for x in 0..w {
                    let (sx, sy) = px(h, x, y + 1);
                    let _ = writeln!(
                        s,
                        r##"<rect x="{sx}" y="{sy}" width="{UNIT}" height="{UNIT}" fill="none" stroke="#cccccc" stroke-width="0.5"/>"##
                    );
                }
            }
            let mut segs: BTreeSet<Segment> = BTreeSet::new();
            for y in 0..=h {
                for x in 0..=w {
                    let c = Cell::new(x, y);
                    if y < h && separates(inst, c.offset(-1, 0), c) {
                        segs.insert(Segment::V { x, y });
                    }
                    if x < w && separates(inst, c.offset(0, -1), c) {
                        segs.insert(Segment::H { x, y });
                    }
                }
            }
            for seg in segs {
                let ((ax, ay), (bx, by)) = seg.endpoints();
                let ((x1, y1), (x2, y2)) = (px(h, ax, ay), px(h, bx, by));
                let _ = writeln!(
                    s,
                    r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#000000" stroke-width="3" stroke-linecap="square"/>"##
                );
            }
        }
    }
    if !cells.is_empty() {
        let points: Vec<String> = cells
            .iter()
            .map(|c| {
                let (sx, sy) = px(h, c.x, c.y + 1);
                format!("{},{}", sx + UNIT / 2, sy + UNIT / 2)
            })
            .collect();
        let _ = writeln!(
            s,
            r##"<polygon points="{}" fill="none" stroke="#d62728" stroke-width="4" stroke-linejoin="round"/>"##,
            points.join(" ")
        );
    }
    s.push_str("</svg>\n");
    s
}
