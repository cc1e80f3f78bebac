//! Water Walk boards: file format and compilation from a graph.
//!
//! ```text
//! ww <width> <height>
//! <width characters>   (height rows, top row first)
//! ```
//!
//! `~` is water, `.` plain ground, `1`-`9` numbered ground.

use super::gadget::{self, NUMBER, NUMBER_CELL, WW_NON_EXIT, WW_SIZE};
use crate::error::{CompileError, ParseError};
use crate::framework::ExitPlan;
use crate::geom::Cell;
use crate::graph::{content_lines, GridGraph};
use crate::metacell::{check_plan, Provenance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Terrain {
    Ground,
    Water,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WwInstance {
    width: i32,
    height: i32,
    terrain: Vec<Terrain>,
    numbers: Vec<Option<u8>>,
    provenance: Option<Provenance>,
}

impl WwInstance {
    /// All-water board.
    pub fn water(width: i32, height: i32) -> WwInstance {
        let n = (width * height) as usize;
        WwInstance { width, height, terrain: vec![Terrain::Water; n], numbers: vec![None; n], provenance: None }
    }

    pub fn width(&self) -> i32 {
        self.width
    }

    pub fn height(&self) -> i32 {
        self.height
    }

    fn idx(&self, c: Cell) -> usize {
        (c.y * self.width + c.x) as usize
    }

    pub fn terrain(&self, c: Cell) -> Terrain {
        self.terrain[self.idx(c)]
    }

    pub fn is_ground(&self, c: Cell) -> bool {
        self.terrain(c) == Terrain::Ground
    }

    pub fn number(&self, c: Cell) -> Option<u8> {
        self.numbers[self.idx(c)]
    }

    pub fn set_ground(&mut self, c: Cell) {
        let i = self.idx(c);
        self.terrain[i] = Terrain::Ground;
    }

    /// Place a number; the cell becomes ground.
    pub fn set_number(&mut self, c: Cell, n: u8) {
        let i = self.idx(c);
        self.terrain[i] = Terrain::Ground;
        self.numbers[i] = Some(n);
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let w = self.width;
        (0..self.height).flat_map(move |y| (0..w).map(move |x| Cell::new(x, y)))
    }

    /// Numbered cells in `Cell` order.
    pub fn numbered_cells(&self) -> Vec<Cell> {
        let mut v: Vec<Cell> = self.cells().filter(|&c| self.number(c).is_some()).collect();
        v.sort();
        v
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }
}

pub fn parse_ww(text: &str) -> Result<WwInstance, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing `ww` header"))?;
    let (w, h) = match header.as_slice() {
        ["ww", w, h] => match (w.parse::<i32>(), h.parse::<i32>()) {
            (Ok(w), Ok(h)) if w > 0 && h > 0 => (w, h),
            _ => return Err(ParseError::new(hl, "board dimensions must be positive integers")),
        },
        _ => return Err(ParseError::new(hl, "expected `ww <width> <height>`")),
    };
    let mut inst = WwInstance::water(w, h);
    let mut y = h - 1;
    let mut last = hl;
    for (ln, toks) in lines {
        if y < 0 {
            return Err(ParseError::new(ln, "trailing content after the last row"));
        }
        let row = match toks.as_slice() {
            [row] if row.chars().count() == w as usize => *row,
            _ => return Err(ParseError::new(ln, format!("expected one row of {w} characters"))),
        };
        for (x, ch) in row.chars().enumerate() {
            let c = Cell::new(x as i32, y);
            match ch {
                '~' => {}
                '.' => inst.set_ground(c),
                '1'..='9' => inst.set_number(c, ch as u8 - b'0'),
                _ => return Err(ParseError::new(ln, format!("unknown terrain character `{ch}`"))),
            }
        }
        last = ln;
        y -= 1;
    }
    if y >= 0 {
        return Err(ParseError::new(last, format!("expected {h} rows, found {}", h - 1 - y)));
    }
    Ok(inst)
}

pub fn emit_ww(inst: &WwInstance) -> String {
    let mut s = format!("ww {} {}\n", inst.width, inst.height);
    for y in (0..inst.height).rev() {
        for x in 0..inst.width {
            s.push(cell_char(inst, Cell::new(x, y)));
        }
        s.push('\n');
    }
    s
}

pub(crate) fn cell_char(inst: &WwInstance, c: Cell) -> char {
    match (inst.terrain(c), inst.number(c)) {
        (_, Some(n)) => char::from(b'0' + n),
        (Terrain::Ground, None) => '.',
        (Terrain::Water, None) => '~',
    }
}

pub fn compile_ww(g: &GridGraph, plan: &ExitPlan) -> Result<WwInstance, CompileError> {
    let prov = Provenance::new(WW_SIZE, plan, WW_NON_EXIT);
    check_plan(g, plan, WW_SIZE, |v, side| {
        let canon = side.rotate(prov.rotation(v).inverse());
        prov.to_global(v, gadget::exit_cell(canon).expect("exit sides have exit cells"))
    })?;
    let mut inst = WwInstance::water(WW_SIZE * g.cols(), WW_SIZE * g.rows());
    for v in g.vertices() {
        for c in gadget::GROUND {
            inst.set_ground(prov.to_global(v, c));
        }
        inst.set_number(prov.to_global(v, NUMBER_CELL), NUMBER);
    }
    inst.provenance = Some(prov);
    Ok(inst)
}
