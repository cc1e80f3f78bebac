//! All or Nothing boards: file format and compilation from a graph.
//!
//! ```text
//! aon <width> <height>
//! <width region labels>   (height rows, top row first)
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::gadget::{self, AON_NON_EXIT, AON_SIZE};
use crate::error::{CompileError, ParseError};
use crate::framework::ExitPlan;
use crate::geom::Cell;
use crate::graph::{content_lines, GridGraph};
use crate::metacell::{check_plan, Provenance};
use crate::regions::{regions_from_boundaries, BoundaryEdgeSet, RegionDecomposition, Segment};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AonInstance {
    boundaries: BoundaryEdgeSet,
    regions: RegionDecomposition,
    provenance: Option<Provenance>,
}

impl AonInstance {
    pub fn from_boundaries(width: i32, height: i32, boundaries: BoundaryEdgeSet) -> AonInstance {
        let regions = regions_from_boundaries(width, height, &boundaries);
        AonInstance { boundaries, regions, provenance: None }
    }

    pub fn width(&self) -> i32 {
        self.regions.width()
    }

    pub fn height(&self) -> i32 {
        self.regions.height()
    }

    pub fn regions(&self) -> &RegionDecomposition {
        &self.regions
    }

    /// Internal boundaries as built; the board perimeter is implicit.
    pub fn boundaries(&self) -> &BoundaryEdgeSet {
        &self.boundaries
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn region_of(&self, c: Cell) -> usize {
        self.regions.region(c)
    }
}

/// Label for region `id` in emitted files: `A`..`Z`, then `R26`, `R27`, ...
pub fn region_label(id: usize) -> String {
    if id < 26 {
        char::from(b'A' + id as u8).to_string()
    } else {
        format!("R{id}")
    }
}

pub fn parse_aon(text: &str) -> Result<AonInstance, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing `aon` header"))?;
    let (w, h) = match header.as_slice() {
        ["aon", w, h] => match (w.parse::<i32>(), h.parse::<i32>()) {
            (Ok(w), Ok(h)) if w > 0 && h > 0 => (w, h),
            _ => return Err(ParseError::new(hl, "board dimensions must be positive integers")),
        },
        _ => return Err(ParseError::new(hl, "expected `aon <width> <height>`")),
    };
    let mut labels: BTreeMap<Cell, String> = BTreeMap::new();
    let mut row_lines = Vec::new();
    let mut y = h - 1;
    for (ln, toks) in lines {
        if y < 0 {
            return Err(ParseError::new(ln, "trailing content after the last row"));
        }
        if toks.len() != w as usize {
            return Err(ParseError::new(ln, format!("expected {w} labels, found {}", toks.len())));
        }
        for (x, t) in toks.iter().enumerate() {
            if !t.chars().all(|ch| ch.is_ascii_alphanumeric()) {
                return Err(ParseError::new(ln, format!("region label `{t}` is not alphanumeric")));
            }
            labels.insert(Cell::new(x as i32, y), t.to_string());
        }
        row_lines.push(ln);
        y -= 1;
    }
    if y >= 0 {
        let last = row_lines.last().copied().unwrap_or(hl);
        return Err(ParseError::new(last, format!("expected {h} rows, found {}", row_lines.len())));
    }
    let mut b = BoundaryEdgeSet::new();
    for (&c, lab) in &labels {
        for n in [c.offset(1, 0), c.offset(0, 1)] {
            if labels.get(&n).is_some_and(|m| m != lab) {
                b.insert(Segment::separating(c, n).unwrap());
            }
        }
    }
    let inst = AonInstance::from_boundaries(w, h, b);
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for (c, lab) in &labels {
        let id = inst.region_of(*c);
        if *seen.entry(lab.as_str()).or_insert(id) != id {
            let line = row_lines[(h - 1 - c.y) as usize];
            return Err(ParseError::new(line, format!("region `{lab}` is not connected")));
        }
    }
    Ok(inst)
}

pub fn emit_aon(inst: &AonInstance) -> String {
    let mut s = format!("aon {} {}\n", inst.width(), inst.height());
    for y in (0..inst.height()).rev() {
        let row: Vec<String> = (0..inst.width()).map(|x| region_label(inst.region_of(Cell::new(x, y)))).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}

pub fn compile_aon(g: &GridGraph, plan: &ExitPlan) -> Result<AonInstance, CompileError> {
    let prov = Provenance::new(AON_SIZE, plan, AON_NON_EXIT);
    check_plan(g, plan, AON_SIZE, |v, side| {
        let canon = side.rotate(prov.rotation(v).inverse());
        prov.to_global(v, gadget::exit_cell(canon).expect("exit sides have exit cells"))
    })?;
    let canonical = gadget::boundary();
    let mut b = BoundaryEdgeSet::new();
    for v in g.vertices() {
        let o = prov.origin(v);
        b.extend(&canonical.rotated(AON_SIZE, prov.rotation(v)).translated(o.x, o.y));
    }
    let mut inst = AonInstance::from_boundaries(AON_SIZE * g.cols(), AON_SIZE * g.rows(), b);
    inst.provenance = Some(prov);
    Ok(inst)
}
