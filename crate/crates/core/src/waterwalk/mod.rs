//! Water Walk: gadget, boards, rule checker and solver.

pub mod gadget;
pub mod instance;
pub mod solve;
pub mod verify;

pub use instance::{compile_ww, emit_ww, parse_ww, Terrain, WwInstance};
pub use solve::solve_ww;
pub use verify::{verify_ww, WwVerdict, WwViolation};
