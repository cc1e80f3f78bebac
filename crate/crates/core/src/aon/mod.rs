//! All or Nothing: gadget, boards, rule checker, dead-region analysis and solver.

pub mod dead;
pub mod gadget;
pub mod instance;
pub mod solve;
pub mod verify;

pub use dead::{analyze_dead_regions, DeadRegionReport, RegionReport, RegionStatus};
pub use instance::{compile_aon, emit_aon, parse_aon, AonInstance};
pub use solve::solve_aon;
pub use verify::{verify_aon, AonVerdict, AonViolation};
