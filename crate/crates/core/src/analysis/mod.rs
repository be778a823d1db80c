//! Exponential-identity checks, exceptional sets and property (*).

pub mod identity;
pub mod report;
pub mod solver;
pub mod star;

pub use identity::{
    commute, condition1_sweep, exp_triple_equal, sweep_records, triple_deviation, ExceptionalSet,
    SweepRecord,
};
pub use report::{analyze, condition3_verdict, AnalysisReport};
pub use solver::{collision_candidates, exceptional_set_solver};
pub use star::{star_decompose, star_verify, star_violations, StarAttempt, StarDecomp};
