//! Equilibrium solvers: benchmark closed forms, regime classification,
//! entry thresholds, and the two telework regimes.

mod benchmark;
mod cbd_fringe;
mod classify;
mod urban_fringe;

pub use benchmark::solve_benchmark;
pub use cbd_fringe::{solve_cbd_fringe_regime, solve_cbd_fringe_regime_with, RingWidthRule};
pub use classify::{
    benchmark_center_condition, benchmark_slope_condition, cbd_entry_bound, classify_first_entry,
    entry_telework_cost, urban_entry_bound, EntryThreshold, THRESHOLD_TOL,
};
pub use urban_fringe::{
    mixed_condition_bounds, solve_fringe_only_closed_form, solve_urban_fringe_regime,
    FringeOnlySolution,
};

/// Residual tolerance the regime solvers drive the boundary conditions to.
pub const SOLVER_RESIDUAL_TOL: f64 = 1e-10;
/// Cells in the office-share scan that precedes bisection.
pub const SHARE_SCAN_CELLS: usize = 1024;
/// Open-interval clearance for the office share.
pub const SHARE_EPS: f64 = 1e-9;
