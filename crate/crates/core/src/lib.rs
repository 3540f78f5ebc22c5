//! Spatial-equilibrium engine for a linear city with office firms and
//! telework firms.
//!
//! The crate solves the land-use equilibrium of a closed linear city in
//! which firms differ by their teleworker share, classifies which pattern
//! emerges as the telework cost falls, runs comparative statics in that
//! cost, quantifies the urban-cost externalities of telework entry, and
//! maps telework firm types to their entry location.
//!
//! Everything is deterministic: identical inputs produce bit-identical
//! outputs, and all operations are pure functions over immutable values.

pub mod comparative;
pub mod equilibrium;
pub mod error;
pub mod externality;
pub mod geometry;
pub mod params;
pub mod rent;
pub mod roots;
pub mod scenario;
pub mod solve;
pub mod typology;
pub mod validate;

pub use comparative::{
    analytic_cs_cbd_regime, fd_derivatives, sign_table, CsMethod, CsReport, RegimeSolver, Sign,
    SignTable,
};
pub use equilibrium::{Boundaries, Equilibrium, Occupancy, Regime, ThresholdKind};
pub use error::{ModelError, Result};
pub use externality::{
    externality_sign, urban_costs_after, urban_costs_before, CostBreakdown, CostVariant,
    Externality, UrbanCostReport,
};
pub use geometry::FirmLayout;
pub use params::{CityParams, FirmType, InputBundle, LABOR_PER_OUTPUT, OUTPUT_PER_FIRM};
pub use rent::{firm_bid, household_bid, market_rent, Bidder, RentQuote};
pub use scenario::{mc_trajectory, regime_map, RegimeMapCell, TrajectoryRecord};
pub use solve::{
    benchmark_center_condition, benchmark_slope_condition, cbd_entry_bound, classify_first_entry,
    entry_telework_cost, mixed_condition_bounds, solve_benchmark, solve_cbd_fringe_regime,
    solve_cbd_fringe_regime_with, solve_fringe_only_closed_form, solve_urban_fringe_regime,
    urban_entry_bound, EntryThreshold, FringeOnlySolution, RingWidthRule,
};
pub use typology::{
    classify_firm_type, curve_intersection, indifference_curve, labor_shift_cost, FirmNiche,
    FringeLocation, IndifferenceCurve, LaborShiftQuote, TypologyPoint,
};
pub use validate::{validate_equilibrium, ValidationReport};
