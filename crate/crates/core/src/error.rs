//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building parameters, solving for an
/// equilibrium, or running one of the analysis passes.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ModelError {
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("space per on-site worker in telework firms must exceed the office land ratio (got {space_per_onsite} <= {office_land})")]
    AssumptionViolated {
        space_per_onsite: f64,
        office_land: f64,
    },

    #[error("monocentric benchmark is not an equilibrium: kappa/tau = {ratio} >= {bound}")]
    BenchmarkNotEquilibrium { ratio: f64, bound: f64 },

    #[error("solver requires regime {expected}, classification gave {found}")]
    RegimeMismatch { expected: String, found: String },

    #[error("no sign change for the office share on ({lo}, {hi}); telework cost may still be above the entry threshold")]
    NoRoot { lo: f64, hi: f64 },

    #[error("multiple candidate office shares detected in brackets {brackets:?}")]
    NonUniqueRoot { brackets: Vec<(f64, f64)> },

    #[error("root finder stalled: bracket width {width} with residual {residual}")]
    RootStalled { width: f64, residual: f64 },

    #[error("mixed land-use condition violated: need {lower} < kappa/tau = {ratio} < {upper}")]
    MixedConditionViolated { lower: f64, upper: f64, ratio: f64 },

    #[error("comparative-statics system is numerically singular (det = {det})")]
    SingularSystem { det: f64 },

    #[error("solver failed at perturbed telework cost {telework_cost}: {source}")]
    SolverFailedAtPerturbedPoint {
        telework_cost: f64,
        #[source]
        source: Box<ModelError>,
    },

    #[error("equilibrium regime {regime} has no {location} fringe")]
    LocationUndefined { regime: String, location: String },

    #[error("telework bid rent at the quoted location is not positive ({rent})")]
    DegenerateRent { rent: f64 },

    #[error("indifference curves are parallel (determinant {det})")]
    ParallelCurves { det: f64 },

    #[error("firm type outside the admissible region: {0}")]
    OutsideAdmissibleRegion(String),

    #[error("pre-entry report must come from a benchmark equilibrium, got {found}")]
    IncompatibleRegimes { found: String },

    #[error("urban cost reports use different variants ({a} vs {b})")]
    VariantMismatch { a: String, b: String },

    #[error("no admissible cell in the sweep grid")]
    EmptyAdmissibleRegion,
}

pub type Result<T> = std::result::Result<T, ModelError>;
