//! Batch analyses over parameter grids and telework-cost schedules. The
//! command-line front end wraps these; everything here stays pure and
//! deterministic.

use serde::Serialize;

use crate::equilibrium::{Equilibrium, Regime};
use crate::error::{ModelError, Result};
use crate::params::CityParams;
use crate::solve::{
    cbd_entry_bound, classify_first_entry, entry_telework_cost, solve_benchmark,
    solve_cbd_fringe_regime, solve_urban_fringe_regime, urban_entry_bound,
};

/// State of the city at one point of a telework-cost schedule.
#[derive(Debug, Clone, Serialize)]
pub struct TrajectoryRecord {
    pub telework_cost: f64,
    /// Pattern active at this cost (benchmark above the entry threshold).
    pub regime: String,
    /// `ok`, or the solver error for this point; failed points keep NaN in
    /// the numeric fields and the trajectory continues.
    pub status: String,
    /// Entry threshold for these parameters (constant along the schedule).
    pub entry_cost: f64,
    /// Whether this cost sits at or below the entry threshold.
    pub entered: bool,
    pub office_share: f64,
    pub center_wage: f64,
    pub utility: f64,
    pub cbd_inner: f64,
    pub cbd_outer: f64,
    pub urban_fringe: f64,
    /// Market rents sampled at the midpoints of the occupied segments; the
    /// telework sample uses the entry fringe while the city is benchmark.
    pub office_rent: f64,
    pub telework_rent: f64,
    pub household_rent: f64,
}

fn record_from(eq: &Equilibrium, cost: f64, entry_cost: f64) -> TrajectoryRecord {
    let b = eq.boundaries;
    let telework_x = match eq.regime {
        Regime::Benchmark => b.cbd_outer,
        Regime::TeleworkAtUrbanFringe => 0.5 * (b.cbd_outer + b.urban_fringe),
        _ => 0.5 * (b.cbd_inner + b.cbd_outer),
    };
    let household_x = match eq.regime {
        Regime::TeleworkAtUrbanFringe => 0.5 * (b.cbd_inner + b.cbd_outer),
        _ => 0.5 * (b.cbd_outer + b.urban_fringe),
    };
    TrajectoryRecord {
        telework_cost: cost,
        regime: eq.regime.label().to_string(),
        status: "ok".to_string(),
        entry_cost,
        entered: cost <= entry_cost,
        office_share: eq.office_share,
        center_wage: eq.center_wage,
        utility: eq.utility,
        cbd_inner: b.cbd_inner,
        cbd_outer: b.cbd_outer,
        urban_fringe: b.urban_fringe,
        office_rent: eq.office_bid_at(0.5 * b.cbd_inner),
        telework_rent: eq.telework_bid_at(telework_x),
        household_rent: eq.household_bid_at(household_x),
    }
}

fn failed_record(cost: f64, regime: Regime, entry_cost: f64, error: &ModelError) -> TrajectoryRecord {
    TrajectoryRecord {
        telework_cost: cost,
        regime: regime.label().to_string(),
        status: format!("error: {error}"),
        entry_cost,
        entered: cost <= entry_cost,
        office_share: f64::NAN,
        center_wage: f64::NAN,
        utility: f64::NAN,
        cbd_inner: f64::NAN,
        cbd_outer: f64::NAN,
        urban_fringe: f64::NAN,
        office_rent: f64::NAN,
        telework_rent: f64::NAN,
        household_rent: f64::NAN,
    }
}

/// Walks a strictly decreasing telework-cost schedule, classifying and
/// solving the active regime at every point and recording the entry
/// crossing. Individual solver failures are recorded per point.
pub fn mc_trajectory(params: &CityParams, schedule: &[f64]) -> Result<Vec<TrajectoryRecord>> {
    if schedule.is_empty() {
        return Err(ModelError::InvalidParams("empty cost schedule".into()));
    }
    if schedule.windows(2).any(|w| w[1] >= w[0]) {
        return Err(ModelError::InvalidParams(
            "cost schedule must be strictly decreasing".into(),
        ));
    }
    let entry = entry_telework_cost(params)?;
    let mut records = Vec::with_capacity(schedule.len());
    for &cost in schedule {
        let at_cost = params.with_telework_cost(cost);
        let solved = if cost > entry.telework_cost {
            solve_benchmark(&at_cost)
        } else {
            match entry.regime {
                Regime::TeleworkAtUrbanFringe => solve_urban_fringe_regime(&at_cost),
                _ => solve_cbd_fringe_regime(&at_cost),
            }
        };
        let record = match solved {
            Ok(eq) => record_from(&eq, cost, entry.telework_cost),
            Err(err) => {
                let regime = if cost > entry.telework_cost {
                    Regime::Benchmark
                } else {
                    entry.regime
                };
                failed_record(cost, regime, entry.telework_cost, &err)
            }
        };
        records.push(record);
    }
    Ok(records)
}

/// One cell of the regime map over the cost ratio and teleworker share.
#[derive(Debug, Clone, Serialize)]
pub struct RegimeMapCell {
    pub cost_ratio: f64,
    pub teleworker_share: f64,
    /// Regime label, or `inadmissible` where the share violates the
    /// space-per-on-site-worker assumption.
    pub regime: String,
    /// CBD entry bound for this share (NaN when inadmissible).
    pub cbd_bound: f64,
    /// Scope bound (share-independent).
    pub scope_bound: f64,
}

/// Classifies every (ratio, share) cell, holding the FTF cost fixed and
/// moving the commute cost. Rows are emitted share-major in ascending
/// order regardless of input order.
pub fn regime_map(
    params: &CityParams,
    cost_ratios: &[f64],
    teleworker_shares: &[f64],
) -> Result<Vec<RegimeMapCell>> {
    let mut ratios = cost_ratios.to_vec();
    let mut shares = teleworker_shares.to_vec();
    ratios.sort_by(f64::total_cmp);
    shares.sort_by(f64::total_cmp);
    let mut cells = Vec::with_capacity(ratios.len() * shares.len());
    let mut admissible = 0usize;
    for &share in &shares {
        for &ratio in &ratios {
            let mut cell_params = params.with_teleworker_share(share);
            cell_params.commute_cost = ratio * params.ftf_cost;
            let cell = match cell_params.validate() {
                Err(_) => RegimeMapCell {
                    cost_ratio: ratio,
                    teleworker_share: share,
                    regime: "inadmissible".to_string(),
                    cbd_bound: f64::NAN,
                    scope_bound: urban_entry_bound(params),
                },
                Ok(()) => {
                    admissible += 1;
                    RegimeMapCell {
                        cost_ratio: ratio,
                        teleworker_share: share,
                        regime: classify_first_entry(&cell_params)?.label().to_string(),
                        cbd_bound: cbd_entry_bound(&cell_params),
                        scope_bound: urban_entry_bound(&cell_params),
                    }
                }
            };
            cells.push(cell);
        }
    }
    if admissible == 0 {
        return Err(ModelError::EmptyAdmissibleRegion);
    }
    Ok(cells)
}
