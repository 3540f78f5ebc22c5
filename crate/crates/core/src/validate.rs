//! Independent consistency checks on a solved equilibrium.
//!
//! The validator never reuses solver intermediates: it re-evaluates bids,
//! integrates the density profiles, and checks the market-clearing
//! identities from scratch. Report-only; nothing here can fail.

use serde::Serialize;

use crate::equilibrium::{Equilibrium, Occupancy};
use crate::error::Result;

/// Envelope gaps larger than this count as violations.
pub const ENVELOPE_TOL: f64 = 1e-9;

/// Residuals of the equilibrium conditions, all non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValidationReport {
    /// Grid points where the occupant's bid falls short of the envelope.
    pub envelope_violations: usize,
    /// Largest such shortfall.
    pub envelope_worst_gap: f64,
    /// Worst deviation of occupied land shares from one.
    pub land_accounting_error: f64,
    /// Worst deviation of integrated firm/household masses from their
    /// market-clearing totals.
    pub population_error: f64,
    /// Imbalance between on-site labor demand and resident supply, and
    /// between teleworker demand and the mass living outside the city.
    pub labor_error: f64,
    /// Largest jump of the market rent across a boundary.
    pub rent_continuity_gap: f64,
    /// Largest excess of cumulative resident labor supply over cumulative
    /// on-site demand toward the center; positive values mean someone would
    /// have to commute away from the center.
    pub commuting_error: f64,
}

/// Positive-side segment edges of the piecewise profiles.
fn segments(eq: &Equilibrium) -> Vec<(f64, f64)> {
    let b = eq.boundaries;
    let mut edges = vec![0.0, b.cbd_inner, b.cbd_outer, b.urban_fringe];
    edges.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    edges.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Midpoint integral of `f` over `[lo, hi]`; exact for the piecewise
/// constant densities as long as the panel stays inside one segment.
fn integrate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, panels: usize) -> f64 {
    let dx = (hi - lo) / panels as f64;
    (0..panels)
        .map(|i| f(lo + (i as f64 + 0.5) * dx))
        .sum::<f64>()
        * dx
}

/// Runs every check on a symmetric grid of at least 1000 points.
pub fn validate_equilibrium(eq: &Equilibrium, grid_points: usize) -> Result<ValidationReport> {
    let n = grid_points.max(1000) | 1; // odd, so the center is sampled
    let fringe = eq.boundaries.urban_fringe;
    let params = &eq.params;

    // (a) envelope + (b) land accounting on the full grid.
    let mut envelope_violations = 0;
    let mut envelope_worst_gap: f64 = 0.0;
    let mut land_accounting_error: f64 = 0.0;
    for i in 0..n {
        let x = -fringe + 2.0 * fringe * i as f64 / (n - 1) as f64;
        let envelope = eq.market_rent_at(x).value;
        let occupant_bid = match eq.occupancy_at(x) {
            Occupancy::Office => eq.office_bid_at(x),
            Occupancy::Telework | Occupancy::Mixed => eq.telework_bid_at(x),
            Occupancy::Household => eq.household_bid_at(x),
            Occupancy::Agriculture => params.agricultural_rent,
        };
        let gap = envelope - occupant_bid;
        if gap > ENVELOPE_TOL {
            envelope_violations += 1;
        }
        envelope_worst_gap = envelope_worst_gap.max(gap);

        if eq.occupancy_at(x) != Occupancy::Agriculture {
            let used = params.lot_size * eq.household_density(x)
                + params.office_land * eq.office_density(x)
                + params.telework_land * eq.telework_density(x);
            land_accounting_error = land_accounting_error.max((used - 1.0).abs());
        }
    }

    // (c) population totals by quadrature of the density profiles.
    let per_segment = 128;
    let mut office_mass = 0.0;
    let mut telework_mass = 0.0;
    let mut household_mass = 0.0;
    for (lo, hi) in segments(eq) {
        if hi - lo < 1e-15 {
            continue;
        }
        office_mass += 2.0 * integrate(|x| eq.office_density(x), lo, hi, per_segment);
        telework_mass += 2.0 * integrate(|x| eq.telework_density(x), lo, hi, per_segment);
        household_mass += 2.0 * integrate(|x| eq.household_density(x), lo, hi, per_segment);
    }
    let mass = params.firm_mass;
    let share = params.teleworker_share;
    let theta = eq.office_share;
    let expected_households = mass * (1.0 - share * (1.0 - theta));
    let population_error = (office_mass - theta * mass)
        .abs()
        .max((telework_mass - (1.0 - theta) * mass).abs())
        .max((household_mass - expected_households).abs());

    // (d) labor balance: residents fill on-site jobs, teleworkers live
    // outside the city.
    let on_site_demand = office_mass + (1.0 - share) * telework_mass;
    let tele_demand = share * telework_mass;
    let labor_error = (on_site_demand - household_mass)
        .abs()
        .max((tele_demand - (mass - household_mass)).abs());

    // (e) rent continuity across the boundaries.
    let mut rent_continuity_gap: f64 = 0.0;
    for edge in eq.breakpoints() {
        if edge <= 0.0 {
            continue;
        }
        let eps = 1e-9 * edge.max(1.0);
        let jump = (eq.market_rent_at(edge - eps).value - eq.market_rent_at(edge + eps).value).abs();
        rent_continuity_gap = rent_continuity_gap.max(jump);
    }

    // (f) inward-commuting feasibility: cumulative supply of resident
    // workers may never outrun cumulative on-site demand. Densities are
    // constant per segment, so the difference is piecewise linear and its
    // maximum sits on a segment edge.
    let mut commuting_error: f64 = 0.0;
    let mut demand = 0.0;
    let mut supply = 0.0;
    for (lo, hi) in segments(eq) {
        let mid = 0.5 * (lo + hi);
        let width = hi - lo;
        demand += width * (eq.office_density(mid) + (1.0 - share) * eq.telework_density(mid));
        supply += width * eq.household_density(mid);
        commuting_error = commuting_error.max(supply - demand);
    }

    Ok(ValidationReport {
        envelope_violations,
        envelope_worst_gap: envelope_worst_gap.max(0.0),
        land_accounting_error,
        population_error,
        labor_error,
        rent_continuity_gap,
        commuting_error: commuting_error.max(0.0),
    })
}
