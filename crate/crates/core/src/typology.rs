//! Telework firm types in (teleworker share, land ratio) space: the cost of
//! shifting one worker from on-site to telework, zero-profit indifference
//! curves at the two candidate entry fringes, their intersection, and the
//! resulting location classification.

use serde::Serialize;

use crate::equilibrium::Equilibrium;
use crate::error::{ModelError, Result};

/// Candidate entry locations for a telework firm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FringeLocation {
    /// Boundary between the central firm block and households.
    CbdFringe,
    /// Boundary between the city and agricultural land.
    UrbanFringe,
}

impl FringeLocation {
    pub fn label(self) -> &'static str {
        match self {
            FringeLocation::CbdFringe => "cbd-fringe",
            FringeLocation::UrbanFringe => "urban-fringe",
        }
    }
}

/// Host-equilibrium quote at one fringe: everything a prospective telework
/// type needs to evaluate zero profit there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaborShiftQuote {
    pub location: FringeLocation,
    /// Coordinate of the fringe in the host equilibrium.
    pub position: f64,
    /// Cost of replacing one on-site worker with one teleworker:
    /// `C = w_t + MC_t - W(x) - tau T(x)`. Negative when on-site labor is
    /// dearer than telework at that location.
    pub shift_cost: f64,
    /// Operating surplus gross of rent and telework costs:
    /// `p - W(x) - tau T(x)`.
    pub net_revenue: f64,
    /// Host telework bid rent at the fringe.
    pub rent: f64,
}

/// Evaluates the labor-shift quote at a fringe of the host equilibrium.
pub fn labor_shift_cost(eq: &Equilibrium, location: FringeLocation) -> Result<LaborShiftQuote> {
    let position = match location {
        FringeLocation::CbdFringe => eq.firm_household_boundary(),
        FringeLocation::UrbanFringe => eq.boundaries.urban_fringe,
    };
    if !(position > 0.0) {
        return Err(ModelError::LocationUndefined {
            regime: eq.regime.label().into(),
            location: location.label().into(),
        });
    }
    let onsite_cost = eq.wage(position) + eq.params.ftf_cost * eq.ftf(position);
    Ok(LaborShiftQuote {
        location,
        position,
        shift_cost: eq.teleworker_wage + eq.params.telework_cost - onsite_cost,
        net_revenue: eq.params.price - onsite_cost,
        rent: eq.telework_bid_at(position),
    })
}

/// Zero-profit locus in (share, land ratio) space at one fringe:
/// `a(share) = (net_revenue - share * shift_cost) / rent`, a line with
/// slope `-C / phi_t` (the rent a firm gives up per worker shifted).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndifferenceCurve {
    pub location: FringeLocation,
    /// `(share, land_ratio)` samples inside the admissible region.
    pub points: Vec<(f64, f64)>,
    /// Marginal rate of substitution `-C / phi_t`.
    pub slope: f64,
    /// Land ratio a share-zero firm could sustain, `net_revenue / rent`.
    pub intercept: f64,
}

impl IndifferenceCurve {
    /// Land ratio on the (unclipped) line at the given share.
    pub fn land_ratio_at(&self, share: f64) -> f64 {
        self.intercept + self.slope * share
    }
}

/// Number of grid points used when no explicit share grid is supplied.
pub const DEFAULT_CURVE_POINTS: usize = 256;

/// Samples the zero-profit curve at `location` over the given shares,
/// keeping only points with positive land ratio inside the admissible
/// region `land_ratio > (1 - share) * office_land`.
pub fn indifference_curve(
    eq: &Equilibrium,
    location: FringeLocation,
    share_grid: &[f64],
) -> Result<IndifferenceCurve> {
    let quote = labor_shift_cost(eq, location)?;
    if !(quote.rent > 0.0) {
        return Err(ModelError::DegenerateRent { rent: quote.rent });
    }
    let slope = -quote.shift_cost / quote.rent;
    let intercept = quote.net_revenue / quote.rent;
    let points = share_grid
        .iter()
        .filter(|share| **share > 0.0 && **share < 1.0)
        .map(|&share| (share, intercept + slope * share))
        .filter(|&(share, ratio)| ratio > 0.0 && ratio > (1.0 - share) * eq.params.office_land)
        .collect();
    Ok(IndifferenceCurve {
        location,
        points,
        slope,
        intercept,
    })
}

/// Uniform share grid on (0, 1) for curve sampling.
pub fn default_share_grid() -> Vec<f64> {
    (1..=DEFAULT_CURVE_POINTS)
        .map(|i| i as f64 / (DEFAULT_CURVE_POINTS + 1) as f64)
        .collect()
}

/// Firm type indifferent between the two fringes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TypologyPoint {
    pub share: f64,
    pub land_ratio: f64,
}

/// Intersection of the two fringe curves from raw quotes.
///
/// Solving `net_revenue_x = share * shift_cost_x + land_ratio * rent_x` at
/// both fringes; the host's own type always satisfies both equations, so a
/// non-degenerate intersection reproduces the host parameters.
pub fn intersection_from_quotes(
    cbd: &LaborShiftQuote,
    urban: &LaborShiftQuote,
) -> Result<TypologyPoint> {
    let det = cbd.shift_cost * urban.rent - urban.shift_cost * cbd.rent;
    let scale = [cbd.shift_cost, urban.shift_cost, cbd.rent, urban.rent]
        .iter()
        .fold(1.0f64, |m, v| m.max(v.abs()));
    if det.abs() < 1e-12 * scale {
        return Err(ModelError::ParallelCurves { det });
    }
    Ok(TypologyPoint {
        share: (cbd.net_revenue * urban.rent - urban.net_revenue * cbd.rent) / det,
        land_ratio: (cbd.shift_cost * urban.net_revenue - urban.shift_cost * cbd.net_revenue)
            / det,
    })
}

/// Intersection of the CBD and urban fringe curves of the host equilibrium.
pub fn curve_intersection(eq: &Equilibrium) -> Result<TypologyPoint> {
    let cbd = labor_shift_cost(eq, FringeLocation::CbdFringe)?;
    let urban = labor_shift_cost(eq, FringeLocation::UrbanFringe)?;
    intersection_from_quotes(&cbd, &urban)
}

/// Entry location of a telework firm type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FirmNiche {
    LocatesAtCbdFringe,
    LocatesAtUrbanFringe,
    Indifferent,
}

impl FirmNiche {
    pub fn label(self) -> &'static str {
        match self {
            FirmNiche::LocatesAtCbdFringe => "locates-at-cbd-fringe",
            FirmNiche::LocatesAtUrbanFringe => "locates-at-urban-fringe",
            FirmNiche::Indifferent => "indifferent",
        }
    }
}

/// Classifies a telework type `(share, land_ratio)` by the fringe where its
/// zero-profit bid covers the larger multiple of the incumbent rent.
///
/// Comparing raw bids alone is degenerate (the CBD bid is always higher by
/// the on-site cost gap), so the bid is normalized by the rent actually
/// charged at each fringe; equivalently the curves themselves are compared
/// at the type's share.
pub fn classify_firm_type(
    share: f64,
    land_ratio: f64,
    eq: &Equilibrium,
) -> Result<FirmNiche> {
    if !(share > 0.0 && share < 1.0) || !(land_ratio > 0.0) {
        return Err(ModelError::OutsideAdmissibleRegion(format!(
            "share {share}, land ratio {land_ratio}"
        )));
    }
    if land_ratio <= (1.0 - share) * eq.params.office_land {
        return Err(ModelError::OutsideAdmissibleRegion(format!(
            "space per on-site worker {} below the office land ratio {}",
            land_ratio / (1.0 - share),
            eq.params.office_land
        )));
    }
    let cbd = labor_shift_cost(eq, FringeLocation::CbdFringe)?;
    let urban = labor_shift_cost(eq, FringeLocation::UrbanFringe)?;
    if !(cbd.rent > 0.0) {
        return Err(ModelError::DegenerateRent { rent: cbd.rent });
    }
    if !(urban.rent > 0.0) {
        return Err(ModelError::DegenerateRent { rent: urban.rent });
    }
    let viable_cbd = (cbd.net_revenue - share * cbd.shift_cost) / cbd.rent;
    let viable_urban = (urban.net_revenue - share * urban.shift_cost) / urban.rent;
    let tol = 1e-9 * viable_cbd.abs().max(viable_urban.abs()).max(1.0);
    if (viable_cbd - viable_urban).abs() < tol {
        Ok(FirmNiche::Indifferent)
    } else if viable_cbd > viable_urban {
        Ok(FirmNiche::LocatesAtCbdFringe)
    } else {
        Ok(FirmNiche::LocatesAtUrbanFringe)
    }
}
