//! Equilibrium with telework firms mixed into the household band at the
//! urban fringe, plus the special-case closed forms for a unit telework
//! cluster there.

use crate::equilibrium::{Boundaries, Equilibrium, Regime};
use crate::error::{ModelError, Result};
use crate::geometry::FirmLayout;
use crate::params::CityParams;
use crate::roots::{bisect, scan_sign_changes};
use crate::solve::classify::classify_first_entry;
use crate::solve::{SHARE_EPS, SHARE_SCAN_CELLS, SOLVER_RESIDUAL_TOL};

fn boundaries_for(params: &CityParams, office_share: f64) -> Boundaries {
    let half_mass = 0.5 * params.firm_mass;
    let cbd_inner = params.office_land * half_mass * office_share;
    let cbd_outer = cbd_inner + params.lot_size * half_mass * office_share;
    let urban_fringe = cbd_outer + params.mixed_zone_land() * half_mass * (1.0 - office_share);
    Boundaries {
        cbd_inner,
        cbd_outer,
        urban_fringe,
    }
}

/// FTF integral at selected points of the three-block layout
/// `[-b1, b1] + [b2, f] + [-f, -b2]`, in closed form.
struct FtfAt {
    inner: f64, // T(b1)
    mid: f64,   // T(b2)
    fringe: f64, // T(f)
}

fn ftf_at(bounds: &Boundaries) -> FtfAt {
    let b1 = bounds.cbd_inner;
    let b2 = bounds.cbd_outer;
    let f = bounds.urban_fringe;
    FtfAt {
        inner: 2.0 * b1 * b1 + f * f - b2 * b2,
        mid: f * f + 2.0 * b1 * b2 - b2 * b2,
        fringe: 2.0 * f * f + 2.0 * f * (b1 - b2),
    }
}

/// Utility level from the agricultural condition at the fringe. In the
/// mixed zone the wage keeps telework firms and households indifferent; at
/// the fringe that wage must equal the teleworker wage `z + R_A h`, which
/// collapses to a closed form in `z`.
fn utility_for(params: &CityParams, ftf_fringe: f64) -> f64 {
    let p = params;
    let share = p.teleworker_share;
    p.price
        - share * p.telework_cost
        - p.ftf_cost * (1.0 - share) * ftf_fringe
        - p.agricultural_rent * (p.telework_land + p.lot_size)
}

/// Mixed-zone wage at a point with FTF integral `ftf`, given utility.
fn mixed_wage(params: &CityParams, utility: f64, ftf: f64) -> f64 {
    let p = params;
    let share = p.teleworker_share;
    let on_site = 1.0 - share;
    let tele_wage = utility + p.agricultural_rent * p.lot_size;
    (p.lot_size
        * (p.price - share * (tele_wage + p.telework_cost) - p.ftf_cost * on_site * ftf)
        + p.telework_land * utility)
        / (p.telework_land + on_site * p.lot_size)
}

/// Residual of the remaining condition: office and household bids meet at
/// the office/household boundary.
fn office_boundary_residual(params: &CityParams, office_share: f64) -> f64 {
    let bounds = boundaries_for(params, office_share);
    let ftf = ftf_at(&bounds);
    let p = params;
    let utility = utility_for(p, ftf.fringe);
    // Wage continuity at the mixed-zone edge pins the center wage.
    let wage = p.commute_cost * bounds.cbd_outer + mixed_wage(p, utility, ftf.mid);
    let wage_inner = wage - p.commute_cost * bounds.cbd_inner;
    let office_bid = (p.price - wage_inner - p.ftf_cost * ftf.inner) / p.office_land;
    let household_bid = (wage_inner - utility) / p.lot_size;
    office_bid - household_bid
}

/// Lower and upper bounds on `kappa/tau` under which the mixed pattern is a
/// spatial equilibrium, for the given boundaries. At an office share of one
/// they collapse to the classification bounds.
pub fn mixed_condition_bounds(params: &CityParams, bounds: &Boundaries) -> (f64, f64) {
    let on_site = 1.0 - params.teleworker_share;
    let lower = 2.0 * on_site * params.lot_size
        * (bounds.urban_fringe - bounds.cbd_outer + bounds.cbd_inner)
        / params.mixed_zone_land();
    let upper = params.lot_size * bounds.cbd_inner / (params.office_land + params.lot_size);
    (lower, upper)
}

/// Solves the urban-fringe regime: offices at the center, a pure household
/// band, then a mixed household/telework zone out to the fringe.
///
/// As in the CBD regime, wage and utility are eliminated linearly given the
/// office share and the leftover scalar equation is scanned then bisected.
/// The mixed-pattern validity window is verified a posteriori.
pub fn solve_urban_fringe_regime(params: &CityParams) -> Result<Equilibrium> {
    params.validate()?;
    let classified = classify_first_entry(params)?;
    if classified != Regime::TeleworkAtUrbanFringe {
        return Err(ModelError::RegimeMismatch {
            expected: Regime::TeleworkAtUrbanFringe.label().into(),
            found: classified.label().into(),
        });
    }
    let residual = |share: f64| office_boundary_residual(params, share);
    let (lo, hi) = (SHARE_EPS, 1.0 - SHARE_EPS);
    let brackets = scan_sign_changes(&residual, lo, hi, SHARE_SCAN_CELLS);
    let office_share = match brackets.len() {
        0 => return Err(ModelError::NoRoot { lo, hi }),
        1 => bisect(&residual, brackets[0], SOLVER_RESIDUAL_TOL, 200)?,
        _ => {
            return Err(ModelError::NonUniqueRoot {
                brackets: brackets.iter().map(|b| (b.lo, b.hi)).collect(),
            })
        }
    };
    let bounds = boundaries_for(params, office_share);
    let ftf = ftf_at(&bounds);
    let utility = utility_for(params, ftf.fringe);
    let wage = params.commute_cost * bounds.cbd_outer + mixed_wage(params, utility, ftf.mid);
    let (lower, upper) = mixed_condition_bounds(params, &bounds);
    let ratio = params.gradient_ratio();
    if !(lower < ratio && ratio < upper) {
        return Err(ModelError::MixedConditionViolated {
            lower,
            upper,
            ratio,
        });
    }
    Ok(Equilibrium {
        regime: Regime::TeleworkAtUrbanFringe,
        params: *params,
        office_share,
        center_wage: wage,
        utility,
        teleworker_wage: utility + params.agricultural_rent * params.lot_size,
        boundaries: bounds,
        layout: FirmLayout::new(vec![
            (-bounds.cbd_inner, bounds.cbd_inner),
            (bounds.cbd_outer, bounds.urban_fringe),
            (-bounds.urban_fringe, -bounds.cbd_outer),
        ])?,
    })
}

/// Closed forms for the special case of a unit cluster of telework firms at
/// the urban fringe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FringeOnlySolution {
    /// `theta = 1 - 2 / ((a_{s,t} + h (1 - beta_t)) M)`.
    pub office_share: f64,
    /// Office-block edge via the office-share form `a_{s,o} M theta / 2`.
    pub cbd_fringe: f64,
    /// The same edge via the direct decrement form
    /// `a_{s,o} M / 2 - a_{s,o} / (h (1 - beta_t) + a_{s,t})`.
    pub cbd_fringe_alt: f64,
    /// Urban fringe after the cluster replaces office firms and teleworkers
    /// leave the city.
    pub urban_fringe: f64,
    /// Center wage of the closed form. It rests on a simplified FTF profile
    /// that is linear in the fringe distance, which is inconsistent with the
    /// quadratic integral used by the general solver; reported verbatim for
    /// cross-checking the share and boundary formulas only.
    pub center_wage: f64,
    /// Utility level; equals the teleworker wage in this case.
    pub utility: f64,
    /// Shift of the fringe telework bid per unit telework cost,
    /// `-beta_t / a_{s,t}`.
    pub bid_shift_per_cost: f64,
}

/// Evaluates the unit-cluster closed forms. Requires the urban-fringe
/// classification and a city large enough that the share stays positive.
pub fn solve_fringe_only_closed_form(params: &CityParams) -> Result<FringeOnlySolution> {
    params.validate()?;
    let classified = classify_first_entry(params)?;
    if classified != Regime::TeleworkAtUrbanFringe {
        return Err(ModelError::RegimeMismatch {
            expected: Regime::TeleworkAtUrbanFringe.label().into(),
            found: classified.label().into(),
        });
    }
    let mixed_land = params.mixed_zone_land();
    let office_share = 1.0 - 2.0 / (mixed_land * params.firm_mass);
    if office_share <= 0.0 {
        return Err(ModelError::InvalidParams(format!(
            "firm mass {} too small for a unit telework cluster",
            params.firm_mass
        )));
    }
    let bounds = boundaries_for(params, office_share);
    let cbd_fringe_alt = params.benchmark_cbd_fringe() - params.office_land / mixed_land;
    let center_wage = params.price
        - 2.0 * params.ftf_cost
            * (bounds.cbd_inner * bounds.cbd_inner + bounds.urban_fringe)
        - params.commute_cost * params.office_land / params.lot_size;
    let utility = center_wage - params.commute_cost * bounds.urban_fringe;
    Ok(FringeOnlySolution {
        office_share,
        cbd_fringe: bounds.cbd_inner,
        cbd_fringe_alt,
        urban_fringe: bounds.urban_fringe,
        center_wage,
        utility,
        bid_shift_per_cost: -params.teleworker_share / params.telework_land,
    })
}
