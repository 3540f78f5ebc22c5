//! Equilibrium with a telework ring between the office block and households.

use crate::equilibrium::{Boundaries, Equilibrium, Regime};
use crate::error::{ModelError, Result};
use crate::geometry::FirmLayout;
use crate::params::CityParams;
use crate::roots::{bisect, scan_sign_changes};
use crate::solve::classify::classify_first_entry;
use crate::solve::{SHARE_EPS, SHARE_SCAN_CELLS, SOLVER_RESIDUAL_TOL};

/// How the telework ring width scales with the telework firm mass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingWidthRule {
    /// Land-market clearing: each telework firm takes `a_{s,t}` units of
    /// land, so the ring width is `a_{s,t} (1 - theta) M / 2`. Default.
    TeleworkLand,
    /// Alternative rule sizing the ring by `(h + a_{s,o})` per firm. Kept
    /// for comparison only; it breaks land accounting inside the ring and
    /// is excluded from all validation-backed paths.
    HouseholdPlusOfficeLand,
}

pub(crate) fn boundaries_for(
    params: &CityParams,
    office_share: f64,
    rule: RingWidthRule,
) -> Boundaries {
    let half_mass = 0.5 * params.firm_mass;
    let cbd_inner = params.office_land * half_mass * office_share;
    let width_per_mass = match rule {
        RingWidthRule::TeleworkLand => params.telework_land,
        RingWidthRule::HouseholdPlusOfficeLand => params.lot_size + params.office_land,
    };
    let cbd_outer = cbd_inner + width_per_mass * half_mass * (1.0 - office_share);
    let households = 1.0 - (1.0 - office_share) * params.teleworker_share;
    let urban_fringe = cbd_outer + params.lot_size * half_mass * households;
    Boundaries {
        cbd_inner,
        cbd_outer,
        urban_fringe,
    }
}

/// Given the office share, the office/telework rent equality at the inner
/// fringe and the agricultural condition at the urban fringe pin the center
/// wage and utility linearly.
fn wage_and_utility(params: &CityParams, bounds: &Boundaries) -> (f64, f64) {
    let p = params;
    let share = p.teleworker_share;
    let on_site = 1.0 - share;
    let inv_tele = 1.0 / p.telework_land;
    let inv_office = 1.0 / p.office_land;
    let b1 = bounds.cbd_inner;
    let ftf_inner = b1 * b1 + bounds.cbd_outer * bounds.cbd_outer;
    // Office side: p - (w - kappa b1) - tau T(b1), all per unit land.
    // Telework side substitutes w_t = w - kappa f from the fringe condition.
    let office_const = inv_office * (p.price + p.commute_cost * b1 - p.ftf_cost * ftf_inner);
    let tele_const = inv_tele
        * (p.price - share * p.telework_cost
            + share * p.commute_cost * bounds.urban_fringe
            + on_site * p.commute_cost * b1
            - on_site * p.ftf_cost * ftf_inner);
    // office_const - inv_office * w = tele_const - inv_tele * w
    let wage = (office_const - tele_const) / (inv_office - inv_tele);
    let utility = wage
        - p.commute_cost * bounds.urban_fringe
        - p.agricultural_rent * p.lot_size;
    (wage, utility)
}

/// Residual of the remaining condition: telework and household bids must
/// meet at the outer fringe.
fn outer_fringe_residual(params: &CityParams, office_share: f64, rule: RingWidthRule) -> f64 {
    let bounds = boundaries_for(params, office_share, rule);
    let (wage, _utility) = wage_and_utility(params, &bounds);
    let p = params;
    let share = p.teleworker_share;
    let on_site = 1.0 - share;
    let b2 = bounds.cbd_outer;
    let ftf_outer = 2.0 * b2 * b2;
    let tele_wage = wage - p.commute_cost * bounds.urban_fringe;
    let tele_bid = (p.price
        - share * (tele_wage + p.telework_cost)
        - on_site * (wage - p.commute_cost * b2)
        - on_site * p.ftf_cost * ftf_outer)
        / p.telework_land;
    let household_bid =
        p.commute_cost * (bounds.urban_fringe - b2) / p.lot_size + p.agricultural_rent;
    tele_bid - household_bid
}

/// Solves the CBD-fringe regime with land-market-clearing boundaries.
pub fn solve_cbd_fringe_regime(params: &CityParams) -> Result<Equilibrium> {
    solve_cbd_fringe_regime_with(params, RingWidthRule::TeleworkLand)
}

/// Solves the CBD-fringe regime under an explicit ring-width rule.
///
/// The center wage and utility are eliminated (they enter the boundary
/// conditions linearly given the office share), and the remaining scalar
/// equation in the share is scanned on a 1024-cell grid before bisection so
/// multiple roots are detected instead of silently picking one.
pub fn solve_cbd_fringe_regime_with(
    params: &CityParams,
    rule: RingWidthRule,
) -> Result<Equilibrium> {
    params.validate()?;
    let classified = classify_first_entry(params)?;
    if classified != Regime::TeleworkAtCbdFringe {
        return Err(ModelError::RegimeMismatch {
            expected: Regime::TeleworkAtCbdFringe.label().into(),
            found: classified.label().into(),
        });
    }
    let residual = |share: f64| outer_fringe_residual(params, share, rule);
    let (lo, hi) = (SHARE_EPS, 1.0 - SHARE_EPS);
    let brackets = scan_sign_changes(&residual, lo, hi, SHARE_SCAN_CELLS);
    match brackets.len() {
        0 => Err(ModelError::NoRoot { lo, hi }),
        1 => {
            let office_share = bisect(&residual, brackets[0], SOLVER_RESIDUAL_TOL, 200)?;
            let bounds = boundaries_for(params, office_share, rule);
            let (wage, utility) = wage_and_utility(params, &bounds);
            Ok(Equilibrium {
                regime: Regime::TeleworkAtCbdFringe,
                params: *params,
                office_share,
                center_wage: wage,
                utility,
                teleworker_wage: utility + params.agricultural_rent * params.lot_size,
                boundaries: bounds,
                layout: FirmLayout::central_block(bounds.cbd_outer)?,
            })
        }
        _ => Err(ModelError::NonUniqueRoot {
            brackets: brackets.iter().map(|b| (b.lo, b.hi)).collect(),
        }),
    }
}
