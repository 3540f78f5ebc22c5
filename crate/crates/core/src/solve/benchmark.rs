//! Closed-form monocentric equilibrium without telework firms.

use crate::equilibrium::{Boundaries, Equilibrium, Regime};
use crate::error::{ModelError, Result};
use crate::geometry::FirmLayout;
use crate::params::CityParams;
use crate::solve::classify::benchmark_slope_condition;

/// Solves the monocentric benchmark: offices on `[-b, b]`, households out to
/// the urban fringe, no telework firms in the city.
///
/// Boundaries come straight from land-market clearing, the wage from the
/// office/household rent equality at the CBD fringe, and the utility level
/// from the agricultural-rent condition at the urban fringe:
///
/// `w = p - 2 tau b^2 - a_{s,o} R_A`, `z = w - kappa f - R_A h`.
pub fn solve_benchmark(params: &CityParams) -> Result<Equilibrium> {
    params.validate()?;
    if !benchmark_slope_condition(params) {
        let b = params.benchmark_cbd_fringe();
        return Err(ModelError::BenchmarkNotEquilibrium {
            ratio: params.gradient_ratio(),
            bound: 2.0 * params.lot_size * b / (params.lot_size + params.office_land),
        });
    }
    let cbd = params.benchmark_cbd_fringe();
    let fringe = params.benchmark_urban_fringe();
    let wage = params.price
        - 2.0 * params.ftf_cost * cbd * cbd
        - params.office_land * params.agricultural_rent;
    let utility =
        wage - params.commute_cost * fringe - params.agricultural_rent * params.lot_size;
    Ok(Equilibrium {
        regime: Regime::Benchmark,
        params: *params,
        office_share: 1.0,
        center_wage: wage,
        utility,
        teleworker_wage: utility + params.agricultural_rent * params.lot_size,
        boundaries: Boundaries::monocentric(cbd, fringe),
        layout: FirmLayout::central_block(cbd)?,
    })
}
