//! Derivatives of the endogenous quantities with respect to the telework
//! cost: an analytic total-differential system for the CBD-fringe regime
//! and a central finite-difference harness for either regime.

use serde::Serialize;

use crate::equilibrium::Equilibrium;
use crate::error::{ModelError, Result};
use crate::solve::{solve_cbd_fringe_regime, solve_urban_fringe_regime};
use crate::params::CityParams;

/// Which regime solver the derivatives refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegimeSolver {
    CbdFringe,
    UrbanFringe,
}

impl RegimeSolver {
    pub fn solve(self, params: &CityParams) -> Result<Equilibrium> {
        match self {
            RegimeSolver::CbdFringe => solve_cbd_fringe_regime(params),
            RegimeSolver::UrbanFringe => solve_urban_fringe_regime(params),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CsMethod {
    Analytic,
    FiniteDifference,
}

/// Derivatives of everything endogenous with respect to the telework cost.
///
/// Rent derivatives are parallel shifts (independent of the evaluation
/// point); the finite-difference variant evaluates them at the midpoints of
/// the occupied segments of the base equilibrium.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CsReport {
    pub method: CsMethod,
    /// Central-difference step, zero for the analytic variant.
    pub step: f64,
    pub d_office_share: f64,
    pub d_center_wage: f64,
    pub d_utility: f64,
    pub d_cbd_inner: f64,
    pub d_cbd_outer: f64,
    pub d_urban_fringe: f64,
    pub d_telework_rent: f64,
    pub d_office_rent: f64,
    pub d_household_rent: f64,
}

impl CsReport {
    /// Table-ordered view: share, wage, utility, the three boundaries, then
    /// the telework, office, and household rents.
    pub fn quantities(&self) -> [(&'static str, f64); 9] {
        [
            ("office_share", self.d_office_share),
            ("center_wage", self.d_center_wage),
            ("utility", self.d_utility),
            ("cbd_inner", self.d_cbd_inner),
            ("cbd_outer", self.d_cbd_outer),
            ("urban_fringe", self.d_urban_fringe),
            ("telework_rent", self.d_telework_rent),
            ("office_rent", self.d_office_rent),
            ("household_rent", self.d_household_rent),
        ]
    }
}

/// Default relative step for the finite differences.
fn default_step(telework_cost: f64) -> f64 {
    1e-4 * telework_cost.max(1.0)
}

/// Midpoints of the occupied segments used as rent reference points.
fn rent_reference_points(eq: &Equilibrium) -> (f64, f64, f64) {
    let b = eq.boundaries;
    let office = 0.5 * b.cbd_inner;
    match eq.regime {
        crate::equilibrium::Regime::TeleworkAtUrbanFringe => (
            office,
            0.5 * (b.cbd_outer + b.urban_fringe), // telework lives in the mixed zone
            0.5 * (b.cbd_inner + b.cbd_outer),
        ),
        _ => (
            office,
            0.5 * (b.cbd_inner + b.cbd_outer),
            0.5 * (b.cbd_outer + b.urban_fringe),
        ),
    }
}

/// Central finite differences of every endogenous quantity, re-solving the
/// regime at perturbed telework costs. The step halves (up to six times)
/// when a perturbed solve fails near the edge of the regime's window.
pub fn fd_derivatives(
    params: &CityParams,
    solver: RegimeSolver,
    step: Option<f64>,
) -> Result<CsReport> {
    let base = solver.solve(params)?;
    let (office_x, telework_x, household_x) = rent_reference_points(&base);
    let mut h = step.unwrap_or_else(|| default_step(params.telework_cost));
    let mut attempt = 0;
    let (plus, minus, used_h) = loop {
        let up = solver.solve(&params.with_telework_cost(params.telework_cost + h));
        let down = solver.solve(&params.with_telework_cost(params.telework_cost - h));
        match (up, down) {
            (Ok(p), Ok(m)) => break (p, m, h),
            (up, down) => {
                attempt += 1;
                if attempt > 6 {
                    let (cost, source) = match (up, down) {
                        (Err(e), _) => (params.telework_cost + h, e),
                        (_, Err(e)) => (params.telework_cost - h, e),
                        _ => unreachable!(),
                    };
                    return Err(ModelError::SolverFailedAtPerturbedPoint {
                        telework_cost: cost,
                        source: Box::new(source),
                    });
                }
                h *= 0.5;
            }
        }
    };
    let diff = |hi: f64, lo: f64| (hi - lo) / (2.0 * used_h);
    Ok(CsReport {
        method: CsMethod::FiniteDifference,
        step: used_h,
        d_office_share: diff(plus.office_share, minus.office_share),
        d_center_wage: diff(plus.center_wage, minus.center_wage),
        d_utility: diff(plus.utility, minus.utility),
        d_cbd_inner: diff(plus.boundaries.cbd_inner, minus.boundaries.cbd_inner),
        d_cbd_outer: diff(plus.boundaries.cbd_outer, minus.boundaries.cbd_outer),
        d_urban_fringe: diff(plus.boundaries.urban_fringe, minus.boundaries.urban_fringe),
        d_telework_rent: diff(plus.telework_bid_at(telework_x), minus.telework_bid_at(telework_x)),
        d_office_rent: diff(plus.office_bid_at(office_x), minus.office_bid_at(office_x)),
        d_household_rent: diff(
            plus.household_bid_at(household_x),
            minus.household_bid_at(household_x),
        ),
    })
}

/// Analytic derivatives for the CBD-fringe regime.
///
/// Totally differentiating the two binding rent equalities (telework =
/// office at the inner fringe, telework = household at the outer fringe,
/// with the urban-fringe condition substituted) gives a 2x2 linear system
/// in the share and wage derivatives; everything else follows by chain
/// rule. The teleworker wage enters as `w - kappa f`, so its derivative is
/// the utility derivative.
pub fn analytic_cs_cbd_regime(eq: &Equilibrium) -> Result<CsReport> {
    if eq.regime != crate::equilibrium::Regime::TeleworkAtCbdFringe {
        return Err(ModelError::RegimeMismatch {
            expected: "telework-at-cbd-fringe".into(),
            found: eq.regime.label().into(),
        });
    }
    let p = &eq.params;
    let share = p.teleworker_share;
    let on_site = 1.0 - share;
    let (a_office, a_tele, lot) = (p.office_land, p.telework_land, p.lot_size);
    let (kappa, tau) = (p.commute_cost, p.ftf_cost);
    let half_mass = 0.5 * p.firm_mass;
    let b1 = eq.boundaries.cbd_inner;
    let b2 = eq.boundaries.cbd_outer;

    let db1 = a_office * half_mass;
    let db2 = (a_office - a_tele) * half_mass;
    let dfr = (a_office - a_tele + lot * share) * half_mass;

    let slope_office = |x: f64| (kappa - 2.0 * tau * x) / a_office;
    let slope_tele = |x: f64| on_site * (kappa - 2.0 * tau * x) / a_tele;
    let office_by_outer = -2.0 * tau * b2 / a_office;
    let tele_by_outer = -2.0 * tau * on_site * b2 / a_tele;
    let tele_by_fringe = share * kappa / a_tele;
    let bid_shift = -share / a_tele; // d phi_t / d MC_t

    // Inner fringe: phi_t(b1) = phi_o(b1).
    let c1_share = (slope_tele(b1) - slope_office(b1)) * db1
        + (tele_by_outer - office_by_outer) * db2
        + tele_by_fringe * dfr;
    let c1_wage = 1.0 / a_office - 1.0 / a_tele;
    // Outer fringe: phi_t(b2) = psi(b2) with psi(b2) = kappa (f - b2)/h + R_A.
    let c2_share = (slope_tele(b2) + tele_by_outer) * db2 + tele_by_fringe * dfr
        - kappa * (dfr - db2) / lot;
    let c2_wage = -1.0 / a_tele;

    let det = c1_share * c2_wage - c1_wage * c2_share;
    let scale = c1_share
        .abs()
        .max(c1_wage.abs())
        .max(c2_share.abs())
        .max(c2_wage.abs());
    if det.abs() < 1e-12 * scale.max(1.0) {
        return Err(ModelError::SingularSystem { det });
    }
    let rhs = -bid_shift; // both equations move by -d phi_t / d MC_t
    let d_share = (rhs * c2_wage - c1_wage * rhs) / det;
    let d_wage = (c1_share * rhs - rhs * c2_share) / det;

    let d_inner = db1 * d_share;
    let d_outer = db2 * d_share;
    let d_fringe = dfr * d_share;
    let d_utility = d_wage - kappa * d_fringe;
    let d_tele_wage = d_utility; // w_t = z + R_A h

    let d_office_rent = (-d_wage - 2.0 * tau * b2 * d_outer) / a_office;
    let d_telework_rent = (-share * (d_tele_wage + 1.0)
        - on_site * d_wage
        - 2.0 * tau * on_site * b2 * d_outer)
        / a_tele;
    let d_household_rent = (d_wage - d_utility) / lot;

    Ok(CsReport {
        method: CsMethod::Analytic,
        step: 0.0,
        d_office_share: d_share,
        d_center_wage: d_wage,
        d_utility,
        d_cbd_inner: d_inner,
        d_cbd_outer: d_outer,
        d_urban_fringe: d_fringe,
        d_telework_rent,
        d_office_rent,
        d_household_rent,
    })
}

/// Sign of a derivative, with a dead zone for numerically zero values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
    #[serde(rename = "0")]
    Zero,
}

impl Sign {
    pub fn of(value: f64) -> Sign {
        if value > 1e-7 {
            Sign::Positive
        } else if value < -1e-7 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn glyph(self) -> &'static str {
        match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
            Sign::Zero => "0",
        }
    }
}

/// Signs of the nine tabulated quantities, in table order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignTable {
    pub entries: Vec<(String, Sign)>,
}

impl SignTable {
    /// Expected row when telework entry is active in either regime: the
    /// office share rises with the telework cost while wage and utility
    /// fall, and boundaries and rents all move with the cost.
    pub fn telework_entry_row() -> SignTable {
        let signs = [
            ("office_share", Sign::Positive),
            ("center_wage", Sign::Negative),
            ("utility", Sign::Negative),
            ("cbd_inner", Sign::Positive),
            ("cbd_outer", Sign::Positive),
            ("urban_fringe", Sign::Positive),
            ("telework_rent", Sign::Positive),
            ("office_rent", Sign::Positive),
            ("household_rent", Sign::Positive),
        ];
        SignTable {
            entries: signs.iter().map(|&(n, s)| (n.to_string(), s)).collect(),
        }
    }

    /// Per-cell comparison against another table.
    pub fn compare(&self, expected: &SignTable) -> Vec<(String, bool)> {
        self.entries
            .iter()
            .zip(&expected.entries)
            .map(|((name, sign), (_, want))| (name.clone(), sign == want))
            .collect()
    }

    pub fn matches(&self, expected: &SignTable) -> bool {
        self.compare(expected).iter().all(|(_, ok)| *ok)
    }
}

/// Reads the nine signs off a derivative report.
pub fn sign_table(report: &CsReport) -> SignTable {
    SignTable {
        entries: report
            .quantities()
            .iter()
            .map(|&(name, value)| (name.to_string(), Sign::of(value)))
            .collect(),
    }
}
