//! Exogenous city parameters and per-firm input requirements.
//!
//! All quantities are plain IEEE doubles; units are documented but not
//! enforced. Output per firm and labor per unit output are both normalized
//! to one, so a firm's land demand equals its land/output ratio and its
//! labor demand splits into an on-site and a telework share.

use serde::Serialize;

use crate::error::{ModelError, Result};

/// Output produced by every firm (normalization).
pub const OUTPUT_PER_FIRM: f64 = 1.0;
/// Labor required per unit of output (normalization).
pub const LABOR_PER_OUTPUT: f64 = 1.0;

/// The two firm technologies competing for land.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FirmType {
    /// Hires on-site workers only.
    Office,
    /// Hires a fixed share of its workforce as teleworkers.
    Telework,
}

impl FirmType {
    pub fn label(self) -> &'static str {
        match self {
            FirmType::Office => "office",
            FirmType::Telework => "telework",
        }
    }
}

/// All exogenous scalars of the model.
///
/// Use [`CityParams::new`] so the invariants are checked once up front;
/// every solver and profile then assumes they hold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CityParams {
    /// Output price `p` (goods per unit of output).
    pub price: f64,
    /// Mass of firms `M`; the household mass equals it (no unemployment).
    pub firm_mass: f64,
    /// Commuting cost per unit distance `kappa`.
    pub commute_cost: f64,
    /// Face-to-face communication cost per unit distance `tau`.
    pub ftf_cost: f64,
    /// Land per unit output for office firms `a_{s,o}`.
    pub office_land: f64,
    /// Land per unit output for telework firms `a_{s,t}`.
    pub telework_land: f64,
    /// Fixed residential lot size `h`.
    pub lot_size: f64,
    /// Share of a telework firm's workforce that teleworks, in (0, 1).
    pub teleworker_share: f64,
    /// Cost per teleworker `MC_t` borne by telework firms.
    pub telework_cost: f64,
    /// Agricultural reservation rent `R_A`.
    pub agricultural_rent: f64,
}

impl CityParams {
    /// Validates and builds a parameter set.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        price: f64,
        firm_mass: f64,
        commute_cost: f64,
        ftf_cost: f64,
        office_land: f64,
        telework_land: f64,
        lot_size: f64,
        teleworker_share: f64,
        telework_cost: f64,
        agricultural_rent: f64,
    ) -> Result<Self> {
        let params = CityParams {
            price,
            firm_mass,
            commute_cost,
            ftf_cost,
            office_land,
            telework_land,
            lot_size,
            teleworker_share,
            telework_cost,
            agricultural_rent,
        };
        params.validate()?;
        Ok(params)
    }

    /// Reference configuration used throughout the test suites and as the
    /// CLI default: a mid-sized city where the benchmark, both telework
    /// regimes, and the comparative statics are all reachable by varying
    /// `teleworker_share` and `telework_cost`.
    pub fn reference() -> Self {
        CityParams {
            price: 50.0,
            firm_mass: 50.0,
            commute_cost: 0.15,
            ftf_cost: 0.15,
            office_land: 0.2,
            telework_land: 0.18,
            lot_size: 0.14,
            teleworker_share: 0.4,
            telework_cost: 6.0,
            agricultural_rent: 0.0,
        }
    }

    pub fn with_teleworker_share(mut self, share: f64) -> Self {
        self.teleworker_share = share;
        self
    }

    pub fn with_telework_cost(mut self, cost: f64) -> Self {
        self.telework_cost = cost;
        self
    }

    pub fn with_agricultural_rent(mut self, rent: f64) -> Self {
        self.agricultural_rent = rent;
        self
    }

    /// Checks every invariant; `new` calls this, callers that mutate fields
    /// directly should re-run it.
    pub fn validate(&self) -> Result<()> {
        let positive = [
            (self.price, "price"),
            (self.firm_mass, "firm_mass"),
            (self.commute_cost, "commute_cost"),
            (self.ftf_cost, "ftf_cost"),
            (self.office_land, "office_land"),
            (self.telework_land, "telework_land"),
            (self.lot_size, "lot_size"),
        ];
        for (value, name) in positive {
            if !(value > 0.0) || !value.is_finite() {
                return Err(ModelError::InvalidParams(format!(
                    "{name} must be positive and finite, got {value}"
                )));
            }
        }
        if !(self.telework_cost >= 0.0) || !self.telework_cost.is_finite() {
            return Err(ModelError::InvalidParams(format!(
                "telework_cost must be non-negative, got {}",
                self.telework_cost
            )));
        }
        if !(self.agricultural_rent >= 0.0) || !self.agricultural_rent.is_finite() {
            return Err(ModelError::InvalidParams(format!(
                "agricultural_rent must be non-negative, got {}",
                self.agricultural_rent
            )));
        }
        if !(self.teleworker_share > 0.0 && self.teleworker_share < 1.0) {
            return Err(ModelError::InvalidParams(format!(
                "teleworker_share must lie in (0, 1), got {}",
                self.teleworker_share
            )));
        }
        // Space per on-site worker must be larger in telework firms, so the
        // office bid-rent gradient dominates everywhere.
        let space_per_onsite = self.telework_land / (1.0 - self.teleworker_share);
        if !(space_per_onsite > self.office_land) {
            return Err(ModelError::AssumptionViolated {
                space_per_onsite,
                office_land: self.office_land,
            });
        }
        Ok(())
    }

    /// Teleworker share of the given firm type (zero for office firms).
    pub fn share_of(&self, firm: FirmType) -> f64 {
        match firm {
            FirmType::Office => 0.0,
            FirmType::Telework => self.teleworker_share,
        }
    }

    /// Land per unit output of the given firm type.
    pub fn land_of(&self, firm: FirmType) -> f64 {
        match firm {
            FirmType::Office => self.office_land,
            FirmType::Telework => self.telework_land,
        }
    }

    /// Fixed input bundle one firm of the given type demands.
    pub fn firm_inputs(&self, firm: FirmType) -> InputBundle {
        let share = self.share_of(firm);
        InputBundle {
            on_site_labor: (1.0 - share) * LABOR_PER_OUTPUT * OUTPUT_PER_FIRM,
            tele_labor: share * LABOR_PER_OUTPUT * OUTPUT_PER_FIRM,
            land: self.land_of(firm) * OUTPUT_PER_FIRM,
        }
    }

    /// Half-width of the business district when only office firms locate in
    /// the city: `b = a_{s,o} M / 2`.
    pub fn benchmark_cbd_fringe(&self) -> f64 {
        0.5 * self.office_land * self.firm_mass
    }

    /// Half-width of the whole city in the benchmark:
    /// `f = (h + a_{s,o}) M / 2`.
    pub fn benchmark_urban_fringe(&self) -> f64 {
        0.5 * (self.lot_size + self.office_land) * self.firm_mass
    }

    /// Commuting-to-communication cost ratio `kappa / tau`, the quantity the
    /// land-use regime depends on.
    pub fn gradient_ratio(&self) -> f64 {
        self.commute_cost / self.ftf_cost
    }

    /// Land taken by one household plus one on-site worker's share in the
    /// mixed zone: `h (1 - beta_t) + a_{s,t}`.
    pub fn mixed_zone_land(&self) -> f64 {
        self.lot_size * (1.0 - self.teleworker_share) + self.telework_land
    }
}

/// Leontief input requirements of a single firm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InputBundle {
    /// Workers who commute to the firm.
    pub on_site_labor: f64,
    /// Workers who telework and never commute.
    pub tele_labor: f64,
    /// Land area the firm occupies.
    pub land: f64,
}

impl InputBundle {
    /// Total labor; equals `a_L * q = 1` for every firm type.
    pub fn total_labor(&self) -> f64 {
        self.on_site_labor + self.tele_labor
    }
}
