//! Solved land-use equilibria and their evaluable profiles.

use serde::Serialize;

use crate::geometry::FirmLayout;
use crate::params::{CityParams, FirmType};
use crate::rent::{firm_bid, household_bid, market_rent, Bidder, RentQuote};

/// Which entry threshold binds when the cost ratio sits exactly on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ThresholdKind {
    /// Boundary between entry at the CBD fringe and entry at the urban fringe.
    CbdEntry,
    /// Upper edge of the region covered by the model.
    FringeEntry,
}

/// Qualitative land-use pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// Monocentric city, no telework firms.
    Benchmark,
    /// Telework firms form a ring between offices and households.
    TeleworkAtCbdFringe,
    /// Telework firms mix with households next to the urban fringe.
    TeleworkAtUrbanFringe,
    /// Cost ratio exactly on one of the classification thresholds.
    OnThreshold(ThresholdKind),
    /// Parameters outside the classified region.
    OutsideModelScope,
}

impl Regime {
    pub fn label(&self) -> &'static str {
        match self {
            Regime::Benchmark => "benchmark",
            Regime::TeleworkAtCbdFringe => "telework-at-cbd-fringe",
            Regime::TeleworkAtUrbanFringe => "telework-at-urban-fringe",
            Regime::OnThreshold(ThresholdKind::CbdEntry) => "on-threshold-cbd-entry",
            Regime::OnThreshold(ThresholdKind::FringeEntry) => "on-threshold-fringe-entry",
            Regime::OutsideModelScope => "outside-model-scope",
        }
    }
}

/// City boundaries on the right half-line, `0 <= cbd_inner <= cbd_outer <= urban_fringe`.
///
/// In the benchmark the two CBD fringes coincide. With telework at the CBD
/// fringe the ring occupies `(cbd_inner, cbd_outer)`. With telework at the
/// urban fringe `cbd_inner` ends the office block and `cbd_outer` starts the
/// mixed household/telework zone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Boundaries {
    pub cbd_inner: f64,
    pub cbd_outer: f64,
    pub urban_fringe: f64,
}

impl Boundaries {
    pub fn monocentric(cbd: f64, urban_fringe: f64) -> Self {
        Boundaries {
            cbd_inner: cbd,
            cbd_outer: cbd,
            urban_fringe,
        }
    }
}

/// Who occupies a stretch of land.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Occupancy {
    Office,
    Telework,
    Household,
    /// Households and telework firms share the land.
    Mixed,
    Agriculture,
}

impl Occupancy {
    pub fn label(self) -> &'static str {
        match self {
            Occupancy::Office => "office",
            Occupancy::Telework => "telework",
            Occupancy::Household => "household",
            Occupancy::Mixed => "mixed",
            Occupancy::Agriculture => "agriculture",
        }
    }
}

/// A solved spatial equilibrium together with everything needed to evaluate
/// rents, wages, FTF costs, and densities at any location.
#[derive(Debug, Clone, PartialEq)]
pub struct Equilibrium {
    pub regime: Regime,
    pub params: CityParams,
    /// Share of firms that stay offices, `theta` in [0, 1].
    pub office_share: f64,
    /// Wage paid at the city center, `w`.
    pub center_wage: f64,
    /// Common household utility, `z`.
    pub utility: f64,
    /// Teleworker wage, pinned by the budget of a teleworker residing on
    /// agricultural land: `w_t = z + R_A h`.
    pub teleworker_wage: f64,
    pub boundaries: Boundaries,
    /// Firm-occupied intervals backing the FTF integral.
    pub layout: FirmLayout,
}

impl Equilibrium {
    /// Raw FTF cost integral over the firm-occupied intervals.
    pub fn ftf(&self, x: f64) -> f64 {
        self.layout.ftf_cost(x)
    }

    /// On-site wage prevailing at `x`.
    ///
    /// Everywhere left of the mixed zone the no-arbitrage schedule
    /// `w - kappa |x|` applies. Inside (and beyond) the mixed zone of the
    /// urban-fringe regime the wage instead keeps telework firms exactly
    /// indifferent with households.
    pub fn wage(&self, x: f64) -> f64 {
        let r = x.abs();
        match self.regime {
            Regime::TeleworkAtUrbanFringe if r > self.boundaries.cbd_outer => self.mixed_wage(r),
            _ => self.center_wage - self.params.commute_cost * r,
        }
    }

    /// Wage that equates the telework bid and the household bid at `x`,
    /// given the mixed-zone FTF profile.
    fn mixed_wage(&self, x: f64) -> f64 {
        let p = &self.params;
        let share = p.teleworker_share;
        let on_site = 1.0 - share;
        let numer = p.lot_size
            * (p.price
                - share * (self.teleworker_wage + p.telework_cost)
                - p.ftf_cost * on_site * self.ftf(x))
            + p.telework_land * self.utility;
        numer / (p.telework_land + on_site * p.lot_size)
    }

    /// Bid rent of an office firm at `x`.
    pub fn office_bid_at(&self, x: f64) -> f64 {
        firm_bid(
            &self.params,
            FirmType::Office,
            self.wage(x),
            self.teleworker_wage,
            self.ftf(x),
        )
    }

    /// Bid rent of a telework firm at `x`.
    pub fn telework_bid_at(&self, x: f64) -> f64 {
        firm_bid(
            &self.params,
            FirmType::Telework,
            self.wage(x),
            self.teleworker_wage,
            self.ftf(x),
        )
    }

    /// Bid rent of a household residing at `x`. The best net wage available
    /// at a residence equals the local wage schedule: commuting inward is
    /// exactly compensated at `kappa` per unit distance.
    pub fn household_bid_at(&self, x: f64) -> f64 {
        household_bid(&self.params, self.wage(x), self.utility)
    }

    /// All three bids at `x`.
    pub fn quotes_at(&self, x: f64) -> [RentQuote; 3] {
        [
            RentQuote::new(self.office_bid_at(x), Bidder::Office),
            RentQuote::new(self.telework_bid_at(x), Bidder::Telework),
            RentQuote::new(self.household_bid_at(x), Bidder::Household),
        ]
    }

    /// Market rent envelope at `x`.
    pub fn market_rent_at(&self, x: f64) -> RentQuote {
        market_rent(&self.quotes_at(x), self.params.agricultural_rent)
    }

    /// Land use at `x` implied by the boundaries (firms keep boundary points
    /// per the tie rule).
    pub fn occupancy_at(&self, x: f64) -> Occupancy {
        let r = x.abs();
        let b = self.boundaries;
        if r > b.urban_fringe {
            Occupancy::Agriculture
        } else if r <= b.cbd_inner {
            Occupancy::Office
        } else {
            match self.regime {
                Regime::TeleworkAtUrbanFringe => {
                    if r <= b.cbd_outer {
                        Occupancy::Household
                    } else {
                        Occupancy::Mixed
                    }
                }
                _ => {
                    if r <= b.cbd_outer {
                        Occupancy::Telework
                    } else {
                        Occupancy::Household
                    }
                }
            }
        }
    }

    /// Office firm density at `x`.
    pub fn office_density(&self, x: f64) -> f64 {
        match self.occupancy_at(x) {
            Occupancy::Office => 1.0 / self.params.office_land,
            _ => 0.0,
        }
    }

    /// Telework firm density at `x`.
    pub fn telework_density(&self, x: f64) -> f64 {
        match self.occupancy_at(x) {
            Occupancy::Telework => 1.0 / self.params.telework_land,
            Occupancy::Mixed => 1.0 / self.params.mixed_zone_land(),
            _ => 0.0,
        }
    }

    /// Household density at `x`.
    pub fn household_density(&self, x: f64) -> f64 {
        match self.occupancy_at(x) {
            Occupancy::Household => 1.0 / self.params.lot_size,
            Occupancy::Mixed => {
                (1.0 - self.params.teleworker_share) / self.params.mixed_zone_land()
            }
            _ => 0.0,
        }
    }

    /// Profit per firm of `firm` at `x` when it pays the market rent there;
    /// zero (to rounding) wherever that type actually locates.
    pub fn profit_at(&self, x: f64, firm: FirmType) -> f64 {
        let p = &self.params;
        let share = p.share_of(firm);
        let on_site = 1.0 - share;
        p.price
            - share * (self.teleworker_wage + p.telework_cost)
            - on_site * self.wage(x)
            - p.land_of(firm) * self.market_rent_at(x).value
            - p.ftf_cost * on_site * self.ftf(x)
    }

    /// Boundary between the contiguous central firm block and households;
    /// the natural location for a telework firm entering near the center.
    pub fn firm_household_boundary(&self) -> f64 {
        match self.regime {
            Regime::TeleworkAtUrbanFringe => self.boundaries.cbd_inner,
            _ => self.boundaries.cbd_outer,
        }
    }

    /// Positive-side breakpoints of the piecewise profiles.
    pub fn breakpoints(&self) -> Vec<f64> {
        let b = self.boundaries;
        let mut points = vec![b.cbd_inner, b.cbd_outer, b.urban_fringe];
        points.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        points
    }
}
