//! Bid rents and the market-rent envelope.

use serde::Serialize;

use crate::params::{CityParams, FirmType};

/// Agents that bid for land, ordered by tie-breaking priority (later wins).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Bidder {
    Agriculture,
    Household,
    Telework,
    Office,
}

impl Bidder {
    pub fn label(self) -> &'static str {
        match self {
            Bidder::Agriculture => "agriculture",
            Bidder::Household => "household",
            Bidder::Telework => "telework",
            Bidder::Office => "office",
        }
    }
}

/// One agent's rent offer per unit land.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RentQuote {
    pub value: f64,
    pub bidder: Bidder,
}

impl RentQuote {
    pub fn new(value: f64, bidder: Bidder) -> Self {
        RentQuote { value, bidder }
    }
}

/// Zero-profit bid of a firm at a location with wage `wage_at`, teleworker
/// wage `tele_wage`, and raw FTF integral `ftf_at`:
///
/// `phi_i = (p - beta_i (w_t + MC_t) - (1-beta_i) W - tau (1-beta_i) T) / a_{s,i}`
pub fn firm_bid(
    params: &CityParams,
    firm: FirmType,
    wage_at: f64,
    tele_wage: f64,
    ftf_at: f64,
) -> f64 {
    let share = params.share_of(firm);
    let on_site = 1.0 - share;
    (params.price
        - share * (tele_wage + params.telework_cost)
        - on_site * wage_at
        - params.ftf_cost * on_site * ftf_at)
        / params.land_of(firm)
}

/// Equal-utility bid of a household with net-of-commuting wage `net_wage`
/// and utility level `utility`: `psi = (net_wage - z) / h`.
pub fn household_bid(params: &CityParams, net_wage: f64, utility: f64) -> f64 {
    (net_wage - utility) / params.lot_size
}

/// Picks the winning quote: the maximum of all offers and the agricultural
/// floor. Exact ties go to the later bidder in
/// agriculture < household < telework < office.
pub fn market_rent(quotes: &[RentQuote], agricultural_rent: f64) -> RentQuote {
    let floor = RentQuote::new(agricultural_rent, Bidder::Agriculture);
    quotes.iter().fold(floor, |best, &quote| {
        if quote.value > best.value || (quote.value == best.value && quote.bidder > best.bidder) {
            quote
        } else {
            best
        }
    })
}
