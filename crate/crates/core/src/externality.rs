//! Urban-cost accounting: total commuting and FTF communication costs
//! before and after telework firms enter, and the sign of the externality
//! they impose on incumbents.

use serde::Serialize;

use crate::equilibrium::{Equilibrium, Regime};
use crate::error::{ModelError, Result};

/// How a cost report was produced. The two variants intentionally disagree
/// on the FTF total: the closed-form coefficient is `3/8 b^3` where direct
/// integration of `T(y) = y^2 + b^2` over the block gives `8/3 b^3`. Both
/// are always reported and never reconciled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CostVariant {
    /// The closed-form accounting expressions, kept verbatim.
    ClosedForm,
    /// Direct quadrature of the solved profiles; canonical for acceptance.
    Quadrature,
}

impl CostVariant {
    pub fn label(self) -> &'static str {
        match self {
            CostVariant::ClosedForm => "closed-form",
            CostVariant::Quadrature => "quadrature",
        }
    }
}

/// Aggregate urban costs of one equilibrium under one variant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UrbanCostReport {
    pub variant: CostVariant,
    /// Commuting cost integrated over the household band.
    pub commuting_total: f64,
    /// FTF communication cost integrated over firm-occupied land.
    pub ftf_total: f64,
    /// Sum of the two components.
    pub total: f64,
    /// Inward shift of the firm/household boundary relative to the
    /// pre-entry benchmark (zero for the benchmark itself).
    pub cbd_shift: f64,
    /// Inward shift of the urban fringe relative to the benchmark.
    pub fringe_shift: f64,
}

/// Both variants side by side, with their FTF disagreement made explicit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostBreakdown {
    pub closed_form: UrbanCostReport,
    pub quadrature: UrbanCostReport,
    /// `quadrature.ftf_total - closed_form.ftf_total`; nonzero by
    /// construction (the 3/8 vs 8/3 coefficient gap).
    pub ftf_gap: f64,
}

impl CostBreakdown {
    fn new(closed_form: UrbanCostReport, quadrature: UrbanCostReport) -> Self {
        CostBreakdown {
            closed_form,
            quadrature,
            ftf_gap: quadrature.ftf_total - closed_form.ftf_total,
        }
    }
}

/// Composite Simpson rule; exact for the piecewise-quadratic FTF profile
/// when applied per firm block.
fn simpson<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, panels: usize) -> f64 {
    let n = panels.max(2) + panels % 2;
    let h = (hi - lo) / n as f64;
    let mut acc = f(lo) + f(hi);
    for i in 1..n {
        acc += if i % 2 == 0 { 2.0 } else { 4.0 } * f(lo + i as f64 * h);
    }
    acc * h / 3.0
}

/// Commuting total `2 \int kappa y dy` over the household band
/// `[inner, fringe]`, by quadrature.
fn commuting_by_quadrature(kappa: f64, inner: f64, fringe: f64) -> f64 {
    2.0 * simpson(|y| kappa * y, inner, fringe, 256)
}

/// FTF total: the profile `T(y)` integrated over every firm-occupied
/// interval at unit density.
fn ftf_by_quadrature(eq: &Equilibrium) -> f64 {
    eq.layout
        .intervals()
        .iter()
        .map(|&(lo, hi)| simpson(|y| eq.ftf(y), lo, hi, 256))
        .sum()
}

/// Urban costs of the pre-entry benchmark, in both variants.
pub fn urban_costs_before(benchmark: &Equilibrium) -> Result<CostBreakdown> {
    if benchmark.regime != Regime::Benchmark {
        return Err(ModelError::IncompatibleRegimes {
            found: benchmark.regime.label().into(),
        });
    }
    let kappa = benchmark.params.commute_cost;
    let cbd = benchmark.boundaries.cbd_outer;
    let fringe = benchmark.boundaries.urban_fringe;
    let closed_form = UrbanCostReport {
        variant: CostVariant::ClosedForm,
        commuting_total: kappa * (fringe * fringe - cbd * cbd),
        ftf_total: 0.375 * cbd.powi(3),
        total: kappa * (fringe * fringe - cbd * cbd) + 0.375 * cbd.powi(3),
        cbd_shift: 0.0,
        fringe_shift: 0.0,
    };
    let commuting = commuting_by_quadrature(kappa, cbd, fringe);
    let ftf = ftf_by_quadrature(benchmark);
    let quadrature = UrbanCostReport {
        variant: CostVariant::Quadrature,
        commuting_total: commuting,
        ftf_total: ftf,
        total: commuting + ftf,
        cbd_shift: 0.0,
        fringe_shift: 0.0,
    };
    Ok(CostBreakdown::new(closed_form, quadrature))
}

/// Urban costs after telework entry, with boundary shifts measured against
/// the pre-entry benchmark. `pre` must be a benchmark equilibrium; `post`
/// may be either telework regime (or the benchmark itself, in which case
/// both shifts vanish and the report reduces to the before report).
pub fn urban_costs_after(post: &Equilibrium, pre: &Equilibrium) -> Result<CostBreakdown> {
    if pre.regime != Regime::Benchmark {
        return Err(ModelError::IncompatibleRegimes {
            found: pre.regime.label().into(),
        });
    }
    let kappa = post.params.commute_cost;
    let cbd_shift = pre.boundaries.cbd_outer - post.firm_household_boundary();
    let fringe_shift = pre.boundaries.urban_fringe - post.boundaries.urban_fringe;
    let cbd = pre.boundaries.cbd_outer - cbd_shift;
    let fringe = pre.boundaries.urban_fringe - fringe_shift;

    let commuting_closed = kappa * (fringe * fringe - cbd * cbd);
    let ftf_closed = match post.regime {
        Regime::TeleworkAtUrbanFringe => 0.375 * cbd.powi(3) + 4.0 * fringe * cbd,
        _ => 0.375 * cbd.powi(3),
    };
    let closed_form = UrbanCostReport {
        variant: CostVariant::ClosedForm,
        commuting_total: commuting_closed,
        ftf_total: ftf_closed,
        total: commuting_closed + ftf_closed,
        cbd_shift,
        fringe_shift,
    };

    let commuting = commuting_by_quadrature(kappa, cbd, fringe);
    let ftf = ftf_by_quadrature(post);
    let quadrature = UrbanCostReport {
        variant: CostVariant::Quadrature,
        commuting_total: commuting,
        ftf_total: ftf,
        total: commuting + ftf,
        cbd_shift,
        fringe_shift,
    };
    Ok(CostBreakdown::new(closed_form, quadrature))
}

/// Direction of the urban-cost externality on incumbents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Externality {
    /// Total urban costs fall after entry.
    Positive,
    /// Total urban costs rise after entry.
    Negative,
    Neutral,
}

impl Externality {
    pub fn label(self) -> &'static str {
        match self {
            Externality::Positive => "positive",
            Externality::Negative => "negative",
            Externality::Neutral => "neutral",
        }
    }
}

/// Compares before/after totals under one variant.
pub fn externality_sign(
    before: &UrbanCostReport,
    after: &UrbanCostReport,
) -> Result<Externality> {
    if before.variant != after.variant {
        return Err(ModelError::VariantMismatch {
            a: before.variant.label().into(),
            b: after.variant.label().into(),
        });
    }
    if after.total < before.total - 1e-10 {
        Ok(Externality::Positive)
    } else if after.total > before.total + 1e-10 {
        Ok(Externality::Negative)
    } else {
        Ok(Externality::Neutral)
    }
}
