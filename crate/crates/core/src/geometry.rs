//! Firm-occupied intervals on the line and the face-to-face cost integral.

use crate::error::{ModelError, Result};

/// Disjoint closed intervals occupied by firms, symmetric about the center.
///
/// The FTF cost integral treats each interval at unit density; a weighted
/// variant exists for sensitivity work but nothing in the solvers uses it.
#[derive(Debug, Clone, PartialEq)]
pub struct FirmLayout {
    intervals: Vec<(f64, f64)>,
}

impl FirmLayout {
    /// Builds a layout from closed intervals, sorting them and checking that
    /// they are disjoint, have positive length, and mirror each other
    /// around zero.
    pub fn new(mut intervals: Vec<(f64, f64)>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(ModelError::InvalidParams(
                "firm layout needs at least one interval".into(),
            ));
        }
        intervals.sort_by(|a, b| a.0.total_cmp(&b.0));
        for &(lo, hi) in &intervals {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(ModelError::InvalidParams(format!(
                    "interval [{lo}, {hi}] must have positive length"
                )));
            }
        }
        for pair in intervals.windows(2) {
            if pair[0].1 > pair[1].0 + 1e-12 {
                return Err(ModelError::InvalidParams(format!(
                    "intervals [{}, {}] and [{}, {}] overlap",
                    pair[0].0, pair[0].1, pair[1].0, pair[1].1
                )));
            }
        }
        for &(lo, hi) in &intervals {
            let mirrored = intervals
                .iter()
                .any(|&(l, h)| (l + hi).abs() < 1e-9 && (h + lo).abs() < 1e-9);
            if !mirrored {
                return Err(ModelError::InvalidParams(format!(
                    "interval [{lo}, {hi}] has no mirror image about 0"
                )));
            }
        }
        Ok(FirmLayout { intervals })
    }

    /// Single central block `[-half_width, half_width]`.
    pub fn central_block(half_width: f64) -> Result<Self> {
        FirmLayout::new(vec![(-half_width, half_width)])
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    /// Total occupied length.
    pub fn measure(&self) -> f64 {
        self.intervals.iter().map(|&(lo, hi)| hi - lo).sum()
    }

    /// Raw FTF cost integral `T(y) = sum_i \int_{l_i}^{u_i} |y - x| dx`.
    ///
    /// The communication rate and the on-site share are applied by the bid
    /// rents, never here.
    pub fn ftf_cost(&self, y: f64) -> f64 {
        self.intervals
            .iter()
            .map(|&(lo, hi)| segment_distance_integral(lo, hi, y))
            .sum()
    }

    /// Density-weighted variant of [`FirmLayout::ftf_cost`]; `weights` pairs
    /// with the sorted intervals.
    pub fn ftf_cost_weighted(&self, y: f64, weights: &[f64]) -> Result<f64> {
        if weights.len() != self.intervals.len() {
            return Err(ModelError::InvalidParams(format!(
                "expected {} weights, got {}",
                self.intervals.len(),
                weights.len()
            )));
        }
        Ok(self
            .intervals
            .iter()
            .zip(weights)
            .map(|(&(lo, hi), &w)| w * segment_distance_integral(lo, hi, y))
            .sum())
    }
}

/// `\int_lo^hi |y - x| dx` in closed form.
fn segment_distance_integral(lo: f64, hi: f64, y: f64) -> f64 {
    if y <= lo {
        let mid = 0.5 * (lo + hi);
        (hi - lo) * (mid - y)
    } else if y >= hi {
        let mid = 0.5 * (lo + hi);
        (hi - lo) * (y - mid)
    } else {
        let left = y - lo;
        let right = hi - y;
        0.5 * (left * left + right * right)
    }
}
