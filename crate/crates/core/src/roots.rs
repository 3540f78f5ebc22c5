//! Scalar bracketing and bisection used by the equilibrium solvers.

use crate::error::{ModelError, Result};

/// Interval with a sign change of the scanned function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

/// Evaluates `f` on an `n`-cell uniform grid over `[lo, hi]` and returns
/// every cell with a sign change (or an exact zero at its left node).
pub fn scan_sign_changes<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, n: usize) -> Vec<Bracket> {
    let mut brackets = Vec::new();
    let step = (hi - lo) / n as f64;
    let mut x_prev = lo;
    let mut f_prev = f(lo);
    for i in 1..=n {
        let x = if i == n { hi } else { lo + step * i as f64 };
        let fx = f(x);
        if f_prev == 0.0 || (f_prev.is_finite() && fx.is_finite() && f_prev * fx < 0.0) {
            brackets.push(Bracket { lo: x_prev, hi: x });
        }
        x_prev = x;
        f_prev = fx;
    }
    if f_prev == 0.0 {
        brackets.push(Bracket {
            lo: x_prev,
            hi: x_prev,
        });
    }
    brackets
}

/// Bisects a bracketed sign change until `|f| < residual_tol`.
///
/// Bisection is deliberate: convergence is guaranteed on a sign change and
/// the solvers prize robustness over iteration counts.
pub fn bisect<F: Fn(f64) -> f64>(
    f: &F,
    bracket: Bracket,
    residual_tol: f64,
    max_iter: usize,
) -> Result<f64> {
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let mut f_lo = f(lo);
    if f_lo.abs() < residual_tol {
        return Ok(lo);
    }
    let f_hi = f(hi);
    if f_hi.abs() < residual_tol {
        return Ok(hi);
    }
    if f_lo * f_hi > 0.0 {
        return Err(ModelError::NoRoot { lo, hi });
    }
    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid.abs() < residual_tol {
            return Ok(mid);
        }
        if f_mid * f_lo < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
        if hi - lo < f64::EPSILON * mid.abs().max(1.0) {
            break;
        }
    }
    let mid = 0.5 * (lo + hi);
    let residual = f(mid).abs();
    if residual < residual_tol {
        Ok(mid)
    } else {
        Err(ModelError::RootStalled {
            width: hi - lo,
            residual,
        })
    }
}
