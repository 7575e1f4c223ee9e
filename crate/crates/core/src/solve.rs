//! Bracketed root finding for the monotone occupation equations.

use crate::error::{Error, Result};

const MAX_ITER: u32 = 200;

/// Root of a strictly decreasing `f` on `[lo, hi]` with `f(lo) ≥ 0 ≥ f(hi)`.
///
/// Newton steps from `df` are taken whenever they stay inside the current
/// bracket, bisection otherwise, so convergence is guaranteed by the bracket
/// while the Newton refinement drives the root to full f64 resolution.
/// Converged when `|f| ≤ f_tol` and the last step is at relative resolution.
pub(crate) fn invert_decreasing(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    f_tol: f64,
) -> Result<f64> {
    debug_assert!(lo < hi);
    let mut x = 0.5 * (lo + hi);
    for _ in 0..MAX_ITER {
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx > 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - fx / df(x);
        let next = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let resolved = (next - x).abs() <= 1e-13 * x.abs().max(1.0);
        if fx.abs() <= f_tol && resolved {
            return Ok(x);
        }
        if hi - lo <= f64::EPSILON * hi.abs().max(1.0) {
            return if fx.abs() <= f_tol {
                Ok(x)
            } else {
                Err(Error::NoConvergence(format!(
                    "bracket collapsed at x = {x} with residual {fx:e} > tolerance {f_tol:e}"
                )))
            };
        }
        x = next;
    }
    Err(Error::NoConvergence(format!(
        "root not located to tolerance {f_tol:e} within {MAX_ITER} iterations"
    )))
}
