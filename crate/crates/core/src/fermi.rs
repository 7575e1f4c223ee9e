//! Fermion distribution functions and level entropies.
//!
//! A level of degeneracy `z` holding `N = z·n` fermions has statistical
//! weight `Γ(z+1) / (Γ(zn+1) Γ(z(1−n)+1))`. Maximizing the resulting
//! entropy at fixed particle number and energy gives the exact occupation
//! equation `ψ(z(1−n)+1) − ψ(zn+1) = θ` with `θ = (ε − μ)/T`. The exact
//! population reaches 0 and 1 at finite `θ = ±θ_max(z)`, `θ_max = H_z`;
//! the classical distribution `1/(e^θ+1)` and its 1/(2z) correction exist
//! for all `θ`.

use crate::error::{domain, Result};
use crate::solve;
use crate::specfun;

fn check_z(z: u32) -> Result<()> {
    if z == 0 {
        return Err(domain("degeneracy z must be >= 1"));
    }
    Ok(())
}

fn check_interior(n: f64) -> Result<()> {
    if !n.is_finite() || n <= 0.0 || n >= 1.0 {
        return Err(domain(format!("occupation must lie strictly inside (0, 1), got {n}")));
    }
    Ok(())
}

/// Classical Fermi-Dirac population 1/(e^θ + 1), evaluated on the stable
/// branch so both tails saturate gracefully.
pub fn fd_classical(theta: f64) -> f64 {
    if theta >= 0.0 {
        let e = (-theta).exp();
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + theta.exp())
    }
}

/// Boundary θ_max(z) = ψ(z+1) − ψ(1) = H_z of the partial-occupation window.
pub fn fd_theta_max(z: u32) -> f64 {
    specfun::harmonic_sum(z)
}

pub(crate) fn fd_theta_raw(n: f64, z: u32) -> f64 {
    let zf = f64::from(z);
    specfun::digamma_raw(zf * (1.0 - n) + 1.0) - specfun::digamma_raw(zf * n + 1.0)
}

/// dθ/dn of the exact equation; strictly negative since ψ′ > 0.
pub(crate) fn fd_theta_slope(n: f64, z: u32) -> f64 {
    let zf = f64::from(z);
    -zf * (specfun::trigamma_raw(zf * (1.0 - n) + 1.0) + specfun::trigamma_raw(zf * n + 1.0))
}

/// Exact θ(n) = ψ(z(1−n)+1) − ψ(zn+1) for 0 < n < 1.
///
/// Strictly decreasing in `n` and odd under n ↔ 1−n.
pub fn fd_theta_exact(n: f64, z: u32) -> Result<f64> {
    check_z(z)?;
    check_interior(n)?;
    Ok(fd_theta_raw(n, z))
}

/// Series form of the exact equation,
/// `θ = z(1−2n) Σ_{k≥1} 1/[(k+z(1−n))(k+zn)]`.
///
/// The series tail falls off only as 1/k, so the partial sum is completed
/// with the midpoint-rule integral of the summand; the convexity bound
/// |pref|/(12(k+min(a,b))³) on the remaining error drives the stopping rule.
pub fn fd_theta_series(n: f64, z: u32, tol: f64) -> Result<f64> {
    check_z(z)?;
    check_interior(n)?;
    if !tol.is_finite() || tol <= 0.0 {
        return Err(domain(format!("series tolerance must be > 0, got {tol}")));
    }
    let zf = f64::from(z);
    let a = zf * (1.0 - n);
    let b = zf * n;
    let pref = a - b; // z(1 - 2n)
    if pref == 0.0 {
        return Ok(0.0);
    }
    const MAX_TERMS: u64 = 100_000_000;
    // Error bound after the tail correction: |pref|/(12 (k+m)^3).
    let m = a.min(b);
    let k_stop = ((pref.abs() / (12.0 * tol)).cbrt() - m).ceil().max(1.0);
    if k_stop > MAX_TERMS as f64 {
        return Err(crate::Error::NoConvergence(format!(
            "series for theta(n={n}, z={z}) needs {k_stop:e} terms to reach tolerance \
             {tol:e}; the cap is {MAX_TERMS}"
        )));
    }
    let k_stop = k_stop as u64;
    let mut sum = 0.0;
    let mut carry = 0.0;
    for k in 1..=k_stop {
        let kf = k as f64;
        let term = 1.0 / ((kf + a) * (kf + b));
        let y = term - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    // Tail: ∫_{k+1/2}^∞ dt/((t+a)(t+b)) = ln((t+a)/(t+b))/(a−b), and the
    // prefactor equals a−b, so the product is the log itself.
    let t_mid = k_stop as f64 + 0.5;
    Ok(pref * sum + (pref / (t_mid + b)).ln_1p())
}

/// Stirling-parametric θ(n) = ln((1−n)/n) + (1/2z)(1/(1−n) − 1/n).
///
/// Not monotone in `n`; inverting it would be multiple-valued, so it is
/// only ever emitted parametrically.
pub fn fd_theta_stirling(n: f64, z: u32) -> Result<f64> {
    check_z(z)?;
    check_interior(n)?;
    let zf = f64::from(z);
    Ok(((1.0 - n) / n).ln() + (1.0 / (1.0 - n) - 1.0 / n) / (2.0 * zf))
}

/// First-order-in-1/z corrected population n⁰ − (1 − 2n⁰)/(2z).
///
/// Returned raw: slightly outside [0, 1] for |θ| beyond ln(2z+1).
pub fn fd_occupation_corrected(theta: f64, z: u32) -> f64 {
    let n0 = fd_classical(theta);
    n0 - (1.0 - 2.0 * n0) / (2.0 * f64::from(z))
}

/// Exact population n(θ): clamped to 0 (resp. 1) for θ ≥ θ_max (resp.
/// θ ≤ −θ_max), otherwise the unique root of θ(n) = θ in (0, 1) with
/// |θ(n) − θ| ≤ tol.
pub fn fd_occupation_exact(theta: f64, z: u32, tol: f64) -> Result<f64> {
    check_z(z)?;
    if !theta.is_finite() {
        return Err(domain(format!("theta must be finite, got {theta}")));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(domain(format!("solver tolerance must be > 0, got {tol}")));
    }
    let t_max = fd_theta_max(z);
    if theta >= t_max {
        return Ok(0.0);
    }
    if theta <= -t_max {
        return Ok(1.0);
    }
    // theta(n) - theta decreases from t_max - theta > 0 to -t_max - theta < 0.
    solve::invert_decreasing(
        |n| fd_theta_raw(n, z) - theta,
        |n| fd_theta_slope(n, z),
        0.0,
        1.0,
        tol,
    )
}

/// Exact level entropy −lnΓ(zn+1) − lnΓ(z(1−n)+1) + lnΓ(z+1) for n ∈ [0,1].
///
/// The logarithm of the binomial statistical weight; exactly zero at both
/// endpoints.
pub fn fd_entropy_exact(n: f64, z: u32) -> Result<f64> {
    check_z(z)?;
    if !n.is_finite() || !(0.0..=1.0).contains(&n) {
        return Err(domain(format!("occupation must lie in [0, 1], got {n}")));
    }
    let zf = f64::from(z);
    Ok(specfun::ln_gamma_raw(zf + 1.0)
        - specfun::ln_gamma_raw(zf * n + 1.0)
        - specfun::ln_gamma_raw(zf * (1.0 - n) + 1.0))
}

/// Stirling-corrected level entropy
/// −z[n ln n + (1−n) ln(1−n)] − ½ ln[2πzn(1−n)], for 0 < n < 1.
pub fn fd_entropy_stirling(n: f64, z: u32) -> Result<f64> {
    check_z(z)?;
    check_interior(n)?;
    let zf = f64::from(z);
    let mixing = -zf * (n * n.ln() + (1.0 - n) * (1.0 - n).ln());
    Ok(mixing - 0.5 * (2.0 * std::f64::consts::PI * zf * n * (1.0 - n)).ln())
}
