//! Boson distribution functions and level entropies.
//!
//! A level of degeneracy `z` holding `N = z·n` bosons has statistical
//! weight `Γ(zn+z) / (Γ(zn+1) Γ(z))`. The exact occupation equation is
//! `ψ(zn+z) − ψ(zn+1) = θ`, equivalently the finite sum
//! `Σ_{k=1}^{z−1} 1/(zn+z−k) = θ`. The population vanishes at the finite
//! boundary `θ_max(z) = ψ(z) − ψ(1) = H_{z−1}` and diverges like
//! `(z−1)/(zθ)` as θ → 0⁺, while the classical `1/(e^θ−1)` behaves as 1/θ.

use crate::error::{domain, Result};
use crate::solve;
use crate::specfun;

fn check_z(z: u32) -> Result<()> {
    if z == 0 {
        return Err(domain("degeneracy z must be >= 1"));
    }
    Ok(())
}

fn check_positive_occupation(n: f64) -> Result<()> {
    if !n.is_finite() || n <= 0.0 {
        return Err(domain(format!("boson occupation must be > 0, got {n}")));
    }
    Ok(())
}

fn check_positive_theta(theta: f64) -> Result<()> {
    if !theta.is_finite() || theta <= 0.0 {
        return Err(domain(format!("theta must be > 0 for bosons, got {theta}")));
    }
    Ok(())
}

/// Classical Bose-Einstein population 1/(e^θ − 1) for θ > 0.
pub fn be_classical(theta: f64) -> Result<f64> {
    check_positive_theta(theta)?;
    Ok(1.0 / theta.exp_m1())
}

/// Boundary θ_max(z) = ψ(z) − ψ(1) = H_{z−1}; zero for z = 1.
pub fn be_theta_max(z: u32) -> f64 {
    if z <= 1 {
        0.0
    } else {
        specfun::harmonic_sum(z - 1)
    }
}

pub(crate) fn be_theta_raw(n: f64, z: u32) -> f64 {
    let zf = f64::from(z);
    specfun::digamma_raw(zf * n + zf) - specfun::digamma_raw(zf * n + 1.0)
}

/// dθ/dn of the exact equation; strictly negative for z ≥ 2.
pub(crate) fn be_theta_slope(n: f64, z: u32) -> f64 {
    let zf = f64::from(z);
    zf * (specfun::trigamma_raw(zf * n + zf) - specfun::trigamma_raw(zf * n + 1.0))
}

/// Exact θ(n) = ψ(zn+z) − ψ(zn+1) for n > 0.
///
/// Identically zero for z = 1, where the equation does not determine the
/// occupation.
pub fn be_theta_exact(n: f64, z: u32) -> Result<f64> {
    check_z(z)?;
    check_positive_occupation(n)?;
    Ok(be_theta_raw(n, z))
}

/// Finite-sum form Σ_{k=1}^{z−1} 1/(zn + z − k); the empty sum for z = 1.
pub fn be_theta_finite_sum(n: f64, z: u32) -> Result<f64> {
    check_z(z)?;
    check_positive_occupation(n)?;
    let zf = f64::from(z);
    let mut sum = 0.0;
    let mut carry = 0.0;
    // denominators zn + j for j = 1..z-1, largest j (smallest term) first
    for j in (1..z).rev() {
        let term = 1.0 / (zf * n + f64::from(j));
        let y = term - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

/// Stirling-parametric θ(n) = ln((z+zn−1)/(zn)) + (1/2z)(z/(z+zn−1) − 1/n).
///
/// Like its fermion counterpart this map is not monotone and is only
/// emitted parametrically.
pub fn be_theta_stirling(n: f64, z: u32) -> Result<f64> {
    check_z(z)?;
    check_positive_occupation(n)?;
    let zf = f64::from(z);
    let w = zf + zf * n - 1.0;
    Ok((w / (zf * n)).ln() + (zf / w - 1.0 / n) / (2.0 * zf))
}

/// First-order-in-1/z corrected population n⁰ − (1 + 2n⁰)/(2z), θ > 0.
///
/// Returned raw: negative once θ approaches the exact boundary, where the
/// exact population has already reached zero.
pub fn be_occupation_corrected(theta: f64, z: u32) -> Result<f64> {
    check_z(z)?;
    let n0 = be_classical(theta)?;
    Ok(n0 - (1.0 + 2.0 * n0) / (2.0 * f64::from(z)))
}

/// Exact population n(θ) for z ≥ 2: zero for θ ≥ θ_max, otherwise the
/// unique positive root of θ(n) = θ with |θ(n) − θ| ≤ tol.
pub fn be_occupation_exact(theta: f64, z: u32, tol: f64) -> Result<f64> {
    if z < 2 {
        return Err(domain(format!(
            "be_occupation_exact requires z >= 2; the occupation equation is empty for z = {z}"
        )));
    }
    check_positive_theta(theta)?;
    if !tol.is_finite() || tol <= 0.0 {
        return Err(domain(format!("solver tolerance must be > 0, got {tol}")));
    }
    let t_max = be_theta_max(z);
    if theta >= t_max {
        return Ok(0.0);
    }
    // theta(n) < (z-1)/(zn), so this upper bound already overshoots the
    // root; the doubling loop is a safety net only.
    let zf = f64::from(z);
    let mut hi = (2.0 * (zf - 1.0) / (zf * theta)).max(1.0);
    let mut guard = 0;
    while be_theta_raw(hi, z) >= theta {
        hi *= 2.0;
        guard += 1;
        if guard > 200 {
            return Err(crate::Error::NoConvergence(format!(
                "failed to bracket the occupation for theta = {theta}, z = {z}"
            )));
        }
    }
    // theta(n) - theta runs from theta_max - theta > 0 at n = 0 down to
    // a negative value at hi.
    solve::invert_decreasing(
        |n| be_theta_raw(n, z) - theta,
        |n| be_theta_slope(n, z),
        0.0,
        hi,
        tol,
    )
}

/// Exact level entropy lnΓ(zn+z) − lnΓ(zn+1) − lnΓ(z) for n ≥ 0.
///
/// The logarithm of the multiset statistical weight; zero at n = 0 and
/// identically zero for z = 1.
pub fn be_entropy_exact(n: f64, z: u32) -> Result<f64> {
    check_z(z)?;
    if !n.is_finite() || n < 0.0 {
        return Err(domain(format!("boson occupation must be >= 0, got {n}")));
    }
    let zf = f64::from(z);
    Ok(specfun::ln_gamma_raw(zf * n + zf)
        - specfun::ln_gamma_raw(zf * n + 1.0)
        - specfun::ln_gamma_raw(zf))
}

/// Stirling-corrected level entropy (the full seven-term form), n > 0, z ≥ 2.
pub fn be_entropy_stirling(n: f64, z: u32) -> Result<f64> {
    if z < 2 {
        return Err(domain(format!(
            "be_entropy_stirling requires z >= 2 (the expression contains ln(z-1)), got z = {z}"
        )));
    }
    check_positive_occupation(n)?;
    let zf = f64::from(z);
    let two_pi = 2.0 * std::f64::consts::PI;
    let w = zf + zf * n - 1.0;
    let u = zf * n;
    let v = zf - 1.0;
    Ok(w * w.ln() - u * u.ln() - v * v.ln()
        + 0.5 * (two_pi * w).ln()
        - 0.5 * (two_pi * u).ln()
        - 0.5 * (two_pi * v).ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_examples() {
        assert!((be_classical(2f64.ln()).unwrap() - 1.0).abs() < 1e-15);
        let tail = be_classical(30.0).unwrap();
        assert!((tail / (-30f64).exp() - 1.0).abs() < 1e-12);
        // leading 1/theta divergence
        let n = be_classical(1e-6).unwrap();
        assert!((n * 1e-6 - 1.0).abs() < 1e-5);
        assert!(be_classical(0.0).is_err());
        assert!(be_classical(-1.0).is_err());
    }

    #[test]
    fn theta_exact_is_identically_zero_for_z_one() {
        for n in [0.1, 1.0, 7.5, 1e3] {
            assert_eq!(be_theta_exact(n, 1).unwrap(), 0.0);
            assert_eq!(be_theta_finite_sum(n, 1).unwrap(), 0.0);
        }
    }

    #[test]
    fn domain_checks() {
        assert!(be_theta_exact(0.0, 2).is_err());
        assert!(be_theta_exact(-1.0, 2).is_err());
        assert!(be_theta_finite_sum(0.0, 3).is_err());
        assert!(be_theta_stirling(0.0, 2).is_err());
        assert!(be_occupation_corrected(0.0, 2).is_err());
        assert!(be_occupation_exact(1.0, 1, 1e-12).is_err());
        assert!(be_occupation_exact(-0.5, 2, 1e-12).is_err());
        assert!(be_occupation_exact(0.5, 2, 0.0).is_err());
        assert!(be_entropy_exact(-0.1, 2).is_err());
        assert!(be_entropy_stirling(1.0, 1).is_err());
        assert!(be_entropy_stirling(0.0, 2).is_err());
    }

    #[test]
    fn entropy_exact_zero_cases() {
        for z in [1, 2, 5, 40] {
            assert_eq!(be_entropy_exact(0.0, z).unwrap(), 0.0);
        }
        for n in [0.3, 1.0, 12.0] {
            assert_eq!(be_entropy_exact(n, 1).unwrap(), 0.0);
        }
    }
}
