//! Log-gamma, digamma (psi), trigamma, harmonic numbers and the
//! log-factorial variants.
//!
//! All gamma-family functions are evaluated by shifting the argument upward
//! with the recurrences `ψ(x+1) = ψ(x) + 1/x`, `ln Γ(x+1) = ln Γ(x) + ln x`
//! until `x ≥ 10`, then applying the Stirling-type asymptotic expansion with
//! Bernoulli-number coefficients. At the shift threshold the first omitted
//! series term is below 1e-13 for every function here, so the truncation
//! error is dominated by f64 rounding. Arguments are restricted to x > 0.

use crate::error::{domain, Result};

/// Euler-Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ln √(2π).
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;

/// Arguments are shifted above this value before the asymptotic series.
const SHIFT_THRESHOLD: f64 = 10.0;

/// B_{2k} / (2k(2k−1)) for k = 1..=8: the ln Γ Stirling series in 1/x^(2k−1).
const LN_GAMMA_SERIES: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1_260.0,
    -1.0 / 1_680.0,
    1.0 / 1_188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3_617.0 / 122_400.0,
];

/// B_{2k} / (2k) for k = 1..=7: the ψ series in 1/x^(2k).
const DIGAMMA_SERIES: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
];

/// B_{2k} for k = 1..=7: the ψ′ series in 1/x^(2k+1).
const TRIGAMMA_SERIES: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2_730.0,
    7.0 / 6.0,
];

fn require_positive(x: f64, name: &str) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(domain(format!("{name} requires a finite argument > 0, got {x}")))
    }
}

/// Natural logarithm of the gamma function, ln Γ(x), for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    require_positive(x, "ln_gamma")?;
    Ok(ln_gamma_raw(x))
}

pub(crate) fn ln_gamma_raw(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    // Γ(1) = Γ(2) = 1 exactly; keeps entropies exactly zero at empty levels.
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < SHIFT_THRESHOLD {
        shift += y.ln();
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv;
    for c in LN_GAMMA_SERIES {
        series += c * p;
        p *= inv2;
    }
    (y - 0.5) * y.ln() - y + LN_SQRT_2PI + series - shift
}

/// Digamma function ψ(x) = d/dx ln Γ(x), for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    require_positive(x, "digamma")?;
    Ok(digamma_raw(x))
}

pub(crate) fn digamma_raw(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut acc = 0.0;
    let mut y = x;
    while y < SHIFT_THRESHOLD {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv2;
    for c in DIGAMMA_SERIES {
        series += c * p;
        p *= inv2;
    }
    acc + y.ln() - 0.5 * inv - series
}

/// Trigamma function ψ′(x), for x > 0. Always positive; used for Newton
/// steps and for certifying monotonicity of the occupation equations.
pub fn trigamma(x: f64) -> Result<f64> {
    require_positive(x, "trigamma")?;
    Ok(trigamma_raw(x))
}

pub(crate) fn trigamma_raw(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut acc = 0.0;
    let mut y = x;
    while y < SHIFT_THRESHOLD {
        acc += 1.0 / (y * y);
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv2 * inv;
    for c in TRIGAMMA_SERIES {
        series += c * p;
        p *= inv2;
    }
    acc + inv + 0.5 * inv2 + series
}

/// Harmonic number H_n = Σ_{k=1}^{n} 1/k by direct (compensated) summation.
pub fn harmonic(n: u32) -> Result<f64> {
    if n < 1 {
        return Err(domain(format!("harmonic requires n >= 1, got {n}")));
    }
    Ok(harmonic_sum(n))
}

/// H_n with H_0 = 0. Kahan-compensated, summed smallest term first.
pub(crate) fn harmonic_sum(n: u32) -> f64 {
    let mut sum = 0.0;
    let mut carry = 0.0;
    for k in (1..=n).rev() {
        let term = 1.0 / f64::from(k);
        let y = term - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    sum
}

/// ln N! through the gamma function, ln Γ(N+1); N may be non-integer.
pub fn ln_factorial_exact(n: f64) -> Result<f64> {
    if !n.is_finite() || n < 0.0 {
        return Err(domain(format!("ln_factorial_exact requires N >= 0, got {n}")));
    }
    Ok(ln_gamma_raw(n + 1.0))
}

/// The crude Stirling form N·ln(N/e). Negative for N = 1, 2.
pub fn ln_factorial_crude(n: f64) -> Result<f64> {
    require_positive(n, "ln_factorial_crude")?;
    Ok(n * (n.ln() - 1.0))
}

/// The corrected Stirling form N·ln(N/e) + ln √(2πN).
pub fn ln_factorial_stirling(n: f64) -> Result<f64> {
    require_positive(n, "ln_factorial_stirling")?;
    Ok(n * (n.ln() - 1.0) + 0.5 * (2.0 * std::f64::consts::PI * n).ln())
}

pub mod battery {
    //! Identity battery for the psi-function and log-gamma recurrences,
    //! reflection, integer values, series and asymptotics. Deterministic
    //! grids; every check reports its worst absolute error.

    use super::{digamma_raw, harmonic_sum, ln_gamma_raw, EULER_GAMMA, LN_SQRT_2PI};

    /// Outcome of one identity check over its grid.
    #[derive(Debug, Clone)]
    pub struct IdentityCheck {
        pub name: &'static str,
        pub max_abs_error: f64,
        pub tolerance: f64,
    }

    impl IdentityCheck {
        pub fn passed(&self) -> bool {
            self.max_abs_error.is_finite() && self.max_abs_error <= self.tolerance
        }
    }

    fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
        let (a, b) = (lo.ln(), hi.ln());
        (0..points)
            .map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp())
            .collect()
    }

    /// Runs all identity checks and returns one row per identity.
    pub fn identity_battery() -> Vec<IdentityCheck> {
        let mut checks = Vec::new();

        checks.push(IdentityCheck {
            name: "euler_constant",
            max_abs_error: (digamma_raw(1.0) + EULER_GAMMA).abs(),
            tolerance: 1e-12,
        });

        // psi(x+1) = psi(x) + 1/x
        let mut worst = 0.0f64;
        for x in log_grid(1e-4, 1e5, 181) {
            let err = (digamma_raw(x + 1.0) - digamma_raw(x) - 1.0 / x).abs();
            worst = worst.max(err);
        }
        checks.push(IdentityCheck {
            name: "recurrence",
            max_abs_error: worst,
            tolerance: 1e-11,
        });

        // psi(x+n) = sum_{k=1}^{n-1} 1/((n-k)+x) + psi(x+1)
        let mut worst = 0.0f64;
        for n in 2u32..=50 {
            for i in 1..=40 {
                let x = 0.25 * i as f64;
                let mut sum = 0.0;
                for k in 1..n {
                    sum += 1.0 / (f64::from(n - k) + x);
                }
                let err = (digamma_raw(x + f64::from(n)) - sum - digamma_raw(x + 1.0)).abs();
                worst = worst.max(err);
            }
        }
        checks.push(IdentityCheck {
            name: "finite_shift",
            max_abs_error: worst,
            tolerance: 1e-10,
        });

        // psi(1-x) = psi(x) + pi*cot(pi*x) on (0,1), x != 1/2
        let mut worst = 0.0f64;
        for i in 1..=19 {
            let x = 0.05 * i as f64;
            if (x - 0.5).abs() < 1e-9 {
                continue;
            }
            let cot = 1.0 / (std::f64::consts::PI * x).tan();
            let err = (digamma_raw(1.0 - x) - digamma_raw(x) - std::f64::consts::PI * cot).abs();
            worst = worst.max(err);
        }
        checks.push(IdentityCheck {
            name: "reflection",
            max_abs_error: worst,
            tolerance: 1e-9,
        });

        // psi(n) = -gamma + H_{n-1}
        let mut worst = 0.0f64;
        for n in 2u32..=100 {
            let err = (digamma_raw(f64::from(n)) + EULER_GAMMA - harmonic_sum(n - 1)).abs();
            worst = worst.max(err);
        }
        checks.push(IdentityCheck {
            name: "integer_values",
            max_abs_error: worst,
            tolerance: 1e-12,
        });

        // psi(1+x) = -gamma + sum_{k>=1} x/(k(k+x)), partial sum K = 1e6
        let mut worst = 0.0f64;
        for &x in &[0.5, 1.0, 1.5, 2.5, 3.5, 5.0] {
            let mut sum = 0.0;
            for k in (1..=1_000_000u64).rev() {
                let kf = k as f64;
                sum += x / (kf * (kf + x));
            }
            let err = (digamma_raw(1.0 + x) + EULER_GAMMA - sum).abs();
            worst = worst.max(err);
        }
        checks.push(IdentityCheck {
            name: "series",
            max_abs_error: worst,
            tolerance: 1e-5,
        });

        // ln Gamma(x) ~ (x - 1/2) ln x - x + ln sqrt(2 pi)
        let mut worst = 0.0f64;
        for &x in &[1e4f64, 3e4, 1e5, 3e5, 1e6] {
            let asym = (x - 0.5) * x.ln() - x + LN_SQRT_2PI;
            worst = worst.max((ln_gamma_raw(x) - asym).abs());
        }
        checks.push(IdentityCheck {
            name: "ln_gamma_asymptotic",
            max_abs_error: worst,
            tolerance: 1e-4,
        });

        // psi(x) ~ ln x - 1/(2x)
        let mut worst = 0.0f64;
        for &x in &[1e4f64, 3e4, 1e5, 3e5, 1e6] {
            let asym = x.ln() - 0.5 / x;
            worst = worst.max((digamma_raw(x) - asym).abs());
        }
        checks.push(IdentityCheck {
            name: "digamma_asymptotic",
            max_abs_error: worst,
            tolerance: 1e-8,
        });

        checks
    }
}
