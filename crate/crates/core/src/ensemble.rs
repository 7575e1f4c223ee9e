//! Grand-canonical assembly over a discrete level spectrum.
//!
//! Per-level populations at a given `(T, μ)` follow from the selected
//! distribution (exact, corrected, or classical); totals `N`, `E`, `S` and
//! the grand potential `Ω = E − TS − μN` are sums over levels. The chemical
//! potential at fixed particle number is found by bisection over μ, which is
//! sound because the total `N(T, μ)` is nondecreasing in μ for every method.
//!
//! With the exact method the per-level population is pinned at its bounds
//! outside a finite θ window, so at low temperature `N(μ)` develops exact
//! plateaus; [`solve_mu`] reports the full μ-interval in that case since the
//! chemical potential is genuinely non-unique there.

use crate::bose;
use crate::error::{domain, Error, Result};
use crate::fermi;

/// Particle statistics selecting the fermion or boson formula family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistics {
    Fermi,
    Bose,
}

/// Which distribution family to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Gamma-function occupation equation with its finite θ window.
    Exact,
    /// Classical value plus the first-order 1/(2z) correction.
    Corrected,
    /// Classical Fermi-Dirac / Bose-Einstein distribution.
    Classical,
}

/// One energy level: energy ε and multiplicity of degeneracy z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    pub energy: f64,
    pub degeneracy: u32,
}

/// An ordered spectrum of levels with strictly increasing energies.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSpectrum {
    levels: Vec<Level>,
}

impl LevelSpectrum {
    /// Builds a spectrum: validates, sorts ascending by energy, and merges
    /// levels with equal energies by summing their degeneracies.
    pub fn new(levels: Vec<Level>) -> Result<Self> {
        if levels.is_empty() {
            return Err(domain("spectrum must contain at least one level"));
        }
        for l in &levels {
            if !l.energy.is_finite() {
                return Err(domain(format!("level energy must be finite, got {}", l.energy)));
            }
            if l.degeneracy == 0 {
                return Err(domain("level degeneracy must be >= 1"));
            }
        }
        let mut sorted = levels;
        sorted.sort_by(|a, b| a.energy.partial_cmp(&b.energy).unwrap());
        let mut merged: Vec<Level> = Vec::with_capacity(sorted.len());
        for l in sorted {
            match merged.last_mut() {
                Some(prev) if prev.energy == l.energy => prev.degeneracy += l.degeneracy,
                _ => merged.push(l),
            }
        }
        Ok(Self { levels: merged })
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn ground_energy(&self) -> f64 {
        self.levels[0].energy
    }

    /// Total number of states, Σ z_j.
    pub fn capacity(&self) -> f64 {
        self.levels.iter().map(|l| f64::from(l.degeneracy)).sum()
    }
}

/// A grand-canonical state: temperature (k_B = 1) and chemical potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrandState {
    pub temperature: f64,
    pub mu: f64,
}

impl GrandState {
    fn check(&self) -> Result<()> {
        if !self.temperature.is_finite() || self.temperature <= 0.0 {
            return Err(domain(format!(
                "temperature must be finite and > 0, got {}",
                self.temperature
            )));
        }
        if !self.mu.is_finite() {
            return Err(domain(format!("chemical potential must be finite, got {}", self.mu)));
        }
        Ok(())
    }
}

/// Aggregate observables at a grand-canonical state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observables {
    pub n_total: f64,
    pub energy: f64,
    pub entropy: f64,
    pub omega: f64,
}

/// Chemical potential solution; `plateau` is the full μ-interval (with its
/// midpoint in `mu`) when every level is pinned and μ is non-unique.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuSolution {
    pub mu: f64,
    pub plateau: Option<(f64, f64)>,
}

/// Boson condensation-analogue point: the temperature at which the ground
/// level empties, the matching chemical potential, and all level populations.
#[derive(Debug, Clone, PartialEq)]
pub struct CondensationPoint {
    pub temperature: f64,
    pub mu: f64,
    pub occupations: Vec<f64>,
}

fn check_tol(tol: f64) -> Result<()> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(domain(format!("tolerance must be finite and > 0, got {tol}")));
    }
    Ok(())
}

/// Exact boson level population; a z = 1 level has an empty occupation
/// equation and holds nothing at any θ > 0.
fn exact_bose_level(theta: f64, z: u32, tol: f64) -> Result<f64> {
    if z == 1 {
        Ok(0.0)
    } else {
        bose::be_occupation_exact(theta, z, tol)
    }
}

fn level_occupation(theta: f64, z: u32, stat: Statistics, method: Method, tol: f64) -> Result<f64> {
    match (stat, method) {
        (Statistics::Fermi, Method::Classical) => Ok(fermi::fd_classical(theta)),
        (Statistics::Fermi, Method::Corrected) => {
            Ok(fermi::fd_occupation_corrected(theta, z).clamp(0.0, 1.0))
        }
        (Statistics::Fermi, Method::Exact) => fermi::fd_occupation_exact(theta, z, tol),
        (Statistics::Bose, Method::Classical) => bose::be_classical(theta),
        (Statistics::Bose, Method::Corrected) => bose::be_occupation_corrected(theta, z),
        (Statistics::Bose, Method::Exact) => exact_bose_level(theta, z, tol),
    }
}

/// Entropy of one level, matched to the method that produced its population:
/// the exact gamma form for [`Method::Exact`], the Stirling-corrected form
/// for [`Method::Corrected`], and the plain mixing entropy (the variational
/// partner of the classical distributions) for [`Method::Classical`].
/// Pinned populations contribute zero.
fn level_entropy(n: f64, z: u32, stat: Statistics, method: Method) -> Result<f64> {
    let zf = f64::from(z);
    match (stat, method) {
        (Statistics::Fermi, Method::Exact) => fermi::fd_entropy_exact(n, z),
        (Statistics::Bose, Method::Exact) => bose::be_entropy_exact(n, z),
        (Statistics::Fermi, Method::Corrected) => {
            if n > 0.0 && n < 1.0 {
                fermi::fd_entropy_stirling(n, z)
            } else {
                Ok(0.0)
            }
        }
        (Statistics::Bose, Method::Corrected) => {
            if n > 0.0 {
                bose::be_entropy_stirling(n, z)
            } else {
                Ok(0.0)
            }
        }
        (Statistics::Fermi, Method::Classical) => Ok(if n > 0.0 && n < 1.0 {
            -zf * (n * n.ln() + (1.0 - n) * (1.0 - n).ln())
        } else {
            0.0
        }),
        (Statistics::Bose, Method::Classical) => Ok(if n > 0.0 {
            zf * ((1.0 + n) * (1.0 + n).ln() - n * n.ln())
        } else {
            0.0
        }),
    }
}

fn check_bose_mu(spectrum: &LevelSpectrum, state: &GrandState) -> Result<()> {
    if state.mu >= spectrum.ground_energy() {
        return Err(domain(format!(
            "boson chemical potential must lie below the ground energy {} to keep every theta positive, got mu = {}",
            spectrum.ground_energy(),
            state.mu
        )));
    }
    Ok(())
}

/// Per-level populations at `(T, μ)` using the selected method.
///
/// Exact-method values are pinned at their bounds outside the finite θ
/// window of each level; corrected fermion values are clipped into [0, 1];
/// corrected boson values are returned raw and may be negative outside the
/// validity window of the correction.
pub fn occupations(
    spectrum: &LevelSpectrum,
    state: &GrandState,
    stat: Statistics,
    method: Method,
    tol: f64,
) -> Result<Vec<f64>> {
    state.check()?;
    check_tol(tol)?;
    if stat == Statistics::Bose {
        check_bose_mu(spectrum, state)?;
    }
    spectrum
        .levels
        .iter()
        .map(|l| {
            let theta = (l.energy - state.mu) / state.temperature;
            level_occupation(theta, l.degeneracy, stat, method, tol)
        })
        .collect()
}

/// Totals N, E, S and Ω = E − TS − μN at `(T, μ)`.
///
/// Corrected-method thermodynamics are restricted to states where every
/// occupation is nonnegative; boson states violating that are rejected.
pub fn observables(
    spectrum: &LevelSpectrum,
    state: &GrandState,
    stat: Statistics,
    method: Method,
    tol: f64,
) -> Result<Observables> {
    let occ = occupations(spectrum, state, stat, method, tol)?;
    if stat == Statistics::Bose && method == Method::Corrected {
        if let Some((j, &n)) = occ.iter().enumerate().find(|&(_, &n)| n < 0.0) {
            return Err(domain(format!(
                "corrected occupation of level {} is negative (n = {n:e}); corrected-method \
                 thermodynamics are restricted to states with nonnegative occupations",
                j + 1
            )));
        }
    }
    let mut n_total = 0.0;
    let mut energy = 0.0;
    let mut entropy = 0.0;
    for (l, &n) in spectrum.levels.iter().zip(&occ) {
        let zf = f64::from(l.degeneracy);
        n_total += zf * n;
        energy += l.energy * zf * n;
        entropy += level_entropy(n, l.degeneracy, stat, method)?;
    }
    let omega = energy - state.temperature * entropy - state.mu * n_total;
    Ok(Observables { n_total, energy, entropy, omega })
}

/// θ half-width outside which a level is pinned, per method (fermions).
fn fermi_pin_window(z: u32, method: Method) -> f64 {
    match method {
        Method::Exact => fermi::fd_theta_max(z),
        Method::Corrected => (2.0 * f64::from(z) + 1.0).ln(),
        // The classical distribution never pins; beyond |theta| ~ 40 the
        // tails are below f64 resolution anyway.
        Method::Classical => 40.0,
    }
}

fn bose_pin_window(z: u32, method: Method) -> f64 {
    match method {
        Method::Exact => bose::be_theta_max(z),
        Method::Corrected | Method::Classical => 40.0,
    }
}

/// Chemical potential at which the total particle number equals `n_target`.
///
/// `N(T, μ)` is nondecreasing in μ, so a sign-preserving bisection over μ
/// converges unconditionally. When the exact (or clip-corrected) fermion
/// method pins every level, `N` is constant over a μ-interval; the interval
/// and its midpoint are returned (the upper edge is infinite when the
/// spectrum is filled to capacity).
pub fn solve_mu(
    spectrum: &LevelSpectrum,
    temperature: f64,
    n_target: f64,
    stat: Statistics,
    method: Method,
    tol: f64,
) -> Result<MuSolution> {
    if !temperature.is_finite() || temperature <= 0.0 {
        return Err(domain(format!("temperature must be > 0, got {temperature}")));
    }
    if !n_target.is_finite() || n_target <= 0.0 {
        return Err(domain(format!("target particle number must be > 0, got {n_target}")));
    }
    check_tol(tol)?;

    let capacity = spectrum.capacity();
    if stat == Statistics::Fermi {
        let attainable = if method == Method::Classical { n_target < capacity } else { n_target <= capacity };
        if !attainable {
            let caps: Vec<String> = spectrum
                .levels
                .iter()
                .map(|l| format!("(eps = {}, z = {})", l.energy, l.degeneracy))
                .collect();
            return Err(Error::Infeasible(format!(
                "fermion target N = {n_target} exceeds the spectrum capacity {capacity} \
                 (levels: {})",
                caps.join(", ")
            )));
        }
    }

    let total = |mu: f64| -> Result<f64> {
        let state = GrandState { temperature, mu };
        let occ = occupations(spectrum, &state, stat, method, tol)?;
        Ok(occ
            .iter()
            .zip(&spectrum.levels)
            .map(|(&n, l)| f64::from(l.degeneracy) * n)
            .sum())
    };

    let ground = spectrum.ground_energy();
    let top = spectrum.levels.last().unwrap().energy;
    let span = (top - ground).max(1.0);
    let window = |z: u32| match stat {
        Statistics::Fermi => fermi_pin_window(z, method),
        Statistics::Bose => bose_pin_window(z, method),
    };
    let w_max = spectrum.levels.iter().map(|l| window(l.degeneracy)).fold(0.0f64, f64::max);

    // Lower bracket: march down until the spectrum is empty enough.
    let mut lo = ground - temperature * (w_max + 5.0) - span;
    let mut step = span + temperature;
    let mut guard = 0;
    while total(lo)? > n_target {
        lo -= step;
        step *= 2.0;
        guard += 1;
        if guard > 200 {
            return Err(Error::NoConvergence("failed to bracket mu from below".into()));
        }
    }

    // Upper bracket.
    let mut hi;
    match stat {
        Statistics::Fermi => {
            hi = top + temperature * (w_max + 5.0) + span;
            let mut step = span + temperature;
            let mut guard = 0;
            while total(hi)? < n_target {
                hi += step;
                step *= 2.0;
                guard += 1;
                if guard > 200 {
                    return Err(Error::Infeasible(format!(
                        "fermion target N = {n_target} is reached only as mu -> infinity \
                         (capacity {capacity})"
                    )));
                }
            }
        }
        Statistics::Bose => {
            // Approach the ground energy from below; theta_1 = frac stays > 0.
            let mut frac = 0.5;
            hi = ground - temperature * frac;
            let mut guard = 0;
            while total(hi)? < n_target {
                frac *= 0.5;
                hi = ground - temperature * frac;
                guard += 1;
                if guard > 200 {
                    return Err(Error::Infeasible(format!(
                        "boson spectrum cannot hold N = {n_target} at T = {temperature}: \
                         the total saturates below the target as mu approaches the ground energy"
                    )));
                }
            }
        }
    }

    // Bisection; g(lo) <= 0 <= g(hi).
    let mut mu;
    let mut iterations = 0;
    loop {
        mu = 0.5 * (lo + hi);
        let g = total(mu)? - n_target;
        if g.abs() <= tol {
            break;
        }
        if g < 0.0 {
            lo = mu;
        } else {
            hi = mu;
        }
        if hi - lo <= f64::EPSILON * hi.abs().max(lo.abs()).max(1.0) {
            if g.abs() > tol {
                return Err(Error::NoConvergence(format!(
                    "mu interval collapsed at {mu} with |N - target| = {:e} > tolerance {tol:e}",
                    g.abs()
                )));
            }
            break;
        }
        iterations += 1;
        if iterations > 300 {
            return Err(Error::NoConvergence("mu bisection exceeded its iteration cap".into()));
        }
    }

    // Plateau detection: with every fermion level pinned, N is locally
    // constant and mu is any point of an interval.
    let occ = occupations(spectrum, &GrandState { temperature, mu }, stat, method, tol)?;
    let pinned =
        stat == Statistics::Fermi && method != Method::Classical && occ.iter().all(|&n| n == 0.0 || n == 1.0);
    if pinned {
        let mut p_lo = f64::NEG_INFINITY;
        let mut p_hi = f64::INFINITY;
        for (l, &n) in spectrum.levels.iter().zip(&occ) {
            let w = temperature * window(l.degeneracy);
            if n == 1.0 {
                p_lo = p_lo.max(l.energy + w);
            } else {
                p_hi = p_hi.min(l.energy - w);
            }
        }
        let mid = if p_hi.is_finite() { 0.5 * (p_lo + p_hi) } else { p_lo };
        return Ok(MuSolution { mu: mid, plateau: Some((p_lo, p_hi)) });
    }
    Ok(MuSolution { mu, plateau: None })
}

/// Central-difference check of dΩ = −S dT − N dμ.
///
/// Returns `(|∂Ω/∂T + S|, |∂Ω/∂μ + N|)` at the given state. For the exact
/// and classical methods both residuals vanish to finite-difference
/// accuracy; the corrected occupations solve their stationarity equation
/// only to first order in 1/z, so their residuals carry an O(1/z²) offset.
pub fn maxwell_check(
    spectrum: &LevelSpectrum,
    state: &GrandState,
    stat: Statistics,
    method: Method,
    tol: f64,
    d_t: f64,
    d_mu: f64,
) -> Result<(f64, f64)> {
    if d_t.is_nan() || d_t <= 0.0 || d_mu.is_nan() || d_mu <= 0.0 {
        return Err(domain("finite-difference steps must be > 0"));
    }
    if state.temperature - d_t <= 0.0 {
        return Err(domain(format!(
            "temperature step {d_t} is not representable at T = {}",
            state.temperature
        )));
    }
    let base = observables(spectrum, state, stat, method, tol)?;
    let omega = |t: f64, mu: f64| -> Result<f64> {
        observables(spectrum, &GrandState { temperature: t, mu }, stat, method, tol).map(|o| o.omega)
    };
    let d_omega_dt =
        (omega(state.temperature + d_t, state.mu)? - omega(state.temperature - d_t, state.mu)?) / (2.0 * d_t);
    let d_omega_dmu =
        (omega(state.temperature, state.mu + d_mu)? - omega(state.temperature, state.mu - d_mu)?) / (2.0 * d_mu);
    Ok(((d_omega_dt + base.entropy).abs(), (d_omega_dmu + base.n_total).abs()))
}

/// Onset temperature T₁ at which the second level of a boson system begins
/// to fill: (ε₂ − ε₁)/T₁ = θ₂(0) − θ₁(N/z₁).
pub fn bose_t1(spectrum: &LevelSpectrum, n_target: f64) -> Result<f64> {
    if spectrum.levels.len() < 2 {
        return Err(domain("onset temperature requires at least two levels"));
    }
    if !n_target.is_finite() || n_target <= 0.0 {
        return Err(domain(format!("target particle number must be > 0, got {n_target}")));
    }
    let l1 = spectrum.levels[0];
    let l2 = spectrum.levels[1];
    if l2.degeneracy < 2 {
        return Err(domain("the second level must have z >= 2 for its occupation to onset"));
    }
    let theta2_empty = bose::be_theta_max(l2.degeneracy);
    let theta1 = bose::be_theta_raw(n_target / f64::from(l1.degeneracy), l1.degeneracy);
    let denom = theta2_empty - theta1;
    if denom <= 0.0 {
        return Err(Error::NoSolution(format!(
            "theta_2(0) - theta_1(N/z_1) = {denom:e} <= 0: the second level cannot begin \
             filling at a positive temperature"
        )));
    }
    Ok((l2.energy - l1.energy) / denom)
}

/// Condensation-analogue temperature T_B at which the ground-level
/// population vanishes.
///
/// With μ_B(T) = ε₁ − T·θ_1max pinned at the ground-level boundary, the
/// excited-level populations are exact occupations of
/// θ_j = (ε_j − ε₁)/T + θ_1max; their total is increasing in T, and T_B
/// solves Σ_{j≥2} z_j n_j(T_B) = N. Every level whose θ_j falls inside its
/// own window is included; levels pinned at zero simply contribute nothing.
pub fn bose_tb(spectrum: &LevelSpectrum, n_target: f64, tol: f64) -> Result<CondensationPoint> {
    if spectrum.levels.len() < 2 {
        return Err(domain("condensation temperature requires at least two levels"));
    }
    if !n_target.is_finite() || n_target <= 0.0 {
        return Err(domain(format!("target particle number must be > 0, got {n_target}")));
    }
    check_tol(tol)?;
    let l1 = spectrum.levels[0];
    let theta1max = bose::be_theta_max(l1.degeneracy);
    let excited = &spectrum.levels[1..];

    // As T -> infinity every theta_j decreases toward theta1max; if no
    // excited window reaches below that, the system never empties its
    // ground level.
    if !excited
        .iter()
        .any(|l| l.degeneracy >= 2 && theta1max < bose::be_theta_max(l.degeneracy))
    {
        return Err(Error::NoSolution(
            "no excited level can hold particles at the ground-level boundary: \
             theta_1max lies at or beyond every excited theta window"
                .into(),
        ));
    }

    let excited_occupations = |t: f64| -> Result<Vec<f64>> {
        excited
            .iter()
            .map(|l| {
                let theta = (l.energy - l1.energy) / t + theta1max;
                exact_bose_level(theta, l.degeneracy, tol)
            })
            .collect()
    };
    let excess = |t: f64| -> Result<f64> {
        let occ = excited_occupations(t)?;
        Ok(occ
            .iter()
            .zip(excited)
            .map(|(&n, l)| f64::from(l.degeneracy) * n)
            .sum::<f64>()
            - n_target)
    };

    // Start near the onset-temperature scale and bracket the sign change.
    let gap = spectrum.levels[1].energy - l1.energy;
    let mut t_lo = bose_t1(spectrum, n_target).unwrap_or(gap);
    let mut guard = 0;
    while excess(t_lo)? >= 0.0 {
        t_lo *= 0.5;
        guard += 1;
        if guard > 200 {
            return Err(Error::NoConvergence("failed to bracket T_B from below".into()));
        }
    }
    let mut t_hi = t_lo;
    guard = 0;
    while excess(t_hi)? <= 0.0 {
        t_hi *= 2.0;
        guard += 1;
        if guard > 40 {
            return Err(Error::NoSolution(format!(
                "excited levels cannot absorb N = {n_target} at any temperature up to 2^40 \
                 times the onset scale; no finite condensation temperature exists"
            )));
        }
    }

    let mut t_b;
    let mut iterations = 0;
    loop {
        t_b = 0.5 * (t_lo + t_hi);
        let g = excess(t_b)?;
        if g.abs() <= tol {
            break;
        }
        if g < 0.0 {
            t_lo = t_b;
        } else {
            t_hi = t_b;
        }
        if t_hi - t_lo <= f64::EPSILON * t_hi {
            break;
        }
        iterations += 1;
        if iterations > 300 {
            return Err(Error::NoConvergence("T_B bisection exceeded its iteration cap".into()));
        }
    }

    let mu_b = l1.energy - t_b * theta1max;
    let mut populations = vec![0.0];
    populations.extend(excited_occupations(t_b)?);
    Ok(CondensationPoint { temperature: t_b, mu: mu_b, occupations: populations })
}
