//! Grand-canonical tests: occupations and totals, chemical-potential
//! solving with plateau reporting, zero-temperature limits, the boson
//! onset/condensation temperatures, and the dΩ = −S dT − N dμ identity.

use qstat::ensemble::*;
use qstat::specfun::harmonic;
use qstat::{bose, fermi, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn spectrum(levels: &[(f64, u32)]) -> LevelSpectrum {
    LevelSpectrum::new(
        levels
            .iter()
            .map(|&(energy, degeneracy)| Level { energy, degeneracy })
            .collect(),
    )
    .unwrap()
}

const TOL: f64 = 1e-12;

#[test]
fn occupations_examples() {
    let one = spectrum(&[(0.0, 2)]);
    for method in [Method::Exact, Method::Corrected, Method::Classical] {
        let occ = occupations(
            &one,
            &GrandState { temperature: 0.7, mu: 0.0 },
            Statistics::Fermi,
            method,
            TOL,
        )
        .unwrap();
        assert_eq!(occ, vec![0.5], "theta = 0 is half filling for every method");
    }
    // theta = 1.5 sits exactly on the z = 2 window edge
    let occ = occupations(
        &one,
        &GrandState { temperature: 1.0, mu: -1.5 },
        Statistics::Fermi,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert_eq!(occ, vec![0.0]);
    // bosons: theta = 1/3 inverts to n = 1
    let occ = occupations(
        &one,
        &GrandState { temperature: 3.0, mu: -1.0 },
        Statistics::Bose,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert!((occ[0] - 1.0).abs() < 1e-11);
}

#[test]
fn observables_half_filled_level() {
    let one = spectrum(&[(0.0, 2)]);
    let obs = observables(
        &one,
        &GrandState { temperature: 1.0, mu: 0.0 },
        Statistics::Fermi,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert!((obs.n_total - 1.0).abs() < 1e-12);
    assert_eq!(obs.energy, 0.0);
    assert!((obs.entropy - 2f64.ln()).abs() < 1e-12);
    assert!((obs.omega - (-2f64.ln())).abs() < 1e-12);
}

#[test]
fn observables_bose_ground_level_entropy_at_low_t() {
    // All N = 3 particles on the ground level (0, z = 3) at low T:
    // S = ln Gamma(N + z) - ln Gamma(N + 1) - ln Gamma(z) = ln C(5, 3)
    let s = spectrum(&[(0.0, 3), (5.0, 3)]);
    let mu = solve_mu(&s, 0.01, 3.0, Statistics::Bose, Method::Exact, 1e-11).unwrap().mu;
    let obs = observables(
        &s,
        &GrandState { temperature: 0.01, mu },
        Statistics::Bose,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert!((obs.n_total - 3.0).abs() < 1e-9);
    assert!((obs.entropy - 10f64.ln()).abs() < 1e-8);
}

#[test]
fn entropy_vanishes_when_all_levels_are_pinned() {
    let s = spectrum(&[(0.0, 2), (1.0, 2)]);
    // mu between the shells at low T: level 1 full, level 2 empty
    let obs = observables(
        &s,
        &GrandState { temperature: 1e-3, mu: 0.5 },
        Statistics::Fermi,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert_eq!(obs.entropy, 0.0);
    assert_eq!(obs.n_total, 2.0);
}

#[test]
fn solve_mu_single_level_half_filling() {
    let one = spectrum(&[(0.0, 2)]);
    for t in [0.05, 0.7, 3.0] {
        for method in [Method::Exact, Method::Corrected, Method::Classical] {
            let sol = solve_mu(&one, t, 1.0, Statistics::Fermi, method, 1e-12).unwrap();
            assert!(sol.mu.abs() < 1e-9, "mu = {} at T = {t}", sol.mu);
        }
    }
}

#[test]
fn solve_mu_two_level_partial_shell() {
    // N = 3 on (0, z=2), (1, z=2): second level half filled, mu -> eps_2
    let s = spectrum(&[(0.0, 2), (1.0, 2)]);
    let sol = solve_mu(&s, 1e-3, 3.0, Statistics::Fermi, Method::Exact, 1e-12).unwrap();
    assert!(sol.plateau.is_none());
    assert!((sol.mu - 1.0).abs() < 1e-3);
    let occ = occupations(
        &s,
        &GrandState { temperature: 1e-3, mu: sol.mu },
        Statistics::Fermi,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert_eq!(occ[0], 1.0);
    assert!((occ[1] - 0.5).abs() < 1e-6);
    let obs = observables(
        &s,
        &GrandState { temperature: 1e-3, mu: sol.mu },
        Statistics::Fermi,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert!((obs.entropy - 2f64.ln()).abs() < 1e-6);
}

#[test]
fn solve_mu_reports_the_plateau_for_filled_shells() {
    let s = spectrum(&[(0.0, 2), (1.0, 2)]);
    let t = 1e-2;
    let sol = solve_mu(&s, t, 2.0, Statistics::Fermi, Method::Exact, 1e-12).unwrap();
    let (lo, hi) = sol.plateau.expect("filled shell must report a mu plateau");
    // filled level pins above eps_1 + T*H_2, empty level below eps_2 - T*H_2
    assert!((lo - 1.5 * t).abs() < 1e-12);
    assert!((hi - (1.0 - 1.5 * t)).abs() < 1e-12);
    assert!((sol.mu - 0.5).abs() < 1e-12);
    let obs = observables(
        &s,
        &GrandState { temperature: t, mu: sol.mu },
        Statistics::Fermi,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert_eq!(obs.n_total, 2.0);
    assert_eq!(obs.entropy, 0.0);
}

#[test]
fn solve_mu_single_bose_level_linear_in_temperature() {
    let one = spectrum(&[(0.0, 4)]);
    for t in [0.01, 0.05] {
        let sol = solve_mu(&one, t, 2.0, Statistics::Bose, Method::Exact, 1e-11).unwrap();
        let expected = -t * bose::be_theta_exact(0.5, 4).unwrap();
        assert!((sol.mu - expected).abs() < 1e-9, "mu = {} vs {expected}", sol.mu);
    }
}

#[test]
fn total_n_is_nondecreasing_in_mu() {
    let fs = spectrum(&[(0.0, 2), (0.7, 3), (1.9, 5)]);
    for method in [Method::Exact, Method::Corrected, Method::Classical] {
        let mut prev = -1.0;
        for i in 0..=60 {
            let mu = -3.0 + 6.0 * i as f64 / 60.0;
            let occ = occupations(
                &fs,
                &GrandState { temperature: 0.4, mu },
                Statistics::Fermi,
                method,
                TOL,
            )
            .unwrap();
            let n: f64 =
                occ.iter().zip(fs.levels()).map(|(&n, l)| f64::from(l.degeneracy) * n).sum();
            assert!(n >= prev - 1e-12, "fermi {method:?} N not monotone at mu = {mu}");
            prev = n;
        }
    }
    for method in [Method::Exact, Method::Classical] {
        let mut prev = -1.0;
        for i in 0..=60 {
            let mu = -4.0 + 3.9 * i as f64 / 60.0;
            let occ = occupations(
                &fs,
                &GrandState { temperature: 0.6, mu },
                Statistics::Bose,
                method,
                TOL,
            )
            .unwrap();
            let n: f64 =
                occ.iter().zip(fs.levels()).map(|(&n, l)| f64::from(l.degeneracy) * n).sum();
            assert!(n >= prev - 1e-12, "bose {method:?} N not monotone at mu = {mu}");
            prev = n;
        }
    }
}

#[test]
fn partially_occupied_level_count_follows_the_window_rule() {
    let s = spectrum(&[(0.0, 2), (1.0, 2), (2.0, 4), (3.5, 6)]);
    let mu = 1.2;
    let mut prev_count = 0;
    for &t in &[0.05, 0.1, 0.2, 0.4, 0.8, 1.6, 3.2] {
        let occ = occupations(
            &s,
            &GrandState { temperature: t, mu },
            Statistics::Fermi,
            Method::Exact,
            TOL,
        )
        .unwrap();
        let mut expected = 0;
        for l in s.levels() {
            if ((l.energy - mu) / t).abs() < fermi::fd_theta_max(l.degeneracy) {
                expected += 1;
            }
        }
        let count = occ.iter().filter(|&&n| n != 0.0 && n != 1.0).count();
        assert_eq!(count, expected, "partial count at T = {t}");
        assert!(count >= prev_count, "partial count must not shrink as T grows");
        prev_count = count;
    }
}

#[test]
fn third_law_constants_at_low_temperature() {
    let s = spectrum(&[(0.0, 2), (1.0, 2)]);
    // partial second level: S -> ln C(2, 1) = ln 2
    let mut prev = f64::INFINITY;
    for &t in &[1e-1, 1e-2, 1e-3] {
        let sol = solve_mu(&s, t, 3.0, Statistics::Fermi, Method::Exact, 1e-12).unwrap();
        let obs = observables(
            &s,
            &GrandState { temperature: t, mu: sol.mu },
            Statistics::Fermi,
            Method::Exact,
            TOL,
        )
        .unwrap();
        let gap = (obs.entropy - 2f64.ln()).abs();
        assert!(gap <= prev + 1e-12);
        prev = gap;
    }
    assert!(prev < 1e-6);
    // whole shells: S -> 0
    let sol = solve_mu(&s, 1e-3, 2.0, Statistics::Fermi, Method::Exact, 1e-12).unwrap();
    let obs = observables(
        &s,
        &GrandState { temperature: 1e-3, mu: sol.mu },
        Statistics::Fermi,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert!(obs.entropy <= 1e-6);
}

#[test]
fn bose_t1_worked_values() {
    let s = spectrum(&[(0.0, 2), (1.0, 2)]);
    let t1 = bose_t1(&s, 2.0).unwrap();
    assert!((t1 - 1.5).abs() < 1e-12);
    // doubling the gap doubles T1
    let wide = spectrum(&[(0.0, 2), (2.0, 2)]);
    assert!((bose_t1(&wide, 2.0).unwrap() - 3.0).abs() < 1e-12);
    // a larger ground degeneracy moves theta_1 toward its boundary and
    // shrinks the denominator, raising T1
    let bigz = spectrum(&[(0.0, 4), (1.0, 2)]);
    assert!(bose_t1(&bigz, 2.0).unwrap() > t1);
    // and once theta_1(N/z_1) exceeds theta_2(0) there is no onset at all
    let closed = spectrum(&[(0.0, 8), (1.0, 2)]);
    assert!(matches!(bose_t1(&closed, 2.0).unwrap_err(), Error::NoSolution(_)));
}

#[test]
fn bose_level_filling_sequence_across_t1() {
    let s = spectrum(&[(0.0, 2), (1.0, 2)]);
    let t1 = bose_t1(&s, 2.0).unwrap();
    let below = solve_mu(&s, 0.99 * t1, 2.0, Statistics::Bose, Method::Exact, 1e-11).unwrap();
    let occ_below = occupations(
        &s,
        &GrandState { temperature: 0.99 * t1, mu: below.mu },
        Statistics::Bose,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert_eq!(occ_below[1], 0.0);
    assert!((occ_below[0] - 1.0).abs() < 1e-9);
    let above = solve_mu(&s, 1.01 * t1, 2.0, Statistics::Bose, Method::Exact, 1e-11).unwrap();
    let occ_above = occupations(
        &s,
        &GrandState { temperature: 1.01 * t1, mu: above.mu },
        Statistics::Bose,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert!(occ_above[1] > 0.0);
    assert!(occ_above[0] < 1.0);
}

#[test]
fn bose_tb_worked_spectrum() {
    let s = spectrum(&[(0.0, 2), (1.0, 20)]);
    let point = bose_tb(&s, 1.0, 1e-10).unwrap();
    let expected = 1.0 / (harmonic(20).unwrap() - 2.0);
    assert!((point.temperature - expected).abs() < 1e-9);
    assert!((expected - 0.625884195543925).abs() < 1e-12);
    assert!((point.mu + point.temperature).abs() < 1e-12, "mu_B = -T_B for this spectrum");
    assert_eq!(point.occupations[0], 0.0);
    assert!((point.occupations[1] - 0.05).abs() < 1e-9);
    // doubling the gap doubles T_B
    let wide = spectrum(&[(0.0, 2), (2.0, 20)]);
    let wide_point = bose_tb(&wide, 1.0, 1e-10).unwrap();
    assert!((wide_point.temperature - 2.0 * expected).abs() < 1e-8);
}

#[test]
fn bose_tb_no_solution_when_excited_capacity_is_closed() {
    let s = spectrum(&[(0.0, 2), (1.0, 2)]);
    let err = bose_tb(&s, 2.0, 1e-10).unwrap_err();
    assert!(matches!(err, Error::NoSolution(_)), "got {err:?}");
}

#[test]
fn bose_tb_is_consistent_with_solve_mu() {
    let s = spectrum(&[(0.0, 2), (1.0, 20)]);
    let point = bose_tb(&s, 1.0, 1e-10).unwrap();
    let sol =
        solve_mu(&s, point.temperature, 1.0, Statistics::Bose, Method::Exact, 1e-10).unwrap();
    assert!((sol.mu - point.mu).abs() < 1e-8, "solve_mu {} vs mu_B {}", sol.mu, point.mu);
    // just below T_B the ground level re-acquires population
    let t_below = 0.99 * point.temperature;
    let below = solve_mu(&s, t_below, 1.0, Statistics::Bose, Method::Exact, 1e-10).unwrap();
    let occ = occupations(
        &s,
        &GrandState { temperature: t_below, mu: below.mu },
        Statistics::Bose,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert!(occ[0] > 0.0);
    // at T_B it is gone to solver tolerance
    let at = occupations(
        &s,
        &GrandState { temperature: point.temperature, mu: sol.mu },
        Statistics::Bose,
        Method::Exact,
        TOL,
    )
    .unwrap();
    assert!(at[0] <= 1e-9);
}

fn fermi_state_clear_of_pins(rng: &mut ChaCha8Rng, s: &LevelSpectrum) -> GrandState {
    loop {
        let t = rng.random_range(0.8..1.6);
        let mu = rng.random_range(-0.3..0.8);
        let clear = s.levels().iter().all(|l| {
            let theta = (l.energy - mu) / t;
            (theta.abs() - fermi::fd_theta_max(l.degeneracy)).abs() > 0.05
        });
        if clear {
            return GrandState { temperature: t, mu };
        }
    }
}

fn bose_state_clear_of_pins(rng: &mut ChaCha8Rng, s: &LevelSpectrum) -> GrandState {
    let ground = s.ground_energy();
    loop {
        let t = rng.random_range(0.8..1.6);
        let mu = ground - rng.random_range(0.6..2.0);
        let clear = s.levels().iter().all(|l| {
            let theta = (l.energy - mu) / t;
            theta > 0.3 && (theta - bose::be_theta_max(l.degeneracy)).abs() > 0.05
        });
        if clear {
            return GrandState { temperature: t, mu };
        }
    }
}

#[test]
fn maxwell_identity_for_exact_and_classical_methods() {
    let fs = spectrum(&[(0.0, 2), (1.0, 2)]);
    let bs = spectrum(&[(0.0, 2), (1.0, 3)]);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let state = fermi_state_clear_of_pins(&mut rng, &fs);
        for method in [Method::Exact, Method::Classical] {
            let (rs, rn) =
                maxwell_check(&fs, &state, Statistics::Fermi, method, TOL, 1e-4, 1e-4).unwrap();
            assert!(rs <= 1e-6, "fermi {method:?} residual_S = {rs:e} at {state:?}");
            assert!(rn <= 1e-6, "fermi {method:?} residual_N = {rn:e} at {state:?}");
        }
        let state = bose_state_clear_of_pins(&mut rng, &bs);
        for method in [Method::Exact, Method::Classical] {
            let (rs, rn) =
                maxwell_check(&bs, &state, Statistics::Bose, method, TOL, 1e-4, 1e-4).unwrap();
            assert!(rs <= 1e-6, "bose {method:?} residual_S = {rs:e} at {state:?}");
            assert!(rn <= 1e-6, "bose {method:?} residual_N = {rn:e} at {state:?}");
        }
    }
}

#[test]
fn maxwell_identity_on_a_pinned_plateau() {
    // all levels pinned: Omega is linear in mu, so residual_N collapses
    let s = spectrum(&[(0.0, 2), (1.0, 2)]);
    let state = GrandState { temperature: 1e-3, mu: 0.5 };
    let (_, rn) =
        maxwell_check(&s, &state, Statistics::Fermi, Method::Exact, TOL, 1e-4, 1e-4).unwrap();
    assert!(rn <= 1e-9, "plateau residual_N = {rn:e}");
}

#[test]
fn maxwell_check_rejects_bad_steps() {
    let s = spectrum(&[(0.0, 2)]);
    let state = GrandState { temperature: 1e-5, mu: 0.0 };
    assert!(maxwell_check(&s, &state, Statistics::Fermi, Method::Exact, TOL, 1e-4, 1e-4).is_err());
}
