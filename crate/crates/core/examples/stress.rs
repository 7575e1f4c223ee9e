// Boundary stress probe for the occupation solvers (not a shipped example;
// used during development).
use qstat::{bose, fermi};

fn main() {
    // fermi roots vanishing toward the window edges
    for z in [1u32, 2, 10, 1000] {
        let tmax = fermi::fd_theta_max(z);
        for eps in [1e-6, 1e-9, 1e-12] {
            let theta = tmax - eps;
            let n = fermi::fd_occupation_exact(theta, z, 1e-12).unwrap();
            let res = (fermi::fd_theta_exact(n.max(1e-300), z).unwrap() - theta).abs();
            println!("fermi z={z} theta=tmax-{eps:.0e}: n={n:.3e} res={res:.2e}");
            assert!(n > 0.0 && n < 1.0);
            let sym = fermi::fd_occupation_exact(-theta, z, 1e-12).unwrap();
            assert!((sym + n - 1.0).abs() < 1e-9);
        }
    }
    // bose roots vanishing toward the boundary and diverging at small theta
    for z in [2u32, 10, 1000] {
        let tmax = bose::be_theta_max(z);
        for eps in [1e-6, 1e-9, 1e-12] {
            let theta = tmax - eps;
            let n = bose::be_occupation_exact(theta, z, 1e-12).unwrap();
            println!("bose z={z} theta=tmax-{eps:.0e}: n={n:.3e}");
            assert!(n > 0.0);
        }
        for theta in [1e-8, 1e-12] {
            let n = bose::be_occupation_exact(theta, z, 1e-13).unwrap();
            let law = (f64::from(z) - 1.0) / f64::from(z) / theta;
            println!("bose z={z} theta={theta:.0e}: n={n:.6e} law={law:.6e}");
            assert!((n * theta - (f64::from(z) - 1.0) / f64::from(z)).abs() < 1e-4);
        }
    }
    // huge degeneracy
    let n = fermi::fd_occupation_exact(1.0, 1_000_000, 1e-12).unwrap();
    println!("fermi z=1e6 theta=1: n={n:.12}");
    assert!((n - fermi::fd_classical(1.0)).abs() < 1e-6);
    let nb = bose::be_occupation_exact(1.0, 1_000_000, 1e-12).unwrap();
    println!("bose z=1e6 theta=1: n={nb:.12}");
    assert!((nb - 1.0 / 1f64.exp_m1()).abs() < 1e-5);
    println!("all stress probes passed");
}
