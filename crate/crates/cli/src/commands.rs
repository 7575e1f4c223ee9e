//! Implementations of the CLI subcommands.

use qstat::ensemble::{self, GrandState, Method, Statistics};
use qstat::specfun::battery::identity_battery;
use qstat::{bose, fermi};

use crate::output::{linspace, Cell, Table};
use crate::{
    CliError, CondenseArgs, CurveArgs, CurveMethodArg, EntropyArgs, EntropyMethodArg, StatArg,
    SweepArgs, SweepMethodArg,
};

const PARAMETRIC_N_EPS: f64 = 1e-4;
const PARAMETRIC_N_CAP: f64 = 10.0;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl From<StatArg> for Statistics {
    fn from(s: StatArg) -> Self {
        match s {
            StatArg::Fermi => Statistics::Fermi,
            StatArg::Bose => Statistics::Bose,
        }
    }
}

impl From<SweepMethodArg> for Method {
    fn from(m: SweepMethodArg) -> Self {
        match m {
            SweepMethodArg::Exact => Method::Exact,
            SweepMethodArg::Corrected => Method::Corrected,
            SweepMethodArg::Classical => Method::Classical,
        }
    }
}

fn curve_method_name(m: CurveMethodArg) -> &'static str {
    match m {
        CurveMethodArg::Exact => "exact",
        CurveMethodArg::Corrected => "corrected",
        CurveMethodArg::Classical => "classical",
        CurveMethodArg::StirlingParametric => "stirling-parametric",
    }
}

fn stat_name(stat: StatArg) -> &'static str {
    match stat {
        StatArg::Fermi => "fermi",
        StatArg::Bose => "bose",
    }
}

fn check_points(points: u32) -> Result<(), CliError> {
    if points < 2 {
        return Err(usage(format!("--points must be at least 2, got {points}")));
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(usage(format!("--tol must be finite and > 0, got {tol}")));
    }
    Ok(())
}

pub fn cmd_curve(args: &CurveArgs) -> Result<Table, CliError> {
    check_points(args.points)?;
    check_tol(args.tol)?;
    if args.z < 1 {
        return Err(usage("--z must be at least 1"));
    }
    let mut params = vec![
        ("stat".into(), stat_name(args.stat).to_string()),
        ("z".into(), args.z.to_string()),
        ("method".into(), curve_method_name(args.method).into()),
    ];

    let rows: Vec<Vec<Cell>> = match args.method {
        CurveMethodArg::StirlingParametric => {
            let (n_lo, n_hi) = match args.stat {
                StatArg::Fermi => (PARAMETRIC_N_EPS, 1.0 - PARAMETRIC_N_EPS),
                StatArg::Bose => (PARAMETRIC_N_EPS, PARAMETRIC_N_CAP),
            };
            params.push(("n-min".into(), n_lo.to_string()));
            params.push(("n-max".into(), n_hi.to_string()));
            params.push(("points".into(), args.points.to_string()));
            linspace(n_lo, n_hi, args.points)
                .into_iter()
                .map(|n| {
                    let theta = match args.stat {
                        StatArg::Fermi => fermi::fd_theta_stirling(n, args.z),
                        StatArg::Bose => bose::be_theta_stirling(n, args.z),
                    }
                    .map_err(CliError::Failed)?;
                    Ok(vec![Cell::Num(theta), Cell::Num(n)])
                })
                .collect::<Result<_, CliError>>()?
        }
        _ => {
            let theta_min = args
                .theta_min
                .ok_or_else(|| usage("--theta-min is required for this method"))?;
            let theta_max = args
                .theta_max
                .ok_or_else(|| usage("--theta-max is required for this method"))?;
            if theta_min.is_nan() || theta_max.is_nan() || theta_min >= theta_max {
                return Err(usage("--theta-min must be below --theta-max"));
            }
            if args.stat == StatArg::Bose && theta_min <= 0.0 {
                return Err(usage("--theta-min must be > 0 for bose statistics"));
            }
            params.push(("theta-min".into(), theta_min.to_string()));
            params.push(("theta-max".into(), theta_max.to_string()));
            params.push(("points".into(), args.points.to_string()));
            params.push(("tol".into(), format!("{:e}", args.tol)));
            params.push(("clamp".into(), args.clamp.to_string()));
            linspace(theta_min, theta_max, args.points)
                .into_iter()
                .map(|theta| {
                    let n = curve_point(theta, args)?;
                    Ok(vec![Cell::Num(theta), Cell::Num(n)])
                })
                .collect::<Result<_, CliError>>()?
        }
    };

    Ok(Table {
        command: "curve",
        params,
        columns: vec!["theta".into(), "n".into()],
        rows,
    })
}

fn curve_point(theta: f64, args: &CurveArgs) -> Result<f64, CliError> {
    let z = args.z;
    let n = match (args.stat, args.method) {
        (StatArg::Fermi, CurveMethodArg::Exact) => {
            fermi::fd_occupation_exact(theta, z, args.tol).map_err(CliError::Failed)?
        }
        (StatArg::Fermi, CurveMethodArg::Classical) => fermi::fd_classical(theta),
        (StatArg::Fermi, CurveMethodArg::Corrected) => {
            let raw = fermi::fd_occupation_corrected(theta, z);
            if args.clamp {
                raw.clamp(0.0, 1.0)
            } else {
                raw
            }
        }
        (StatArg::Bose, CurveMethodArg::Exact) => {
            bose::be_occupation_exact(theta, z, args.tol).map_err(CliError::Failed)?
        }
        (StatArg::Bose, CurveMethodArg::Classical) => {
            bose::be_classical(theta).map_err(CliError::Failed)?
        }
        (StatArg::Bose, CurveMethodArg::Corrected) => {
            let raw = bose::be_occupation_corrected(theta, z).map_err(CliError::Failed)?;
            if args.clamp {
                raw.max(0.0)
            } else {
                raw
            }
        }
        (_, CurveMethodArg::StirlingParametric) => unreachable!("handled by the caller"),
    };
    Ok(n)
}

pub fn cmd_entropy_curve(args: &EntropyArgs) -> Result<Table, CliError> {
    check_points(args.points)?;
    if args.z < 1 {
        return Err(usage("--z must be at least 1"));
    }
    if args.n_min.is_nan() || args.n_max.is_nan() || args.n_min >= args.n_max {
        return Err(usage("--n-min must be below --n-max"));
    }
    let params = vec![
        ("stat".into(), stat_name(args.stat).to_string()),
        ("z".into(), args.z.to_string()),
        ("method".into(), format!("{:?}", args.method).to_lowercase()),
        ("n-min".into(), args.n_min.to_string()),
        ("n-max".into(), args.n_max.to_string()),
        ("points".into(), args.points.to_string()),
    ];
    let rows: Vec<Vec<Cell>> = linspace(args.n_min, args.n_max, args.points)
        .into_iter()
        .map(|n| {
            let s = match (args.stat, args.method) {
                (StatArg::Fermi, EntropyMethodArg::Exact) => fermi::fd_entropy_exact(n, args.z),
                (StatArg::Fermi, EntropyMethodArg::Stirling) => {
                    fermi::fd_entropy_stirling(n, args.z)
                }
                (StatArg::Bose, EntropyMethodArg::Exact) => bose::be_entropy_exact(n, args.z),
                (StatArg::Bose, EntropyMethodArg::Stirling) => {
                    bose::be_entropy_stirling(n, args.z)
                }
            }
            .map_err(CliError::Failed)?;
            Ok(vec![Cell::Num(n), Cell::Num(s)])
        })
        .collect::<Result<_, CliError>>()?;
    Ok(Table {
        command: "entropy-curve",
        params,
        columns: vec!["n".into(), "S".into()],
        rows,
    })
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Table, CliError> {
    check_tol(args.tol)?;
    if args.points < 1 {
        return Err(usage("--points must be at least 1"));
    }
    if args.t_min.is_nan() || args.t_min <= 0.0 {
        return Err(usage(format!("--T-min must be > 0, got {}", args.t_min)));
    }
    if args.t_max.is_nan() || args.t_min > args.t_max {
        return Err(usage("--T-min must not exceed --T-max"));
    }
    let (stat, spectrum) = crate::spectrum::load(&args.spectrum)?;
    let method: Method = args.method.into();

    let params = vec![
        ("spectrum".into(), args.spectrum.display().to_string()),
        ("stat".into(), if stat == Statistics::Fermi { "fermi" } else { "bose" }.into()),
        ("N".into(), args.n_target.to_string()),
        ("T-min".into(), args.t_min.to_string()),
        ("T-max".into(), args.t_max.to_string()),
        ("points".into(), args.points.to_string()),
        ("method".into(), format!("{:?}", args.method).to_lowercase()),
        ("tol".into(), format!("{:e}", args.tol)),
    ];
    let mut columns: Vec<String> =
        ["T", "mu", "N", "E", "S", "Omega", "plateau"].map(String::from).to_vec();
    for j in 1..=spectrum.levels().len() {
        columns.push(format!("n_{j}"));
    }

    let rows: Vec<Vec<Cell>> = linspace(args.t_min, args.t_max, args.points)
        .into_iter()
        .map(|t| {
            let sol = ensemble::solve_mu(&spectrum, t, args.n_target, stat, method, args.tol)
                .map_err(CliError::Failed)?;
            let state = GrandState { temperature: t, mu: sol.mu };
            let occ = ensemble::occupations(&spectrum, &state, stat, method, args.tol)
                .map_err(CliError::Failed)?;
            let obs = ensemble::observables(&spectrum, &state, stat, method, args.tol)
                .map_err(CliError::Failed)?;
            let mut row = vec![
                Cell::Num(t),
                Cell::Num(sol.mu),
                Cell::Num(obs.n_total),
                Cell::Num(obs.energy),
                Cell::Num(obs.entropy),
                Cell::Num(obs.omega),
                Cell::Flag(sol.plateau.is_some()),
            ];
            row.extend(occ.into_iter().map(Cell::Num));
            Ok(row)
        })
        .collect::<Result<_, CliError>>()?;

    Ok(Table { command: "sweep", params, columns, rows })
}

pub fn cmd_condense(args: &CondenseArgs) -> Result<Table, CliError> {
    check_tol(args.tol)?;
    let (stat, spectrum) = crate::spectrum::load(&args.spectrum)?;
    if stat != Statistics::Bose {
        return Err(usage("condense requires a bose spectrum"));
    }
    let params = vec![
        ("spectrum".into(), args.spectrum.display().to_string()),
        ("N".into(), args.n_target.to_string()),
        ("tol".into(), format!("{:e}", args.tol)),
    ];
    let mut rows: Vec<Vec<Cell>> = Vec::new();

    match ensemble::bose_t1(&spectrum, args.n_target) {
        Ok(t1) => rows.push(vec![Cell::Text("T1".into()), Cell::Num(t1)]),
        Err(qstat::Error::NoSolution(_)) => {
            rows.push(vec![Cell::Text("T1".into()), Cell::Text("no finite T1".into())])
        }
        Err(e) => return Err(CliError::Failed(e)),
    }

    match ensemble::bose_tb(&spectrum, args.n_target, args.tol) {
        Ok(point) => {
            rows.push(vec![Cell::Text("TB".into()), Cell::Num(point.temperature)]);
            rows.push(vec![Cell::Text("muB".into()), Cell::Num(point.mu)]);
            for (j, n) in point.occupations.iter().enumerate() {
                rows.push(vec![Cell::Text(format!("n_{}", j + 1)), Cell::Num(*n)]);
            }
        }
        Err(qstat::Error::NoSolution(_)) => {
            rows.push(vec![Cell::Text("TB".into()), Cell::Text("no finite T_B".into())]);
        }
        Err(e) => return Err(CliError::Failed(e)),
    }

    Ok(Table {
        command: "condense",
        params,
        columns: vec!["quantity".into(), "value".into()],
        rows,
    })
}

pub fn cmd_check_specfun() -> (Table, bool) {
    let checks = identity_battery();
    let all_passed = checks.iter().all(|c| c.passed());
    let rows: Vec<Vec<Cell>> = checks
        .iter()
        .map(|c| {
            vec![
                Cell::Text(c.name.into()),
                Cell::Num(c.max_abs_error),
                Cell::Num(c.tolerance),
                Cell::Text(String::from(if c.passed() { "pass" } else { "fail" })),
            ]
        })
        .collect();
    let table = Table {
        command: "check-specfun",
        params: vec![],
        columns: vec![
            "identity".into(),
            "max_abs_error".into(),
            "tolerance".into(),
            "status".into(),
        ],
        rows,
    };
    (table, all_passed)
}
