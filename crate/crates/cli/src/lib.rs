//! Library surface of the `qstat` binary: distribution-function curves, level entropies, fixed-N
//! temperature sweeps and boson condensation reports for small quantum
//! systems, with deterministic CSV or JSON output.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain/infeasibility error,
//! 4 solver non-convergence.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

pub mod commands;
pub mod output;
pub mod spectrum;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(qstat::Error),
    Io(String),
    ChecksFailed,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(qstat::Error::NoConvergence(_)) => 4,
            CliError::Failed(_) => 3,
            CliError::Io(_) | CliError::ChecksFailed => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Failed(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "{m}"),
            CliError::ChecksFailed => write!(f, "identity battery reported failures"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatArg {
    Fermi,
    Bose,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveMethodArg {
    Exact,
    Corrected,
    Classical,
    StirlingParametric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EntropyMethodArg {
    Exact,
    Stirling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepMethodArg {
    Exact,
    Corrected,
    Classical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "qstat", version, about = "Quantum distribution functions for small systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Distribution-function curve n(θ) for one level degeneracy
    Curve(CurveArgs),
    /// Level-entropy curve S(n)
    EntropyCurve(EntropyArgs),
    /// Temperature sweep of a spectrum at fixed particle number
    Sweep(SweepArgs),
    /// Boson onset temperature T1 and condensation-analogue point T_B
    Condense(CondenseArgs),
    /// Run the psi-function/log-gamma identity battery
    CheckSpecfun(CheckArgs),
}

#[derive(Args, Debug)]
pub struct CurveArgs {
    #[arg(long)]
    pub stat: StatArg,
    #[arg(long)]
    pub z: u32,
    #[arg(long)]
    pub method: CurveMethodArg,
    /// Lower θ bound (grid methods; must be > 0 for bose)
    #[arg(long = "theta-min", allow_hyphen_values = true)]
    pub theta_min: Option<f64>,
    /// Upper θ bound (grid methods)
    #[arg(long = "theta-max", allow_hyphen_values = true)]
    pub theta_max: Option<f64>,
    #[arg(long, default_value_t = 101)]
    pub points: u32,
    /// Residual tolerance forwarded to the exact-occupation solver
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Clip corrected-method occupations into the physical range
    #[arg(long)]
    pub clamp: bool,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct EntropyArgs {
    #[arg(long)]
    pub stat: StatArg,
    #[arg(long)]
    pub z: u32,
    #[arg(long)]
    pub method: EntropyMethodArg,
    #[arg(long = "n-min", allow_hyphen_values = true)]
    pub n_min: f64,
    #[arg(long = "n-max", allow_hyphen_values = true)]
    pub n_max: f64,
    #[arg(long, default_value_t = 101)]
    pub points: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Spectrum file (TOML with `statistics` and a `levels` array)
    #[arg(long)]
    pub spectrum: PathBuf,
    /// Total particle number to hold fixed
    #[arg(long = "N", allow_hyphen_values = true)]
    pub n_target: f64,
    #[arg(long = "T-min", allow_hyphen_values = true)]
    pub t_min: f64,
    #[arg(long = "T-max", allow_hyphen_values = true)]
    pub t_max: f64,
    #[arg(long, default_value_t = 51)]
    pub points: u32,
    #[arg(long, value_enum, default_value_t = SweepMethodArg::Exact)]
    pub method: SweepMethodArg,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct CondenseArgs {
    #[arg(long)]
    pub spectrum: PathBuf,
    #[arg(long = "N", allow_hyphen_values = true)]
    pub n_target: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

fn emit_table(table: &output::Table, format: FormatArg) {
    let text = match format {
        FormatArg::Csv => table.render_csv(),
        FormatArg::Json => table.render_json(),
    };
    print!("{text}");
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Curve(args) => {
            let table = commands::cmd_curve(&args)?;
            emit_table(&table, args.format);
            Ok(())
        }
        Command::EntropyCurve(args) => {
            let table = commands::cmd_entropy_curve(&args)?;
            emit_table(&table, args.format);
            Ok(())
        }
        Command::Sweep(args) => {
            let table = commands::cmd_sweep(&args)?;
            emit_table(&table, args.format);
            Ok(())
        }
        Command::Condense(args) => {
            let table = commands::cmd_condense(&args)?;
            emit_table(&table, args.format);
            Ok(())
        }
        Command::CheckSpecfun(args) => {
            let (table, all_passed) = commands::cmd_check_specfun();
            emit_table(&table, args.format);
            if all_passed {
                Ok(())
            } else {
                Err(CliError::ChecksFailed)
            }
        }
    }
}

