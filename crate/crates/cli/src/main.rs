//! `qstat`: distribution-function curves, level entropies, fixed-N
//! temperature sweeps and boson condensation reports for small quantum
//! systems, with deterministic CSV or JSON output.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain/infeasibility error,
//! 4 solver non-convergence.

use clap::Parser;
use qstat_cli::{run, Cli};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
