//! `lagrange-fit` binary. Exit status: 0 on success, 1 when a fit fails
//! numerically (singular system, diverged training), 2 for usage and input
//! problems. Argument errors are handled by clap, which also exits with 2.

use std::process::ExitCode;

fn main() -> ExitCode {
    match lagrange_fit::cli::main_entry() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 1 } else { 2 })
        }
    }
}
