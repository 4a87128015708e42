//! Library side of the `weil` command-line tool: argument definitions,
//! command implementations returning JSON values, and the verification
//! checklist.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;
pub mod verify;

pub use args::{Cli, Command};
pub use error::CliError;
pub use verify::{run_checklist, Check, Hooks, Report};

/// Runs a parsed command line; returns the text to print and the exit code.
pub fn run(cli: &Cli) -> (String, i32) {
    if matches!(cli.command, Command::VerifyPaper) && !cli.json {
        let report = run_checklist(&Hooks::default());
        return (report.to_text(), report.exit_code());
    }
    match commands::dispatch(cli) {
        Ok((value, code)) => (output::render(&value, cli.json), code),
        Err(e) => (e.to_string(), e.exit_code()),
    }
}
