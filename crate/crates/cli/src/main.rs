//! `fanramsey`: command-line front end for the fanramsey library.
//!
//! Exit codes: 0 when every claim holds, 1 when a claim fails, 2 for usage
//! or out-of-range parameters, 3 for unreadable or malformed input files.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{Failure, Report};

fn run(cli: &Cli) -> Result<Report, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Construct(a) => commands::construct(a, format),
        Command::Verify(a) => commands::verify(a, format),
        Command::Decompose(a) => commands::decompose(a, format),
        Command::Realize(a) => commands::realize(a, format),
        Command::FanFind(a) => commands::fan_find(a, format),
        Command::Search(a) => commands::search(a),
        Command::Formula(a) => commands::formula(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("serialisable")
                );
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("error: {:#}", failure.error());
            ExitCode::from(failure.exit_code())
        }
    }
}
