use std::process::ExitCode;

use clap::Parser;
use orthokit_cli::{execute, Cli};

fn main() -> ExitCode {
    execute(&Cli::parse())
}
