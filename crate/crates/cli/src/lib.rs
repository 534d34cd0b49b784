//! Lattice documents, check reports, DOT export and the `orthokit` command.

pub mod app;
pub mod document;
pub mod dot;
pub mod error;
pub mod keller;
pub mod report;

pub use app::{execute, rn_profile_holds, run, Cli, Command, Outcome};
pub use document::{emit_lattice, parse_documents, parse_lattice, LatticeDocument};
pub use dot::{export_dot, parse_dot};
pub use error::{CliError, Result};
pub use keller::keller_report;
pub use report::{run_checks, CheckFlags, Entry, Report};
