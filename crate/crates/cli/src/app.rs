//! Argument parsing and subcommand dispatch.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use orthokit::{kalmbach, rn_lattice, rn_report, BoundedLattice, OrthoLattice, RnReport};

use crate::document::{emit_lattice, parse_documents, LatticeDocument};
use crate::dot::export_dot;
use crate::error::{CliError, Result};
use crate::keller::keller_report;
use crate::report::{run_checks, CheckFlags};

#[derive(Debug, Parser)]
#[command(name = "orthokit", version, about = "Finite orthomodular lattices, the Kalmbach construction and series-space checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Io {
    /// Input file; stdin when absent. Repeatable where several documents are read.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Vec<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every applicable check on a lattice document.
    Check {
        #[command(flatten)]
        io: Io,
        /// Also build K(L) and check it.
        #[arg(long)]
        kalmbach: bool,
    },
    /// Write K(L) as a lattice document with its orthocomplement.
    Kalmbach {
        #[command(flatten)]
        io: Io,
    },
    /// The Rieger–Nishimura truncation with the given number of rows.
    Rn {
        #[arg(long)]
        rows: usize,
        /// Emit K of the truncation instead of the truncation itself.
        #[arg(long)]
        kalmbach: bool,
        /// Emit the structured report on K of the truncation.
        #[arg(long)]
        report: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Horizontal sum of orthomodular documents.
    Hs {
        #[command(flatten)]
        io: Io,
    },
    /// Direct product of documents, with orthocomplements when all have them.
    Product {
        #[command(flatten)]
        io: Io,
    },
    /// Randomized checks on finite slices of the series space.
    Keller {
        #[arg(long, default_value_t = 6)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Include basis types and the π table, not only the check lines.
        #[arg(long)]
        report: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Hasse diagram in DOT.
    Dot {
        #[command(flatten)]
        io: Io,
    },
}

/// Text to write and whether every check it reports passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub pass: bool,
    pub out: Option<PathBuf>,
}

impl Outcome {
    fn emit(text: String, out: &Option<PathBuf>) -> Self {
        Outcome { text, pass: true, out: out.clone() }
    }
}

fn read_all(io: &Io, stdin: &mut dyn Read) -> Result<Vec<LatticeDocument>> {
    let mut docs = Vec::new();
    if io.input.is_empty() {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        docs.extend(parse_documents(&text)?);
    }
    for path in &io.input {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        docs.extend(parse_documents(&text)?);
    }
    Ok(docs)
}

fn read_one(io: &Io, stdin: &mut dyn Read) -> Result<LatticeDocument> {
    let mut docs = read_all(io, stdin)?;
    match docs.len() {
        1 => Ok(docs.pop().unwrap()),
        n => Err(CliError::Usage(format!("expected one document, got {n}"))),
    }
}

fn named(doc: LatticeDocument, construction: &str, name: Option<String>) -> LatticeDocument {
    let doc = match name {
        Some(n) => doc.with_meta("name", &n),
        None => doc,
    };
    doc.with_meta("construction", construction)
}

/// Names of the inputs joined by `sep`, when every input is named.
fn combined_name(docs: &[LatticeDocument], sep: &str) -> Option<String> {
    let names: Option<Vec<&str>> = docs.iter().map(|d| d.meta("name")).collect();
    names.map(|n| n.join(sep))
}

/// Whether the report matches the expected profile: orthomodular,
/// irreducible away from the added top, 1-covering failing, 2-covering
/// holding, and every atom-level claim true.
pub fn rn_profile_holds(r: &RnReport) -> bool {
    r.orthomodular.holds
        && r.directly_irreducible_away_from_top
        && !r.covering1.holds
        && r.covering2.holds
        && r.shift_embedding
        && r.internal_claim_holds()
        && r.external_claim_holds()
        && r.compactness_holds()
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    match &cli.command {
        Command::Check { io, kalmbach } => {
            let doc = read_one(io, stdin)?;
            let r = run_checks(&doc, CheckFlags { kalmbach: *kalmbach })?;
            Ok(Outcome { text: r.render(), pass: r.all_pass(), out: io.out.clone() })
        }
        Command::Kalmbach { io } => {
            let doc = read_one(io, stdin)?;
            let k = kalmbach(&doc.lattice()?)?.to_ortholattice()?;
            let name = doc.meta("name").map(|n| format!("K({n})"));
            Ok(Outcome::emit(emit_lattice(&named(LatticeDocument::from_ortho(&k), "kalmbach", name)), &io.out))
        }
        Command::Rn { rows, kalmbach: with_k, report, out } => {
            if *report {
                let r = rn_report(*rows)?;
                return Ok(Outcome { text: r.render(), pass: rn_profile_holds(&r), out: out.clone() });
            }
            let rn = rn_lattice(*rows)?;
            let doc = if *with_k {
                let k = kalmbach(rn.lattice())?.to_ortholattice()?;
                named(LatticeDocument::from_ortho(&k), "kalmbach", Some(format!("K(RN{rows})")))
            } else {
                named(LatticeDocument::from_lattice(rn.lattice()), "rieger-nishimura", Some(format!("RN{rows}")))
            };
            Ok(Outcome::emit(emit_lattice(&doc), out))
        }
        Command::Hs { io } => {
            let docs = read_all(io, stdin)?;
            let ols = orthos(&docs, "hs")?;
            let refs: Vec<&OrthoLattice> = ols.iter().collect();
            let sum = orthokit::ortho::horizontal_sum(&refs)?;
            let doc = named(LatticeDocument::from_ortho(&sum), "horizontal_sum", combined_name(&docs, " + "));
            Ok(Outcome::emit(emit_lattice(&doc), &io.out))
        }
        Command::Product { io } => {
            let docs = read_all(io, stdin)?;
            if docs.is_empty() {
                return Err(CliError::Usage("product needs at least one document".into()));
            }
            let name = combined_name(&docs, " x ");
            let doc = if docs.iter().all(|d| d.perp.is_some()) {
                let ols = orthos(&docs, "product")?;
                let refs: Vec<&OrthoLattice> = ols.iter().collect();
                LatticeDocument::from_ortho(&orthokit::ortho::product(&refs)?)
            } else if docs.iter().all(|d| d.perp.is_none()) {
                let ls = docs.iter().map(LatticeDocument::lattice).collect::<Result<Vec<_>>>()?;
                let refs: Vec<&BoundedLattice> = ls.iter().collect();
                LatticeDocument::from_lattice(&BoundedLattice::product(&refs)?)
            } else {
                return Err(CliError::Usage("product needs perp on every document or on none".into()));
            };
            Ok(Outcome::emit(emit_lattice(&named(doc, "product", name)), &io.out))
        }
        Command::Keller { dim, seed, trials, report, out } => {
            let r = keller_report(*dim, *seed, *trials)?;
            let pass = r.all_pass();
            let text = if *report {
                r.render()
            } else {
                let only_checks = crate::report::Report { facts: Vec::new(), entries: r.entries };
                only_checks.render()
            };
            Ok(Outcome { text, pass, out: out.clone() })
        }
        Command::Dot { io } => {
            let doc = read_one(io, stdin)?;
            doc.lattice()?;
            Ok(Outcome::emit(export_dot(&doc), &io.out))
        }
    }
}

fn orthos(docs: &[LatticeDocument], what: &str) -> Result<Vec<OrthoLattice>> {
    docs.iter()
        .map(|d| d.ortho()?.ok_or_else(|| CliError::Usage(format!("{what} needs documents with perp"))))
        .collect()
}

/// Run and write the outcome; exit code 0 when every check passes, 1 when
/// some check is false, 2 on structural or usage errors.
pub fn execute(cli: &Cli) -> ExitCode {
    let result = run(cli, &mut std::io::stdin()).and_then(|o| {
        match &o.out {
            Some(path) => std::fs::write(path, &o.text)
                .map_err(|source| CliError::Io { path: path.display().to_string(), source })?,
            None => print!("{}", o.text),
        }
        Ok(o.pass)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
