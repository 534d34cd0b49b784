//! Check reports: ordered `(name, verdict, witness)` triples, preceded by
//! informational facts.

use std::fmt::Write as _;

use orthokit::kalmbach::{kblocks_check, kcommute_check, katoms_check};
use orthokit::lattice::{has_n_covering, FiniteLattice, Ortho, Verdict};
use orthokit::order::predicates;
use orthokit::ortho::{blocks, center};
use orthokit::{kalmbach, Error};

use crate::document::LatticeDocument;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub holds: bool,
    /// Element names; empty when the check holds.
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub facts: Vec<(String, String)>,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn fact(&mut self, key: &str, value: impl Into<String>) {
        self.facts.push((key.to_string(), value.into()));
    }

    pub fn push(&mut self, name: &str, holds: bool, witness: Vec<String>) {
        self.entries.push(Entry { name: name.to_string(), holds, witness });
    }

    pub fn push_verdict<L: FiniteLattice + ?Sized>(&mut self, name: &str, v: &Verdict, l: &L) {
        self.push(name, v.holds, v.witness_names(l).unwrap_or_default());
    }

    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.facts {
            let _ = writeln!(out, "{k}: {v}");
        }
        for e in &self.entries {
            if e.witness.is_empty() {
                let _ = writeln!(out, "{}: {}", e.name, e.holds);
            } else {
                let _ = writeln!(out, "{}: {} ({})", e.name, e.holds, e.witness.join(", "));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckFlags {
    pub kalmbach: bool,
}

fn names<L: FiniteLattice + ?Sized>(l: &L, xs: &[usize]) -> String {
    let v: Vec<String> = xs.iter().map(|&x| l.name(x).into_owned()).collect();
    format!("[{}]", v.join(", "))
}

/// Every applicable check on `doc`, in a fixed order. Structural failures
/// of the lattice itself are errors; a `perp` map that is not an
/// orthocomplementation is reported as a failed check.
pub fn run_checks(doc: &LatticeDocument, flags: CheckFlags) -> Result<Report> {
    let l = doc.lattice()?;
    let mut r = Report::default();
    if let Some(name) = doc.meta("name") {
        r.fact("name", name);
    }
    r.fact("size", l.len().to_string());
    r.fact("height", l.height().to_string());
    r.push("lattice", true, Vec::new());
    let preds = predicates(&l);
    for (name, v) in preds.entries() {
        r.push_verdict(name, v, &l);
    }
    let ortho = match doc.ortho() {
        Ok(o) => o,
        Err(crate::CliError::Lattice(e)) if is_ortho_failure(&e) => {
            r.push("ortholattice", false, ortho_witness(&e));
            None
        }
        Err(e) => return Err(e),
    };
    if let Some(ol) = &ortho {
        r.push("ortholattice", true, Vec::new());
        r.push_verdict("orthomodular", ol.orthomodular(), ol);
        if ol.is_orthomodular() {
            match blocks(ol) {
                Ok(bs) => {
                    r.fact("blocks", bs.len().to_string());
                    for b in &bs {
                        r.fact("block", names(ol, &b.elements));
                    }
                    r.push("blocks_boolean", true, Vec::new());
                }
                Err(Error::BlockNotBoolean(w)) => r.push("blocks_boolean", false, w),
                Err(e) => return Err(e.into()),
            }
            let c = center(ol);
            r.fact("center", names(ol, &c));
            let nontrivial: Vec<String> = c
                .iter()
                .filter(|&&x| x != ol.bottom() && x != ol.top())
                .take(1)
                .map(|&x| ol.name(x).into_owned())
                .collect();
            r.push("directly_irreducible", nontrivial.is_empty(), nontrivial);
        }
    }
    for n in [1, 2] {
        r.push_verdict(&format!("covering_{n}"), &has_n_covering(&l, n), &l);
    }
    if flags.kalmbach {
        let k = kalmbach(&l)?;
        r.fact("kalmbach_size", k.len().to_string());
        r.push_verdict("k_orthomodular", &orthokit::ortho::is_orthomodular(&k), &k);
        r.push("katoms", katoms_check(&k), Vec::new());
        r.push("kblocks", kblocks_check(&k)?, Vec::new());
        r.push("kcommute", kcommute_check(&k), Vec::new());
        let perp_ok = (0..k.len()).all(|x| k.perp(k.perp(x)) == x);
        r.push("kperp_involutive", perp_ok, Vec::new());
    }
    Ok(r)
}

fn is_ortho_failure(e: &Error) -> bool {
    matches!(e, Error::NotInvolutive(_) | Error::NotOrderInverting(..) | Error::NotComplement(_))
}

fn ortho_witness(e: &Error) -> Vec<String> {
    match e {
        Error::NotInvolutive(a) | Error::NotComplement(a) => vec![a.clone()],
        Error::NotOrderInverting(a, b) => vec![a.clone(), b.clone()],
        _ => Vec::new(),
    }
}
