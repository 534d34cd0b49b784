//! The lattice text format.
//!
//! ```text
//! # comment lines start with '#'
//! name: MO2
//! elements: [0, a, a', b, b', 1]
//! covers: [[0, a], [0, a'], [0, b], [0, b'], [a, 1], [a', 1], [b, 1], [b', 1]]
//! perp: {0: 1, a: a', a': a, b: b', b': b, 1: 0}
//! ```
//!
//! Any other `key: value` line is metadata, kept verbatim and in order.
//! Bracketed values may continue over several lines. Names are bare when
//! they avoid whitespace and `[]{},:"#\`, and double-quoted otherwise, with
//! `\"` and `\\` as the only escapes.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use orthokit::lattice::{FiniteLattice, Ortho};
use orthokit::{BoundedLattice, OrthoLattice};

use crate::error::{CliError, Result};

const RESERVED: [&str; 3] = ["elements", "covers", "perp"];

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LatticeDocument {
    pub metadata: Vec<(String, String)>,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    /// Total on `elements` when present.
    pub perp: Option<BTreeMap<String, String>>,
}

impl LatticeDocument {
    pub fn from_lattice(l: &BoundedLattice) -> Self {
        LatticeDocument {
            metadata: Vec::new(),
            elements: l.names().to_vec(),
            covers: l.cover_names(),
            perp: None,
        }
    }

    pub fn from_ortho(ol: &OrthoLattice) -> Self {
        let mut doc = Self::from_lattice(ol.lattice());
        doc.perp = Some((0..ol.len()).map(|x| (ol.name(x).into_owned(), ol.name(ol.perp(x)).into_owned())).collect());
        doc
    }

    pub fn with_meta(mut self, key: &str, value: &str) -> Self {
        match self.metadata.iter_mut().find(|(k, _)| k == key) {
            Some(entry) => entry.1 = value.to_string(),
            None => self.metadata.push((key.to_string(), value.to_string())),
        }
        self
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.metadata.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn lattice(&self) -> Result<BoundedLattice> {
        Ok(BoundedLattice::from_covers(&self.elements, &self.covers)?)
    }

    /// The ortholattice, if the document carries a `perp` map.
    pub fn ortho(&self) -> Result<Option<OrthoLattice>> {
        let Some(perp) = &self.perp else {
            return Ok(None);
        };
        let pairs: Vec<(String, String)> = perp.iter().map(|(a, b)| (a.clone(), b.clone())).collect();
        Ok(Some(OrthoLattice::from_names(self.lattice()?, &pairs)?))
    }

    /// Names unique, covers and `perp` over declared names, `perp` total.
    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for e in &self.elements {
            if !seen.insert(e.as_str()) {
                return Err(orthokit::Error::DuplicateName(e.clone()).into());
            }
        }
        let known = |n: &String| {
            if seen.contains(n.as_str()) {
                Ok(())
            } else {
                Err(CliError::from(orthokit::Error::UnknownName(n.clone())))
            }
        };
        for (a, b) in &self.covers {
            known(a)?;
            known(b)?;
        }
        if let Some(perp) = &self.perp {
            for (a, b) in perp {
                known(a)?;
                known(b)?;
            }
            if let Some(missing) = self.elements.iter().find(|e| !perp.contains_key(*e)) {
                return Err(orthokit::Error::NonTotalPerp(missing.clone()).into());
            }
        }
        Ok(())
    }
}

/// Parse and validate one document.
pub fn parse_lattice(text: &str) -> Result<LatticeDocument> {
    if text.trim_start().starts_with("digraph") {
        return crate::dot::parse_dot(text);
    }
    let lines: Vec<&str> = text.lines().collect();
    let mut doc = LatticeDocument::default();
    let mut seen_fields = HashSet::new();
    let mut i = 0;
    while i < lines.len() {
        let line_no = i + 1;
        let trimmed = lines[i].trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            i += 1;
            continue;
        }
        let Some((key, rest)) = trimmed.split_once(':') else {
            return Err(parse_err(line_no, "expected `key: value`"));
        };
        let key = key.trim();
        if !is_key(key) {
            return Err(parse_err(line_no, format!("invalid key `{key}`")));
        }
        if !seen_fields.insert(key.to_string()) {
            return Err(parse_err(line_no, format!("duplicate key `{key}`")));
        }
        if !RESERVED.contains(&key) {
            doc.metadata.push((key.to_string(), rest.trim().to_string()));
            i += 1;
            continue;
        }
        let mut value = rest.to_string();
        while !balanced(&value).map_err(|r| parse_err(line_no, r))? {
            i += 1;
            if i == lines.len() {
                return Err(parse_err(line_no, format!("unterminated `{key}` value")));
            }
            value.push('\n');
            value.push_str(lines[i]);
        }
        let mut p = ValueParser::new(&value, line_no)?;
        match key {
            "elements" => doc.elements = p.names()?,
            "covers" => doc.covers = p.pairs()?,
            _ => doc.perp = Some(p.map()?),
        }
        p.finish()?;
        i += 1;
    }
    if !seen_fields.contains("elements") {
        return Err(parse_err(lines.len().max(1), "missing `elements`"));
    }
    if !seen_fields.contains("covers") {
        return Err(parse_err(lines.len().max(1), "missing `covers`"));
    }
    doc.validate()?;
    Ok(doc)
}

/// Several documents separated by lines holding only `---`.
pub fn parse_documents(text: &str) -> Result<Vec<LatticeDocument>> {
    let mut docs = Vec::new();
    let mut chunk = String::new();
    let mut offset = 0;
    let mut chunk_start = 0;
    let flush = |chunk: &str, start: usize, docs: &mut Vec<LatticeDocument>| -> Result<()> {
        if chunk.trim().is_empty() {
            return Ok(());
        }
        parse_lattice(chunk).map(|d| docs.push(d)).map_err(|e| match e {
            CliError::Parse { line, reason } => CliError::Parse { line: line + start, reason },
            other => other,
        })
    };
    for line in text.lines() {
        if line.trim() == "---" {
            flush(&chunk, chunk_start, &mut docs)?;
            chunk.clear();
            chunk_start = offset + 1;
        } else {
            chunk.push_str(line);
            chunk.push('\n');
        }
        offset += 1;
    }
    flush(&chunk, chunk_start, &mut docs)?;
    Ok(docs)
}

pub fn emit_lattice(doc: &LatticeDocument) -> String {
    let mut out = String::new();
    for (k, v) in &doc.metadata {
        let _ = writeln!(out, "{k}: {v}");
    }
    let names: Vec<String> = doc.elements.iter().map(|n| quote(n)).collect();
    let _ = writeln!(out, "elements: [{}]", names.join(", "));
    let covers: Vec<String> = doc.covers.iter().map(|(a, b)| format!("[{}, {}]", quote(a), quote(b))).collect();
    let _ = writeln!(out, "covers: [{}]", covers.join(", "));
    if let Some(perp) = &doc.perp {
        let pairs: Vec<String> = doc
            .elements
            .iter()
            .filter_map(|e| perp.get(e).map(|p| format!("{}: {}", quote(e), quote(p))))
            .collect();
        let _ = writeln!(out, "perp: {{{}}}", pairs.join(", "));
    }
    out
}

fn parse_err(line: usize, reason: impl Into<String>) -> CliError {
    CliError::Parse { line, reason: reason.into() }
}

fn is_key(k: &str) -> bool {
    let mut chars = k.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn is_special(c: char) -> bool {
    c.is_whitespace() || "[]{},:\"#\\".contains(c)
}

pub(crate) fn quote(name: &str) -> String {
    if !name.is_empty() && !name.chars().any(is_special) {
        return name.to_string();
    }
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Whether every bracket opened in `s` is closed, ignoring quoted text.
fn balanced(s: &str) -> std::result::Result<bool, String> {
    let mut depth = 0i64;
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        match c {
            '"' => loop {
                match chars.next() {
                    Some('\\') => {
                        chars.next();
                    }
                    Some('"') => break,
                    Some('\n') | None => return Err("unterminated quoted name".into()),
                    Some(_) => {}
                }
            },
            '[' | '{' => depth += 1,
            ']' | '}' => {
                depth -= 1;
                if depth < 0 {
                    return Err(format!("unexpected `{c}`"));
                }
            }
            _ => {}
        }
    }
    Ok(depth == 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Punct(char),
    Name(String),
}

struct ValueParser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    last_line: usize,
}

impl ValueParser {
    fn new(src: &str, first_line: usize) -> Result<Self> {
        let mut toks = Vec::new();
        let mut line = first_line;
        let mut chars = src.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c == '\n' {
                line += 1;
                chars.next();
            } else if c.is_whitespace() {
                chars.next();
            } else if "[]{},:".contains(c) {
                toks.push((Tok::Punct(c), line));
                chars.next();
            } else if c == '"' {
                chars.next();
                let mut name = String::new();
                loop {
                    match chars.next() {
                        Some('\\') => match chars.next() {
                            Some(e @ ('"' | '\\')) => name.push(e),
                            _ => return Err(parse_err(line, "bad escape in quoted name")),
                        },
                        Some('"') => break,
                        Some('\n') | None => return Err(parse_err(line, "unterminated quoted name")),
                        Some(ch) => name.push(ch),
                    }
                }
                toks.push((Tok::Name(name), line));
            } else if c == '#' || c == '\\' {
                return Err(parse_err(line, format!("unexpected `{c}`")));
            } else {
                let mut name = String::new();
                while let Some(&ch) = chars.peek() {
                    if is_special(ch) {
                        break;
                    }
                    name.push(ch);
                    chars.next();
                }
                toks.push((Tok::Name(name), line));
            }
        }
        Ok(ValueParser { toks, pos: 0, last_line: line })
    }

    fn line(&self) -> usize {
        self.toks.get(self.pos).map_or(self.last_line, |t| t.1)
    }

    fn peek_punct(&self, c: char) -> bool {
        matches!(self.toks.get(self.pos), Some((Tok::Punct(p), _)) if *p == c)
    }

    fn punct(&mut self, c: char) -> Result<()> {
        if self.peek_punct(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(parse_err(self.line(), format!("expected `{c}`")))
        }
    }

    fn name(&mut self) -> Result<String> {
        match self.toks.get(self.pos) {
            Some((Tok::Name(n), line)) => {
                if n.is_empty() {
                    return Err(parse_err(*line, "empty name"));
                }
                self.pos += 1;
                Ok(n.clone())
            }
            _ => Err(parse_err(self.line(), "expected a name")),
        }
    }

    /// `open item (, item)* ,? close`
    fn seq<T>(&mut self, open: char, close: char, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.punct(open)?;
        let mut out = Vec::new();
        while !self.peek_punct(close) {
            out.push(item(self)?);
            if !self.peek_punct(close) {
                self.punct(',')?;
            }
        }
        self.punct(close)?;
        Ok(out)
    }

    fn names(&mut self) -> Result<Vec<String>> {
        self.seq('[', ']', Self::name)
    }

    fn pairs(&mut self) -> Result<Vec<(String, String)>> {
        self.seq('[', ']', |p| {
            p.punct('[')?;
            let a = p.name()?;
            p.punct(',')?;
            let b = p.name()?;
            p.punct(']')?;
            Ok((a, b))
        })
    }

    fn map(&mut self) -> Result<BTreeMap<String, String>> {
        let line = self.line();
        let entries = self.seq('{', '}', |p| {
            let a = p.name()?;
            p.punct(':')?;
            Ok((a, p.name()?))
        })?;
        let mut map = BTreeMap::new();
        for (a, b) in entries {
            if map.insert(a.clone(), b).is_some() {
                return Err(parse_err(line, format!("`{a}` has two images")));
            }
        }
        Ok(map)
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(parse_err(self.line(), "trailing input"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use orthokit::corpus;

    const CHAIN: &str = "elements: [0, 1]\ncovers: [[0, 1]]\n";

    #[test]
    fn two_chain_round_trips() {
        let doc = parse_lattice(CHAIN).unwrap();
        assert_eq!(doc.elements, vec!["0", "1"]);
        assert_eq!(emit_lattice(&doc), CHAIN);
        assert_eq!(parse_lattice(&emit_lattice(&doc)).unwrap(), doc);
    }

    #[test]
    fn multi_line_values_comments_and_metadata() {
        let text = "# MO2\nname: MO2 (six elements)\nelements: [0, a, a',\n  b, b', 1]\ncovers: [\n [0, a], [0, a'], [0, b], [0, b'],\n [a, 1], [a', 1], [b, 1], [b', 1],\n]\nperp: {0: 1, 1: 0, a: a', a': a, b: b', b': b}\n";
        let doc = parse_lattice(text).unwrap();
        assert_eq!(doc.meta("name"), Some("MO2 (six elements)"));
        let ol = doc.ortho().unwrap().unwrap();
        assert!(ol.is_orthomodular());
        assert_eq!(parse_lattice(&emit_lattice(&doc)).unwrap(), doc);
    }

    #[test]
    fn quoted_names() {
        let doc = LatticeDocument {
            metadata: vec![],
            elements: vec!["()".into(), "(a,b)".into(), "say \"hi\"".into()],
            covers: vec![("()".into(), "(a,b)".into()), ("(a,b)".into(), "say \"hi\"".into())],
            perp: None,
        };
        let text = emit_lattice(&doc);
        assert!(text.contains("\"(a,b)\""));
        assert_eq!(parse_lattice(&text).unwrap(), doc);
    }

    #[test]
    fn errors() {
        let unknown = parse_lattice("elements: [0, 1]\ncovers: [[0, x]]\n").unwrap_err();
        assert!(matches!(unknown, CliError::Lattice(orthokit::Error::UnknownName(n)) if n == "x"));
        let partial = parse_lattice("elements: [0, 1]\ncovers: [[0, 1]]\nperp: {0: 1}\n").unwrap_err();
        assert!(matches!(partial, CliError::Lattice(orthokit::Error::NonTotalPerp(n)) if n == "1"));
        let dup = parse_lattice("elements: [0, 0]\ncovers: []\n").unwrap_err();
        assert!(matches!(dup, CliError::Lattice(orthokit::Error::DuplicateName(_))));
        assert!(matches!(parse_lattice("elements: [0, 1\n"), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(parse_lattice("x\n"), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(parse_lattice("elements: [0 1]\ncovers: []\n"), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(parse_lattice("elements: [0]\ncovers: [[0,\n 0 0]]\n"), Err(CliError::Parse { line: 3, .. })));
        assert!(matches!(parse_lattice("elements: [0]\n"), Err(CliError::Parse { .. })));
    }

    #[test]
    fn corpus_round_trips() {
        for (name, l) in corpus::lattices() {
            let doc = LatticeDocument::from_lattice(&l).with_meta("name", &name);
            assert_eq!(parse_lattice(&emit_lattice(&doc)).unwrap(), doc, "{name}");
            assert_eq!(doc.lattice().unwrap(), l);
        }
        for (name, ol) in corpus::omls() {
            let doc = LatticeDocument::from_ortho(&ol).with_meta("name", &name);
            assert_eq!(parse_lattice(&emit_lattice(&doc)).unwrap(), doc, "{name}");
            assert_eq!(LatticeDocument::from_ortho(&doc.ortho().unwrap().unwrap()), LatticeDocument::from_ortho(&ol));
        }
    }

    #[test]
    fn document_streams() {
        let text = format!("{CHAIN}---\n{CHAIN}");
        assert_eq!(parse_documents(&text).unwrap().len(), 2);
        let bad = format!("{CHAIN}---\nelements: [0\n");
        assert!(matches!(parse_documents(&bad), Err(CliError::Parse { line: 4, .. })));
    }
}
