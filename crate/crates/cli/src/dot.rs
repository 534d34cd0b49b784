//! Hasse diagrams as DOT digraphs, and reading them back.
//!
//! Nodes appear in element order, edges in cover order, bottom to top.
//! Metadata becomes graph attributes and `perp` a node attribute, so an
//! exported document can be parsed again without loss.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::document::LatticeDocument;
use crate::error::{CliError, Result};

pub fn export_dot(doc: &LatticeDocument) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for (k, v) in &doc.metadata {
        let _ = writeln!(out, "  {}={};", dot_quote(k), dot_quote(v));
    }
    for e in &doc.elements {
        match doc.perp.as_ref().and_then(|p| p.get(e)) {
            Some(p) => {
                let _ = writeln!(out, "  {} [perp={}];", dot_quote(e), dot_quote(p));
            }
            None => {
                let _ = writeln!(out, "  {};", dot_quote(e));
            }
        }
    }
    for (a, b) in &doc.covers {
        let _ = writeln!(out, "  {} -> {};", dot_quote(a), dot_quote(b));
    }
    out.push_str("}\n");
    out
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Id(String),
    Arrow,
    Punct(char),
}

/// Parse the DOT subset written by [`export_dot`].
pub fn parse_dot(text: &str) -> Result<LatticeDocument> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    p.keyword("digraph")?;
    if matches!(p.peek(), Some(Tok::Id(_))) {
        p.id()?;
    }
    p.punct('{')?;
    let mut doc = LatticeDocument::default();
    let mut perp = BTreeMap::new();
    while !p.at_punct('}') {
        let first = p.id()?;
        if p.at_punct('=') {
            p.pos += 1;
            let v = p.id()?;
            if first != "rankdir" {
                doc.metadata.push((first, v));
            }
        } else if matches!(p.peek(), Some(Tok::Arrow)) {
            p.pos += 1;
            let b = p.id()?;
            doc.covers.push((first, b));
        } else {
            if p.at_punct('[') {
                p.pos += 1;
                while !p.at_punct(']') {
                    let k = p.id()?;
                    p.punct('=')?;
                    let v = p.id()?;
                    if k == "perp" {
                        perp.insert(first.clone(), v);
                    }
                    if p.at_punct(',') {
                        p.pos += 1;
                    }
                }
                p.punct(']')?;
            }
            doc.elements.push(first);
        }
        p.punct(';')?;
    }
    p.punct('}')?;
    if !perp.is_empty() {
        doc.perp = Some(perp);
    }
    doc.validate()?;
    Ok(doc)
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut toks = Vec::new();
    let mut line = 1;
    let mut chars = text.chars().peekable();
    let err = |line: usize, reason: &str| CliError::Parse { line, reason: reason.to_string() };
    while let Some(c) = chars.next() {
        match c {
            '\n' => line += 1,
            c if c.is_whitespace() => {}
            '/' if chars.peek() == Some(&'/') => {
                for ch in chars.by_ref() {
                    if ch == '\n' {
                        line += 1;
                        break;
                    }
                }
            }
            '-' if chars.peek() == Some(&'>') => {
                chars.next();
                toks.push((Tok::Arrow, line));
            }
            '{' | '}' | '[' | ']' | ';' | '=' | ',' => toks.push((Tok::Punct(c), line)),
            '"' => {
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('\\') => match chars.next() {
                            Some(e @ ('"' | '\\')) => s.push(e),
                            _ => return Err(err(line, "bad escape")),
                        },
                        Some('"') => break,
                        Some('\n') | None => return Err(err(line, "unterminated string")),
                        Some(ch) => s.push(ch),
                    }
                }
                toks.push((Tok::Id(s), line));
            }
            c if c.is_ascii_alphanumeric() || c == '_' || c == '.' => {
                let mut s = String::from(c);
                while let Some(&ch) = chars.peek() {
                    if !(ch.is_ascii_alphanumeric() || ch == '_' || ch == '.') {
                        break;
                    }
                    s.push(ch);
                    chars.next();
                }
                toks.push((Tok::Id(s), line));
            }
            _ => return Err(err(line, &format!("unexpected `{c}`"))),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn line(&self) -> usize {
        self.toks.get(self.pos).or(self.toks.last()).map_or(1, |t| t.1)
    }

    fn fail<T>(&self, reason: String) -> Result<T> {
        Err(CliError::Parse { line: self.line(), reason })
    }

    fn at_punct(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Punct(c))
    }

    fn punct(&mut self, c: char) -> Result<()> {
        if self.at_punct(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected `{c}`"))
        }
    }

    fn id(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Id(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.fail("expected an identifier".into()),
        }
    }

    fn keyword(&mut self, k: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Id(s)) if s == k => {
                self.pos += 1;
                Ok(())
            }
            _ => self.fail(format!("expected `{k}`")),
        }
    }
}
