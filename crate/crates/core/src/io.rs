//! TGF and APX readers and writers.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::af::ArgumentationFramework;
use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tgf,
    Apx,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tgf" => Ok(Format::Tgf),
            "apx" => Ok(Format::Apx),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

/// APX if the first non-blank text is an `arg(` fact, TGF otherwise.
pub fn detect_format(text: &str) -> Format {
    let t = text.trim_start();
    if t.starts_with("arg(") || t.starts_with("arg (") {
        Format::Apx
    } else {
        Format::Tgf
    }
}

pub fn parse(text: &str, format: Format) -> Result<ArgumentationFramework> {
    match format {
        Format::Tgf => parse_tgf(text),
        Format::Apx => parse_apx(text),
    }
}

pub fn write(af: &ArgumentationFramework, format: Format) -> String {
    match format {
        Format::Tgf => write_tgf(af),
        Format::Apx => write_apx(af),
    }
}

struct Builder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    attacks: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            labels: Vec::new(),
            index: HashMap::new(),
            attacks: Vec::new(),
        }
    }

    fn add_arg(&mut self, label: &str, line: usize) -> Result<()> {
        if self.index.contains_key(label) {
            return Err(ParseError::DuplicateLabel {
                line,
                label: label.to_string(),
            }
            .into());
        }
        self.index.insert(label.to_string(), self.labels.len());
        self.labels.push(label.to_string());
        Ok(())
    }

    fn lookup(&self, label: &str, line: usize) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| {
            ParseError::UnknownLabel {
                line,
                label: label.to_string(),
            }
            .into()
        })
    }

    fn finish(self) -> Result<ArgumentationFramework> {
        ArgumentationFramework::new(self.labels, self.attacks)
    }
}

/// Parses Trivial Graph Format: node lines, a `#` line, edge lines.
pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework> {
    let mut b = Builder::new();
    let mut in_edges = false;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() {
            continue;
        }
        if !in_edges {
            if content == "#" {
                in_edges = true;
                continue;
            }
            let label = content.split_whitespace().next().unwrap_or_default();
            b.add_arg(label, line)?;
        } else {
            let mut toks = content.split_whitespace();
            let (Some(src), Some(dst)) = (toks.next(), toks.next()) else {
                return Err(ParseError::Malformed {
                    line,
                    message: format!("edge line `{content}` needs a source and a target"),
                }
                .into());
            };
            let a = b.lookup(src, line)?;
            let t = b.lookup(dst, line)?;
            b.attacks.push((a, t));
        }
    }
    if !in_edges {
        return Err(ParseError::MissingSeparator { line: last_line + 1 }.into());
    }
    b.finish()
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c == '\n' {
                self.line += 1;
            }
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn malformed(&self, message: impl Into<String>) -> Error {
        ParseError::Malformed {
            line: self.line,
            message: message.into(),
        }
        .into()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            let found = self.text[self.pos..].chars().next();
            Err(self.malformed(match found {
                Some(f) => format!("expected `{c}`, found `{f}`"),
                None => format!("expected `{c}`, found end of input"),
            }))
        }
    }

    fn token(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest
            .find(|c: char| c.is_whitespace() || "(),.".contains(c))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.malformed("expected a name"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }
}

/// Parses ASPARTIX facts `arg(x).` and `att(x,y).`.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework> {
    let mut b = Builder::new();
    let mut pending = Vec::new();
    let mut cur = Cursor { text, pos: 0, line: 1 };
    while !cur.at_end() {
        let line = cur.line;
        let head = cur.token()?;
        cur.expect('(')?;
        match head {
            "arg" => {
                let label = cur.token()?;
                cur.expect(')')?;
                b.add_arg(label, line)?;
            }
            "att" => {
                let src = cur.token()?;
                cur.expect(',')?;
                let dst = cur.token()?;
                cur.expect(')')?;
                pending.push((src, dst, line));
            }
            other => return Err(cur.malformed(format!("unknown fact `{other}`"))),
        }
        cur.expect('.')?;
    }
    for (src, dst, line) in pending {
        let a = b.lookup(src, line)?;
        let t = b.lookup(dst, line)?;
        b.attacks.push((a, t));
    }
    b.finish()
}

pub fn write_tgf(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for l in af.labels() {
        out.push_str(l);
        out.push('\n');
    }
    out.push_str("#\n");
    for &(a, b) in af.attacks() {
        let _ = writeln!(out, "{} {}", af.label(a), af.label(b));
    }
    out
}

pub fn write_apx(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for l in af.labels() {
        let _ = writeln!(out, "arg({l}).");
    }
    for &(a, b) in af.attacks() {
        let _ = writeln!(out, "att({},{}).", af.label(a), af.label(b));
    }
    out
}
