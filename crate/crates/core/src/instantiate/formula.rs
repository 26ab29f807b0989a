use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Most atoms a truth table is built over.
pub const MAX_ATOMS: usize = 16;

/// Propositional formula over named atoms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn negate(&self) -> Formula {
        Formula::Not(Box::new(self.clone()))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Removes leading double negations.
    pub fn strip_double_negation(&self) -> &Formula {
        let mut f = self;
        while let Formula::Not(inner) = f {
            match inner.as_ref() {
                Formula::Not(g) => f = g,
                _ => break,
            }
        }
        f
    }

    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a);
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) => 4,
            Formula::Atom(_) => 5,
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Formula> {
        let tokens = tokenize(s)?;
        let mut p = Parser { tokens, pos: 0 };
        let f = p.implication()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Formula(format!(
                "unexpected `{}` in `{}`",
                p.tokens[p.pos],
                s.trim()
            )));
        }
        Ok(f)
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Formula, min: u8) -> fmt::Result {
    if child.precedence() < min {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

/// Canonical text in the input grammar, with only the parentheses needed.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Not(g) => {
                write!(f, "!")?;
                write_child(f, g, 4)
            }
            Formula::And(a, b) => {
                write_child(f, a, 3)?;
                write!(f, " & ")?;
                write_child(f, b, 4)
            }
            Formula::Or(a, b) => {
                write_child(f, a, 2)?;
                write!(f, " | ")?;
                write_child(f, b, 3)
            }
            Formula::Implies(a, b) => {
                write_child(f, a, 2)?;
                write!(f, " -> ")?;
                write_child(f, b, 1)
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Atom(String),
    Not,
    And,
    Or,
    Implies,
    Open,
    Close,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Atom(a) => write!(f, "{a}"),
            Token::Not => write!(f, "!"),
            Token::And => write!(f, "&"),
            Token::Or => write!(f, "|"),
            Token::Implies => write!(f, "->"),
            Token::Open => write!(f, "("),
            Token::Close => write!(f, ")"),
        }
    }
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '!' => out.push(Token::Not),
            '&' => out.push(Token::And),
            '|' => out.push(Token::Or),
            '(' => out.push(Token::Open),
            ')' => out.push(Token::Close),
            '-' => match chars.next() {
                Some((_, '>')) => out.push(Token::Implies),
                _ => return Err(Error::Formula(format!("expected `->` at offset {i}"))),
            },
            'a'..='z' => {
                let mut end = i + 1;
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_lowercase() || d.is_ascii_digit() || d == '_' {
                        end = j + 1;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Atom(s[i..end].to_string()));
            }
            other => return Err(Error::Formula(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&Token::Implies) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut f = self.conjunction()?;
        while self.eat(&Token::Or) {
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while self.eat(&Token::And) {
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Not) => {
                self.pos += 1;
                Ok(self.unary()?.negate())
            }
            Some(Token::Atom(a)) => {
                self.pos += 1;
                Ok(Formula::Atom(a))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let f = self.implication()?;
                if !self.eat(&Token::Close) {
                    return Err(Error::Formula("missing `)`".into()));
                }
                Ok(f)
            }
            Some(t) => Err(Error::Formula(format!("unexpected `{t}`"))),
            None => Err(Error::Formula("unexpected end of formula".into())),
        }
    }
}

/// Set of satisfying assignments, one bit per assignment of the table's atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Models(Vec<u64>);

impl Models {
    pub fn and(&self, other: &Models) -> Models {
        Models(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &Models) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

/// Truth-table evaluator over a fixed list of atoms.
#[derive(Debug, Clone)]
pub struct TruthTable {
    atoms: Vec<String>,
    atom_models: Vec<Models>,
    full: Models,
}

impl TruthTable {
    pub fn new<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Result<TruthTable> {
        let mut atoms = BTreeSet::new();
        for f in formulas {
            atoms.extend(f.atoms());
        }
        if atoms.len() > MAX_ATOMS {
            return Err(Error::AtomBound {
                atoms: atoms.len(),
                bound: MAX_ATOMS,
            });
        }
        let atoms: Vec<String> = atoms.into_iter().map(str::to_string).collect();
        let rows = 1usize << atoms.len();
        let words = rows.div_ceil(64);
        let mut full = vec![0u64; words];
        for j in 0..rows {
            full[j / 64] |= 1 << (j % 64);
        }
        let atom_models = (0..atoms.len())
            .map(|i| {
                let mut w = vec![0u64; words];
                for j in (0..rows).filter(|j| j >> i & 1 == 1) {
                    w[j / 64] |= 1 << (j % 64);
                }
                Models(w)
            })
            .collect();
        Ok(TruthTable {
            atoms,
            atom_models,
            full: Models(full),
        })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    /// All assignments.
    pub fn tautology(&self) -> Models {
        self.full.clone()
    }

    /// Panics if the formula mentions an atom outside the table.
    pub fn models(&self, f: &Formula) -> Models {
        match f {
            Formula::Atom(a) => {
                let i = self
                    .atoms
                    .binary_search(a)
                    .unwrap_or_else(|_| panic!("atom `{a}` not in truth table"));
                self.atom_models[i].clone()
            }
            Formula::Not(g) => self.complement(&self.models(g)),
            Formula::And(a, b) => self.models(a).and(&self.models(b)),
            Formula::Or(a, b) => {
                let (x, y) = (self.models(a), self.models(b));
                Models(x.0.iter().zip(&y.0).map(|(p, q)| p | q).collect())
            }
            Formula::Implies(a, b) => {
                let (x, y) = (self.complement(&self.models(a)), self.models(b));
                Models(x.0.iter().zip(&y.0).map(|(p, q)| p | q).collect())
            }
        }
    }

    fn complement(&self, m: &Models) -> Models {
        Models(m.0.iter().zip(&self.full.0).map(|(w, f)| !w & f).collect())
    }

    /// Models of the conjunction of `premises`.
    pub fn conjunction<'a>(&self, premises: impl IntoIterator<Item = &'a Formula>) -> Models {
        premises
            .into_iter()
            .fold(self.tautology(), |acc, f| acc.and(&self.models(f)))
    }
}

/// Classical entailment by truth table over the atoms that occur.
pub fn entails(premises: &[Formula], goal: &Formula) -> Result<bool> {
    let table = TruthTable::new(premises.iter().chain(std::iter::once(goal)))?;
    Ok(table.conjunction(premises).is_subset(&table.models(goal)))
}

pub fn is_consistent(premises: &[Formula]) -> Result<bool> {
    let table = TruthTable::new(premises)?;
    Ok(!table.conjunction(premises).is_empty())
}
