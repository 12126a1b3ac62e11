//! Knot expressions: `torus(2,7)`, `cable(torus(2,3),2,5)`,
//! `sum(torus(2,7), mirror(torus(3,4)))`, `fromfile("k.json")` and so on.

use std::fmt;

use cfk::complex::{mirror, FreeUComplex};
use cfk::invariants::alexander_from_complex;
use cfk::reduction::{reduce, ReduceOptions};
use cfk::staircase::{
    cable_alexander, is_lspace_form, staircase_complex, staircase_from_alexander, torus_knot_alexander, Staircase,
};
use thiserror::Error;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotExpr {
    Unknot,
    Torus(i64, i64),
    Staircase(Vec<u32>),
    Cable(Box<KnotExpr>, i64, i64),
    Mirror(Box<KnotExpr>),
    Sum(Vec<KnotExpr>),
    FromFile(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: &'static str, found: String },
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEnd(&'static str),
    #[error("unknown constructor {0:?}")]
    UnknownConstructor(String),
    #[error("{name} takes {expected}, got {found} argument(s)")]
    Arity { name: &'static str, expected: &'static str, found: usize },
    #[error("argument {index} of {name} must be {expected}")]
    BadArgument { name: &'static str, index: usize, expected: &'static str },
    #[error("integer {0} is out of range")]
    IntRange(String),
    #[error("unterminated string")]
    UnterminatedString,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    LBracket,
    RBracket,
    Comma,
    Int(i64),
    Word(String),
    Str(String),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Open => f.write_str("'('"),
            Tok::Close => f.write_str("')'"),
            Tok::LBracket => f.write_str("'['"),
            Tok::RBracket => f.write_str("']'"),
            Tok::Comma => f.write_str("','"),
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Word(w) => write!(f, "{w:?}"),
            Tok::Str(s) => write!(f, "string {s:?}"),
        }
    }
}

fn err(offset: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { offset, kind }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | '/' | '~')
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(at, c)) = chars.peek() {
        let single = match c {
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            chars.next();
            out.push((at, t));
        } else if c.is_whitespace() {
            chars.next();
        } else if c == '"' {
            chars.next();
            let mut s = String::new();
            loop {
                match chars.next() {
                    Some((_, '"')) => break,
                    Some((_, '\\')) => match chars.next() {
                        Some((_, e)) => s.push(e),
                        None => return Err(err(at, ParseErrorKind::UnterminatedString)),
                    },
                    Some((_, ch)) => s.push(ch),
                    None => return Err(err(at, ParseErrorKind::UnterminatedString)),
                }
            }
            out.push((at, Tok::Str(s)));
        } else if is_word_char(c) {
            let mut end = at;
            while let Some(&(i, ch)) = chars.peek() {
                if !is_word_char(ch) {
                    break;
                }
                end = i + ch.len_utf8();
                chars.next();
            }
            let word = &text[at..end];
            let numeric = word.strip_prefix('-').unwrap_or(word);
            let tok = if !numeric.is_empty() && numeric.bytes().all(|b| b.is_ascii_digit()) {
                Tok::Int(word.parse().map_err(|_| err(at, ParseErrorKind::IntRange(word.into())))?)
            } else {
                Tok::Word(word.into())
            };
            out.push((at, tok));
        } else {
            return Err(err(at, ParseErrorKind::UnexpectedChar(c)));
        }
    }
    Ok(out)
}

/// Untyped syntax tree, checked against constructor signatures afterwards.
enum Node {
    Call { name: String, args: Vec<(usize, Node)>, bare: bool },
    Int(i64),
    List(Vec<i64>),
    Str(String),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn next(&mut self, expected: &'static str) -> Result<(usize, Tok), ParseError> {
        let t = self.toks.get(self.pos).cloned().ok_or(err(self.end, ParseErrorKind::UnexpectedEnd(expected)))?;
        self.pos += 1;
        Ok(t)
    }

    fn node(&mut self) -> Result<(usize, Node), ParseError> {
        let (at, t) = self.next("an expression")?;
        let node = match t {
            Tok::Int(n) => Node::Int(n),
            Tok::Str(s) => Node::Str(s),
            Tok::LBracket => {
                let mut items = Vec::new();
                if self.peek() == Some(&Tok::RBracket) {
                    self.pos += 1;
                } else {
                    loop {
                        match self.next("an integer")? {
                            (_, Tok::Int(n)) => items.push(n),
                            (o, t) => {
                                return Err(err(o, ParseErrorKind::Unexpected { expected: "an integer", found: t.to_string() }))
                            }
                        }
                        match self.next("',' or ']'")? {
                            (_, Tok::Comma) => {}
                            (_, Tok::RBracket) => break,
                            (o, t) => {
                                return Err(err(o, ParseErrorKind::Unexpected { expected: "',' or ']'", found: t.to_string() }))
                            }
                        }
                    }
                }
                Node::List(items)
            }
            Tok::Word(name) => {
                if self.peek() != Some(&Tok::Open) {
                    return Ok((at, Node::Call { name, args: Vec::new(), bare: true }));
                }
                self.pos += 1;
                let mut args = Vec::new();
                if self.peek() == Some(&Tok::Close) {
                    self.pos += 1;
                } else {
                    loop {
                        args.push(self.node()?);
                        match self.next("',' or ')'")? {
                            (_, Tok::Comma) => {}
                            (_, Tok::Close) => break,
                            (o, t) => {
                                return Err(err(o, ParseErrorKind::Unexpected { expected: "',' or ')'", found: t.to_string() }))
                            }
                        }
                    }
                }
                Node::Call { name, args, bare: false }
            }
            t => return Err(err(at, ParseErrorKind::Unexpected { expected: "an expression", found: t.to_string() })),
        };
        Ok((at, node))
    }
}

fn int_arg(name: &'static str, index: usize, (at, node): &(usize, Node)) -> Result<i64, ParseError> {
    match node {
        Node::Int(n) => Ok(*n),
        _ => Err(err(*at, ParseErrorKind::BadArgument { name, index, expected: "an integer" })),
    }
}

fn arity(name: &'static str, expected: &'static str, ok: bool, found: usize, at: usize) -> Result<(), ParseError> {
    if ok {
        Ok(())
    } else {
        Err(err(at, ParseErrorKind::Arity { name, expected, found }))
    }
}

fn to_expr(at: usize, node: Node) -> Result<KnotExpr, ParseError> {
    let Node::Call { name, args, bare } = node else {
        return Err(err(at, ParseErrorKind::Unexpected { expected: "a knot expression", found: "a literal".into() }));
    };
    let n = args.len();
    let sub = |a: (usize, Node)| to_expr(a.0, a.1);
    match name.as_str() {
        "unknot" => {
            arity("unknot", "no arguments", n == 0, n, at)?;
            Ok(KnotExpr::Unknot)
        }
        _ if bare => Err(err(at, ParseErrorKind::UnknownConstructor(name))),
        "torus" => {
            arity("torus", "2 integers", n == 2, n, at)?;
            Ok(KnotExpr::Torus(int_arg("torus", 1, &args[0])?, int_arg("torus", 2, &args[1])?))
        }
        "staircase" => {
            arity("staircase", "1 list", n == 1, n, at)?;
            let (o, node) = &args[0];
            let Node::List(items) = node else {
                return Err(err(*o, ParseErrorKind::BadArgument { name: "staircase", index: 1, expected: "a list" }));
            };
            let steps = items
                .iter()
                .map(|&v| u32::try_from(v).ok().filter(|&v| v > 0))
                .collect::<Option<Vec<u32>>>()
                .ok_or(err(*o, ParseErrorKind::BadArgument { name: "staircase", index: 1, expected: "a list of positive steps" }))?;
            Ok(KnotExpr::Staircase(steps))
        }
        "cable" => {
            arity("cable", "an expression and 2 integers", n == 3, n, at)?;
            let mut it = args.into_iter();
            let inner = sub(it.next().unwrap())?;
            let rest: Vec<_> = it.collect();
            Ok(KnotExpr::Cable(Box::new(inner), int_arg("cable", 2, &rest[0])?, int_arg("cable", 3, &rest[1])?))
        }
        "mirror" => {
            arity("mirror", "1 expression", n == 1, n, at)?;
            Ok(KnotExpr::Mirror(Box::new(sub(args.into_iter().next().unwrap())?)))
        }
        "sum" => {
            arity("sum", "at least 1 expression", n >= 1, n, at)?;
            Ok(KnotExpr::Sum(args.into_iter().map(sub).collect::<Result<_, _>>()?))
        }
        "fromfile" => {
            arity("fromfile", "1 path", n == 1, n, at)?;
            match &args[0] {
                (_, Node::Str(s)) => Ok(KnotExpr::FromFile(s.clone())),
                (_, Node::Call { name, bare: true, .. }) => Ok(KnotExpr::FromFile(name.clone())),
                (o, _) => Err(err(*o, ParseErrorKind::BadArgument { name: "fromfile", index: 1, expected: "a path" })),
            }
        }
        _ => Err(err(at, ParseErrorKind::UnknownConstructor(name))),
    }
}

pub fn parse_knot_expr(text: &str) -> Result<KnotExpr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.len() };
    let (at, node) = p.node()?;
    if let Some((o, t)) = p.toks.get(p.pos) {
        return Err(err(*o, ParseErrorKind::Unexpected { expected: "end of input", found: t.to_string() }));
    }
    to_expr(at, node)
}

impl std::str::FromStr for KnotExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_knot_expr(s)
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => f.write_str("unknot"),
            KnotExpr::Torus(p, q) => write!(f, "torus({p},{q})"),
            KnotExpr::Staircase(s) => {
                let parts: Vec<String> = s.iter().map(u32::to_string).collect();
                write!(f, "staircase([{}])", parts.join(","))
            }
            KnotExpr::Cable(k, p, q) => write!(f, "cable({k},{p},{q})"),
            KnotExpr::Mirror(k) => write!(f, "mirror({k})"),
            KnotExpr::Sum(ks) => {
                let parts: Vec<String> = ks.iter().map(ToString::to_string).collect();
                write!(f, "sum({})", parts.join(", "))
            }
            KnotExpr::FromFile(path) => write!(f, "fromfile({path:?})"),
        }
    }
}

fn load(path: &str) -> Result<FreeUComplex, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    Ok(FreeUComplex::from_json_str(&text)?)
}

fn torus_staircase(p: i64, q: i64) -> Result<Staircase, CliError> {
    if p <= 0 || q <= 0 {
        return Err(CliError::Elaboration(format!("torus({p},{q}): use mirror(...) for negative torus knots")));
    }
    let (p, q) = (p.min(q), p.max(q));
    if p == 1 {
        return Ok(Staircase::unknot());
    }
    Ok(staircase_from_alexander(&torus_knot_alexander(p, q)?)?)
}

impl KnotExpr {
    /// The staircase of an expression that denotes an L-space knot.
    pub fn lspace_staircase(&self) -> Result<Staircase, CliError> {
        match self {
            KnotExpr::Unknot => Ok(Staircase::unknot()),
            KnotExpr::Torus(p, q) => torus_staircase(*p, *q),
            KnotExpr::Staircase(s) => Ok(Staircase::new(s.clone())?),
            KnotExpr::Cable(inner, p, q) => {
                let s = inner.lspace_staircase()?;
                let g = s.genus();
                if *q < 1 || *q < *p * (2 * g - 1) {
                    return Err(CliError::Elaboration(format!(
                        "cable({inner},{p},{q}) is not an L-space knot: needs q/p >= 2g-1 = {}",
                        2 * g - 1
                    )));
                }
                Ok(staircase_from_alexander(&cable_alexander(&s.alexander(), *p, *q)?)?)
            }
            KnotExpr::Mirror(inner) => match inner.lspace_staircase() {
                Ok(s) if s.steps.is_empty() => Ok(s),
                _ => Err(CliError::Elaboration(format!("{self} is not an L-space knot"))),
            },
            KnotExpr::Sum(parts) => {
                let nontrivial: Vec<Staircase> = parts
                    .iter()
                    .map(KnotExpr::lspace_staircase)
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| CliError::Elaboration(format!("{self} is not an L-space knot")))?
                    .into_iter()
                    .filter(|s| !s.steps.is_empty())
                    .collect();
                match &nontrivial[..] {
                    [] => Ok(Staircase::unknot()),
                    [s] => Ok(s.clone()),
                    _ => Err(CliError::Elaboration(format!("{self} is a sum of nontrivial L-space knots, hence not one"))),
                }
            }
            KnotExpr::FromFile(path) => {
                let c = load(path)?;
                let r = reduce(&c, &ReduceOptions::default())?;
                if !is_lspace_form(&r) {
                    return Err(CliError::Elaboration(format!("{path} does not hold an L-space knot complex")));
                }
                Ok(staircase_from_alexander(&alexander_from_complex(&c))?)
            }
        }
    }

    /// Complexes of the connected summands, in order.
    pub fn summands(&self) -> Result<Vec<FreeUComplex>, CliError> {
        Ok(match self {
            KnotExpr::Unknot => vec![FreeUComplex::unknot()],
            KnotExpr::Torus(..) | KnotExpr::Staircase(_) | KnotExpr::Cable(..) => {
                vec![staircase_complex(&self.lspace_staircase()?, false)]
            }
            KnotExpr::Mirror(inner) => {
                inner.summands()?.iter().map(mirror).collect::<Result<_, _>>()?
            }
            KnotExpr::Sum(parts) => {
                let mut out = Vec::new();
                for p in parts {
                    out.extend(p.summands()?);
                }
                out
            }
            KnotExpr::FromFile(path) => vec![load(path)?],
        })
    }
}
