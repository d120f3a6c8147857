//! Expression language for gadget compositions.
//!
//! ```text
//! expr := term { "(+)" term }
//! term := atom [ "^" int ]
//! atom := NAME [ "[" root "," root "]" ]
//!       | "g6" STRING "[" int "," int "]"
//!       | "(" expr ")" [ "[" root "," root "]" ]
//! root := a | b | c | int
//! ```
//!
//! `(+)` is the parallel sum, left-associative, and the left operand's roots
//! survive. `P4^k` is `P4 (+) ... (+) P4` with `k` copies. A bracket after a
//! parenthesised expression re-roots its value: `a` and `b` name its current
//! roots, integers name vertex ids.

use std::fmt;

use thiserror::Error;

use crate::gadgets::{GadgetError, GadgetName};

mod eval;
mod lexer;
mod parser;

pub use eval::{eval, Evaluation};
pub use parser::parse;

/// Byte range `start..end` in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn to(self, other: Span) -> Span {
        Span { start: self.start, end: other.end }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootRef {
    A,
    B,
    C,
    Id(usize),
}

impl fmt::Display for RootRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootRef::A => f.write_str("a"),
            RootRef::B => f.write_str("b"),
            RootRef::C => f.write_str("c"),
            RootRef::Id(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    Atom { name: GadgetName, roots: Option<(RootRef, RootRef)> },
    Graph6 { text: String, roots: (usize, usize) },
    Sum(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, usize),
    Group { inner: Box<Expr>, roots: Option<(RootRef, RootRef)> },
}

/// A node of a parsed expression. Equality ignores spans, so a reparsed
/// pretty-print compares equal to the original.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Expr) -> bool {
        use ExprKind::*;
        match (&self.kind, &other.kind) {
            (Atom { name: n1, roots: r1 }, Atom { name: n2, roots: r2 }) => n1 == n2 && r1 == r2,
            (Graph6 { text: t1, roots: r1 }, Graph6 { text: t2, roots: r2 }) => t1 == t2 && r1 == r2,
            (Sum(a1, b1), Sum(a2, b2)) => a1 == a2 && b1 == b2,
            (Pow(e1, k1), Pow(e2, k2)) => e1 == e2 && k1 == k2,
            (Group { inner: i1, roots: r1 }, Group { inner: i2, roots: r2 }) => i1 == i2 && r1 == r2,
            _ => false,
        }
    }
}

impl Eq for Expr {}

fn write_roots(f: &mut fmt::Formatter<'_>, roots: &Option<(RootRef, RootRef)>) -> fmt::Result {
    match roots {
        Some((x, y)) => write!(f, "[{x},{y}]"),
        None => Ok(()),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Atom { name, roots } => {
                write!(f, "{name}")?;
                write_roots(f, roots)
            }
            ExprKind::Graph6 { text, roots: (x, y) } => write!(f, "g6 \"{text}\"[{x},{y}]"),
            ExprKind::Sum(a, b) => write!(f, "{a} (+) {b}"),
            ExprKind::Pow(e, k) => write!(f, "{e}^{k}"),
            ExprKind::Group { inner, roots } => {
                write!(f, "({inner})")?;
                write_roots(f, roots)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unterminated string")]
    UnterminatedString,
    #[error("integer too large")]
    IntegerOverflow,
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: String, found: String },
    #[error("unknown atom {0}")]
    UnknownAtom(String),
    #[error("invalid root {0}; expected a, b, c or a vertex id")]
    BadRoot(String),
    #[error("only P4 can be raised to a power")]
    PowerBase,
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("bad graph6 literal: {0}")]
    Graph6(String),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
}

/// An error with its byte offset and 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct DslError {
    pub kind: DslErrorKind,
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl DslError {
    pub(crate) fn at(src: &str, offset: usize, kind: DslErrorKind) -> DslError {
        let offset = offset.min(src.len());
        let before = &src[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        DslError { kind, offset, line, column }
    }
}
