use crate::constructor::TraceEntry;
use crate::gadgets::{gadget, parallel_sum, GadgetError, GadgetName, RootedGraph};
use crate::graph::from_graph6;

use super::{DslError, DslErrorKind, Expr, ExprKind, RootRef};

/// Value of an expression plus the gap after every sum, preceded by a
/// `start` entry for the leftmost atom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub rooted: RootedGraph,
    pub trace: Vec<TraceEntry>,
}

/// Evaluates left to right. Sums keep the left operand's vertex ids and
/// roots. `X (+) P4^k` is recorded as `k` separate sums with `P4`; the
/// resulting graph is the same as summing with the value of `P4^k`.
///
/// `src` is the text `e` was parsed from and is only used for error
/// positions.
pub fn eval(e: &Expr, src: &str) -> Result<Evaluation, DslError> {
    let mut trace = Vec::new();
    let rooted = Evaluator { src }.value(e, &mut trace)?;
    Ok(Evaluation { rooted, trace })
}

struct Evaluator<'a> {
    src: &'a str,
}

impl Evaluator<'_> {
    fn err(&self, e: &Expr, kind: DslErrorKind) -> DslError {
        DslError::at(self.src, e.span.start, kind)
    }

    fn gadget_err(&self, e: &Expr, g: GadgetError) -> DslError {
        self.err(e, DslErrorKind::Gadget(g))
    }

    fn leaf(&self, r: RootedGraph, trace: &mut Vec<TraceEntry>) -> RootedGraph {
        if trace.is_empty() {
            trace.push(TraceEntry::new("start", None, None, &r.graph));
        }
        r
    }

    fn sum(
        &self,
        e: &Expr,
        left: &RootedGraph,
        right: &RootedGraph,
        label: String,
        trace: &mut Vec<TraceEntry>,
    ) -> Result<RootedGraph, DslError> {
        let s = parallel_sum(left, right).map_err(|g| self.gadget_err(e, g))?;
        trace.push(TraceEntry::new("sum", Some(label), Some(left.roots), &s.graph));
        Ok(s)
    }

    fn value(&self, e: &Expr, trace: &mut Vec<TraceEntry>) -> Result<RootedGraph, DslError> {
        match &e.kind {
            ExprKind::Atom { name, roots } => {
                let g = gadget(*name).map_err(|g| self.gadget_err(e, g))?;
                let resolve = |r: RootRef| -> Result<usize, GadgetError> {
                    match r {
                        RootRef::A => g.root("a"),
                        RootRef::B => g.root("b"),
                        RootRef::C => g.root("c"),
                        RootRef::Id(i) => Ok(i),
                    }
                };
                let (x, y) = roots.unwrap_or((RootRef::A, RootRef::B));
                let r = resolve(x)
                    .and_then(|x| Ok((x, resolve(y)?)))
                    .and_then(|(x, y)| g.rooted.rerooted(x, y))
                    .map_err(|g| self.gadget_err(e, g))?;
                Ok(self.leaf(r, trace))
            }
            ExprKind::Graph6 { text, roots: (x, y) } => {
                let graph = from_graph6(text).map_err(|f| {
                    // offset of the literal's first byte is span.start + `g6 "`
                    let quote = self.src[e.span.start..].find('"').map_or(0, |q| q + 1);
                    DslError::at(
                        self.src,
                        e.span.start + quote + f.offset,
                        DslErrorKind::Graph6(f.kind.to_string()),
                    )
                })?;
                let r = RootedGraph::new(graph, *x, *y).map_err(|g| self.gadget_err(e, g))?;
                Ok(self.leaf(r, trace))
            }
            ExprKind::Sum(a, b) => {
                let left = self.value(a, trace)?;
                if let ExprKind::Pow(base, k) = &b.kind {
                    let p = self.value(base, &mut Vec::new())?;
                    let mut acc = left;
                    for _ in 0..*k {
                        acc = self.sum(e, &acc, &p, GadgetName::Path(4).to_string(), trace)?;
                    }
                    return Ok(acc);
                }
                let right = self.value(b, trace)?;
                self.sum(e, &left, &right, b.to_string(), trace)
            }
            ExprKind::Pow(base, k) => {
                let p = self.value(base, trace)?;
                let mut acc = p.clone();
                for _ in 1..*k {
                    acc = self.sum(e, &acc, &p, base.to_string(), trace)?;
                }
                Ok(acc)
            }
            ExprKind::Group { inner, roots } => {
                let v = self.value(inner, trace)?;
                let Some((x, y)) = roots else {
                    return Ok(v);
                };
                let resolve = |r: &RootRef| match r {
                    RootRef::A => v.x(),
                    RootRef::B => v.y(),
                    RootRef::Id(i) => *i,
                    RootRef::C => unreachable!("rejected by the parser"),
                };
                v.rerooted(resolve(x), resolve(y)).map_err(|g| self.gadget_err(e, g))
            }
        }
    }
}
