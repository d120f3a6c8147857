//! Rooted graphs, the parallel sum, reversing at 2-cuts, and the gadget
//! catalogue.

mod catalogue;
mod reverse;

pub use catalogue::{gadget, Gadget, GadgetName, GadgetSidecar, GadgetSpec};
pub use reverse::{
    reversal_closure, reverse_at, reversing_equivalent, rooted_reversal_closure,
    rooted_reversing_equivalent, REVERSAL_CLOSURE_MAX_ORDER,
};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bit, canonical_labeling, Bits, Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("root {root} out of range for a graph on {n} vertices")]
    RootOutOfRange { root: usize, n: usize },
    #[error("unknown gadget {0:?}")]
    UnknownGadget(String),
    #[error("{gadget} has no root named {label:?}")]
    NoSuchRoot { gadget: String, label: String },
    #[error("{name} needs at least {min} vertices")]
    TooSmall { name: String, min: usize },
    #[error("gadget {name} fails validation: {reason}")]
    Invalid { name: String, reason: String },
    #[error("reversing-equivalence is only computed for graphs on at most {max} vertices (got {n})")]
    TooLargeForClosure { n: usize, max: usize },
}

/// A graph with an ordered pair of root vertices `(x, y)`.
///
/// `x == y` is allowed; it arises from the degenerate parallel sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootedGraph {
    #[serde(rename = "graph6", serialize_with = "as_graph6")]
    pub graph: Graph,
    pub roots: (usize, usize),
}

fn as_graph6<S: serde::Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_string())
}

impl RootedGraph {
    pub fn new(graph: Graph, x: usize, y: usize) -> Result<Self, GadgetError> {
        let n = graph.order();
        for root in [x, y] {
            if root >= n {
                return Err(GadgetError::RootOutOfRange { root, n });
            }
        }
        Ok(RootedGraph { graph, roots: (x, y) })
    }

    pub fn x(&self) -> usize {
        self.roots.0
    }

    pub fn y(&self) -> usize {
        self.roots.1
    }

    /// Same graph, other roots.
    pub fn rerooted(&self, x: usize, y: usize) -> Result<Self, GadgetError> {
        RootedGraph::new(self.graph.clone(), x, y)
    }

    /// Canonical form under isomorphisms mapping `{x, y}` onto itself; the
    /// roots of the result are `(0, 1)` (or `(0, 0)`).
    pub fn canonical(&self) -> RootedGraph {
        let n = self.graph.order();
        let colors: Vec<u32> =
            (0..n).map(|v| u32::from(v != self.x() && v != self.y())).collect();
        let l = canonical_labeling(&self.graph, Some(&colors));
        let (x, y) = (l.perm[self.x()], l.perm[self.y()]);
        RootedGraph { graph: l.graph, roots: (x.min(y), x.max(y)) }
    }
}

/// `(3n - 1) - 2e`.
pub fn gap(g: &Graph) -> i64 {
    3 * g.order() as i64 - 1 - 2 * g.size() as i64
}

/// The parallel sum `(A; x, y) ⊎ (B; a, b)`.
///
/// Vertex ids of `A` are kept; the non-root vertices of `B` follow in
/// increasing order. When `x == y` or `a == b` all four roots are merged
/// into one vertex (ids of `A` above a removed `y` shift down by one) and
/// the result is rooted at that vertex twice. Loops and doubled edges are
/// dropped.
pub fn parallel_sum(a: &RootedGraph, b: &RootedGraph) -> Result<RootedGraph, GadgetError> {
    let (x, y) = a.roots;
    let (ra, rb) = b.roots;
    let degenerate = x == y || ra == rb;

    // Map A's vertices; only the degenerate case removes one (y).
    let na = a.graph.order();
    let a_map: Vec<usize> = if degenerate && x != y {
        (0..na).map(|v| if v == y { usize::MAX } else if v > y { v - 1 } else { v }).collect()
    } else {
        (0..na).collect()
    };
    let x_new = a_map[x];
    let y_new = if degenerate { x_new } else { a_map[y] };
    let a_size = if degenerate && x != y { na - 1 } else { na };

    let nb = b.graph.order();
    let mut b_map = vec![0usize; nb];
    let mut next = a_size;
    for v in 0..nb {
        b_map[v] = if v == ra {
            x_new
        } else if v == rb {
            y_new
        } else {
            next += 1;
            next - 1
        };
    }
    if next > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(next).into());
    }

    let mut g = Graph::empty(next)?;
    let mut add = |u: usize, v: usize| {
        if u != v {
            g.add_edge(u, v);
        }
    };
    for (u, v) in a.graph.edges() {
        let (u, v) = (a_map[u], a_map[v]);
        // y merges into x in the degenerate case
        let u = if u == usize::MAX { x_new } else { u };
        let v = if v == usize::MAX { x_new } else { v };
        add(u, v);
    }
    for (u, v) in b.graph.edges() {
        add(b_map[u], b_map[v]);
    }
    Ok(RootedGraph { graph: g, roots: (x_new, y_new) })
}

/// Vertex mask of every edge lying on some `(x, y)`-path, as adjacency
/// rows, plus whether all edges are covered.
pub fn edges_on_root_paths(g: &Graph, x: usize, y: usize) -> Vec<u64> {
    let n = g.order();
    let mut covered = vec![0u64; n];
    fn go(g: &Graph, y: usize, path: &mut Vec<usize>, used: u64, covered: &mut [u64]) {
        let last = *path.last().unwrap();
        for w in Bits(g.rows()[last] & !used) {
            path.push(w);
            if w == y {
                for e in path.windows(2) {
                    covered[e[0]] |= bit(e[1]);
                    covered[e[1]] |= bit(e[0]);
                }
            } else {
                let free = (g.vertex_mask() & !used) | bit(w);
                if crate::graph::reach_within(g, w, free) & bit(y) != 0 {
                    go(g, y, path, used | bit(w), covered);
                }
            }
            path.pop();
        }
    }
    if x != y {
        go(g, y, &mut vec![x], bit(x), &mut covered);
    }
    covered
}

/// Whether every edge lies on some `(x, y)`-path.
pub fn every_edge_on_root_path(g: &Graph, x: usize, y: usize) -> bool {
    edges_on_root_paths(g, x, y) == g.rows()
}
