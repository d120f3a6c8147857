use std::collections::{BTreeSet, VecDeque};

use crate::graph::{bit, canonical_form, components, Bits, CutWitness, Graph, GraphError};

use super::{GadgetError, RootedGraph};

/// Closures are explored breadth-first over canonical forms; beyond this
/// order the state space is not bounded in practice.
pub const REVERSAL_CLOSURE_MAX_ORDER: usize = 16;

/// Re-glues the component `side` of `G - {x, y}` with `x` and `y` swapped.
/// Vertex ids are kept: a vertex of that component adjacent to `x` becomes
/// adjacent to `y` and vice versa.
pub fn reverse_at(g: &Graph, cut: &CutWitness, side: usize) -> Result<Graph, GraphError> {
    let &[x, y] = cut.vertices.as_slice() else {
        let v = cut.vertices.first().copied().unwrap_or(0);
        return Err(GraphError::NotACut(v, v));
    };
    if x >= g.order() || y >= g.order() || !cut.validate(g) {
        return Err(GraphError::NotACut(x, y));
    }
    let s = cut.component_mask(side).ok_or(GraphError::NoSuchSide { x, y, side })?;
    Ok(flip(g, x, y, s))
}

fn flip(g: &Graph, x: usize, y: usize, s: u64) -> Graph {
    let mut h = g.clone();
    for v in Bits(s) {
        let (to_x, to_y) = (g.has_edge(v, x), g.has_edge(v, y));
        if to_x != to_y {
            if to_x {
                h.remove_edge(v, x);
                h.add_edge(v, y);
            } else {
                h.remove_edge(v, y);
                h.add_edge(v, x);
            }
        }
    }
    h
}

/// Every single reversal of `g`: all 2-vertex cuts, all sides.
fn single_reversals(g: &Graph, avoid: u64) -> Vec<Graph> {
    let n = g.order();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let rest = g.vertex_mask() & !bit(x) & !bit(y);
            let comps = components(g, rest);
            if comps.len() < 2 {
                continue;
            }
            for s in comps {
                if s & avoid == 0 {
                    out.push(flip(g, x, y, s));
                }
            }
        }
    }
    out
}

fn check_order(n: usize) -> Result<(), GadgetError> {
    if n > REVERSAL_CLOSURE_MAX_ORDER {
        return Err(GadgetError::TooLargeForClosure { n, max: REVERSAL_CLOSURE_MAX_ORDER });
    }
    Ok(())
}

/// Canonical forms of every graph reachable from `g` by reversals.
pub fn reversal_closure(g: &Graph) -> Result<BTreeSet<Graph>, GadgetError> {
    check_order(g.order())?;
    let start = canonical_form(g);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(h) = queue.pop_front() {
        for r in single_reversals(&h, 0) {
            let c = canonical_form(&r);
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    Ok(seen)
}

pub fn reversing_equivalent(g: &Graph, h: &Graph) -> Result<bool, GadgetError> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    Ok(reversal_closure(g)?.contains(&canonical_form(h)))
}

/// Reversals of a rooted graph `(H; x, y)`: moves are taken in `H + xy`
/// and flip only components containing neither root, so the roots keep
/// their identity; the auxiliary edge is dropped again afterwards.
fn rooted_reversals(r: &RootedGraph) -> Vec<RootedGraph> {
    let (x, y) = r.roots;
    let had_edge = x == y || r.graph.has_edge(x, y);
    let mut h = r.graph.clone();
    if !had_edge {
        h.add_edge(x, y);
    }
    single_reversals(&h, bit(x) | bit(y))
        .into_iter()
        .map(|mut g| {
            if !had_edge {
                g.remove_edge(x, y);
            }
            RootedGraph { graph: g, roots: r.roots }
        })
        .collect()
}

/// Rooted canonical forms of everything reachable from `r` by rooted
/// reversals.
pub fn rooted_reversal_closure(r: &RootedGraph) -> Result<BTreeSet<(Graph, (usize, usize))>, GadgetError> {
    check_order(r.graph.order())?;
    let key = |r: &RootedGraph| {
        let c = r.canonical();
        (c.graph, c.roots)
    };
    let start = r.canonical();
    let mut seen = BTreeSet::from([key(&start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(h) = queue.pop_front() {
        for next in rooted_reversals(&h) {
            let c = next.canonical();
            if seen.insert((c.graph.clone(), c.roots)) {
                queue.push_back(c);
            }
        }
    }
    Ok(seen)
}

pub fn rooted_reversing_equivalent(a: &RootedGraph, b: &RootedGraph) -> Result<bool, GadgetError> {
    if a.graph.order() != b.graph.order() || a.graph.size() != b.graph.size() {
        return Ok(false);
    }
    let c = b.canonical();
    Ok(rooted_reversal_closure(a)?.contains(&(c.graph, c.roots)))
}
