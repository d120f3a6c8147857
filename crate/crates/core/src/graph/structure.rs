use serde::Serialize;

use super::{bit, Bits, Graph, GraphError};

/// Vertices reachable from `start` inside `allowed` (which should contain
/// `start`).
pub fn reach_within(g: &Graph, start: usize, allowed: u64) -> u64 {
    let mut seen = bit(start) & allowed;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in Bits(frontier) {
            next |= g.rows()[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Connected components of the subgraph induced by `within`, as vertex
/// masks ordered by smallest vertex.
pub fn components(g: &Graph, within: u64) -> Vec<u64> {
    let mut left = within & g.vertex_mask();
    let mut out = Vec::new();
    while left != 0 {
        let v = left.trailing_zeros() as usize;
        let comp = reach_within(g, v, left);
        out.push(comp);
        left &= !comp;
    }
    out
}

pub fn is_connected(g: &Graph) -> Result<bool, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::Empty);
    }
    Ok(reach_within(g, 0, g.vertex_mask()) == g.vertex_mask())
}

/// Tarjan low-link search for a cut vertex.
fn has_articulation_point(g: &Graph) -> bool {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;

    fn visit(
        g: &Graph,
        v: usize,
        parent: Option<usize>,
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
    ) -> bool {
        disc[v] = *time;
        low[v] = *time;
        *time += 1;
        let mut children = 0;
        for w in Bits(g.rows()[v]) {
            if disc[w] == usize::MAX {
                children += 1;
                if visit(g, w, Some(v), disc, low, time) {
                    return true;
                }
                low[v] = low[v].min(low[w]);
                if parent.is_some() && low[w] >= disc[v] {
                    return true;
                }
            } else if Some(w) != parent {
                low[v] = low[v].min(disc[w]);
            }
        }
        parent.is_none() && children > 1
    }

    visit(g, 0, None, &mut disc, &mut low, &mut time)
}

/// Connected with no cut vertex. Defined for `n >= 3` only.
pub fn is_biconnected(g: &Graph) -> Result<bool, GraphError> {
    if g.order() < 3 {
        return Err(GraphError::TooSmallForBiconnectivity(g.order()));
    }
    Ok(is_connected(g)? && !has_articulation_point(g))
}

/// A proper 2-colouring (`true`/`false` per vertex), if one exists.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.order();
    let mut color = vec![None::<bool>; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        stack.push(s);
        while let Some(v) = stack.pop() {
            let c = color[v].unwrap();
            for w in Bits(g.rows()[v]) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(d) if d == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap()).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// A vertex cut of size 1 or 2 together with the components it leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutWitness {
    pub vertices: Vec<usize>,
    /// Components of `G - vertices`, each sorted, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
}

impl CutWitness {
    pub fn component_mask(&self, side: usize) -> Option<u64> {
        self.components
            .get(side)
            .map(|c| c.iter().fold(0u64, |m, &v| m | bit(v)))
    }

    /// Re-derives the partition from scratch and compares.
    pub fn validate(&self, g: &Graph) -> bool {
        let removed = self.vertices.iter().fold(0u64, |m, &v| m | bit(v));
        let fresh = components(g, g.vertex_mask() & !removed);
        let fresh: Vec<Vec<usize>> = fresh.into_iter().map(|c| Bits(c).collect()).collect();
        fresh.len() >= 2 && fresh == self.components
    }
}

/// The cut `{x, y}` (or `{x}` when `x == y`), if removing it disconnects the
/// graph.
pub fn vertex_cut(g: &Graph, x: usize, y: usize) -> Option<CutWitness> {
    let removed = bit(x) | bit(y);
    let comps = components(g, g.vertex_mask() & !removed);
    if comps.len() < 2 {
        return None;
    }
    let mut vertices = vec![x.min(y), x.max(y)];
    vertices.dedup();
    Some(CutWitness {
        vertices,
        components: comps.into_iter().map(|c| Bits(c).collect()).collect(),
    })
}

/// Every 2-vertex cut of a 2-connected graph, ordered lexicographically.
pub fn two_cuts(g: &Graph) -> Result<Vec<CutWitness>, GraphError> {
    if !is_biconnected(g)? {
        return Err(GraphError::NotBiconnected);
    }
    let n = g.order();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if let Some(c) = vertex_cut(g, x, y) {
                out.push(c);
            }
        }
    }
    Ok(out)
}
