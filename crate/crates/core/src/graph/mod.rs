//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitset per vertex.

mod canon;
mod format;
mod planar;
mod structure;

pub use canon::{canonical_form, canonical_labeling, canonical_form_colored, Labeling};
pub use format::{from_graph6, from_sparse6, parse_graph, to_graph6, FormatError};
pub use planar::is_planar;
pub use structure::{
    bipartition, components, reach_within, is_biconnected, is_bipartite, is_connected, two_cuts, vertex_cut,
    CutWitness,
};

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count; one adjacency row fits a `u64`.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("operation requires a nonempty graph")]
    Empty,
    #[error("2-connectivity is only defined here for graphs with at least 3 vertices (got {0})")]
    TooSmallForBiconnectivity(usize),
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("{{{0}, {1}}} is not a vertex cut")]
    NotACut(usize, usize),
    #[error("cut {{{x}, {y}}} has no component {side}")]
    NoSuchSide { x: usize, y: usize, side: usize },
}

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Rows are kept symmetric, loop-free and clear above bit `n`; every
/// constructor enforces this, so the fields are private.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, symmetrising and dropping stray bits.
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        let g = Graph { n, adj };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path fits")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("cycle fits")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("complete graph fits");
        for u in 0..n {
            g.adj[u] = low_mask(n) & !bit(u);
        }
        g
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let mut g = Graph::empty(p + q).expect("complete bipartite graph fits");
        for u in 0..p {
            for v in p..p + q {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on out-of-range vertices or loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "invalid edge ({u}, {v})");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "invalid edge ({u}, {v})");
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Copy of `self` with one extra vertex adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Result<Self, GraphError> {
        if self.n >= MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        let new = self.n;
        let neighbors = neighbors & self.vertex_mask();
        let mut adj = self.adj.clone();
        for v in Bits(neighbors) {
            adj[v] |= bit(new);
        }
        adj.push(neighbors);
        Ok(Graph { n: new + 1, adj })
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Induced subgraph on `keep`, relabelled to `0..|keep|` in increasing
    /// order. Returns the graph and the old id of each new vertex.
    pub fn induced(&self, keep: u64) -> (Graph, Vec<usize>) {
        let keep = keep & self.vertex_mask();
        let old: Vec<usize> = Bits(keep).collect();
        let mut new_id = [usize::MAX; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| Bits(self.adj[v] & keep).fold(0u64, |acc, w| acc | bit(new_id[w])))
            .collect();
        (Graph { n: old.len(), adj }, old)
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = Bits(self.adj[v]).fold(0u64, |acc, w| acc | bit(perm[w]));
        }
        Graph { n: self.n, adj }
    }

    /// Checks the representation invariants.
    pub fn is_well_formed(&self) -> bool {
        if self.n > MAX_VERTICES || self.adj.len() != self.n {
            return false;
        }
        let mask = self.vertex_mask();
        (0..self.n).all(|u| {
            let row = self.adj[u];
            row & !mask == 0
                && row & bit(u) == 0
                && Bits(row).all(|v| self.adj[v] & bit(u) != 0)
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_are_well_formed() {
        for g in [
            Graph::path(5),
            Graph::cycle(7),
            Graph::complete(6),
            Graph::complete_bipartite(2, 3),
            Graph::empty(64).unwrap(),
            Graph::complete(64),
        ] {
            assert!(g.is_well_formed(), "{g:?}");
        }
        assert_eq!(Graph::complete(64).size(), 64 * 63 / 2);
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::empty(3).unwrap();
        assert_eq!(g.try_add_edge(1, 1), Err(GraphError::Loop(1)));
        assert_eq!(
            g.try_add_edge(0, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn induced_and_permuted() {
        let c5 = Graph::cycle(5);
        let (p, old) = c5.induced(0b01111);
        assert_eq!(old, vec![0, 1, 2, 3]);
        assert_eq!(p.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let q = c5.permuted(&[4, 3, 2, 1, 0]);
        assert_eq!(q.size(), 5);
        assert!(q.has_edge(4, 0));
    }

    #[test]
    fn with_vertex_appends() {
        let g = Graph::path(3).with_vertex(0b101).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }
}
