use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{bit, Bits, Graph};

use super::PathWitness;

/// A maximum family of vertex-disjoint `(X, Y)`-paths and a separating set
/// of the same size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointPaths {
    pub count: usize,
    /// Each path starts in `X`, ends in `Y`, and has no interior vertex in
    /// `X ∪ Y`. A vertex of `X ∩ Y` forms a one-vertex path.
    pub paths: Vec<PathWitness>,
    /// Every `(X, Y)`-path meets this set.
    pub separator: Vec<usize>,
}

/// Unit vertex capacities via the split network `v_in -> v_out`; all other
/// arcs are effectively unbounded so every minimum cut is a vertex set.
///
/// For two distinct single vertices `X = {u}`, `Y = {v}` the paths are only
/// required to be internally disjoint (local connectivity). The edge `uv`,
/// if present, then counts as one path and the separator is taken in
/// `G - uv`.
pub fn max_disjoint_paths(g: &Graph, x: u64, y: u64) -> DisjointPaths {
    let n = g.order();
    let x = x & g.vertex_mask();
    let y = y & g.vertex_mask();
    assert!(x != 0 && y != 0, "both vertex sets must be nonempty");
    let big = n as i32 + 1;
    let nodes = 2 * n + 2;
    let (source, sink) = (2 * n, 2 * n + 1);
    let vin = |v: usize| 2 * v;
    let vout = |v: usize| 2 * v + 1;
    let mut cap = vec![vec![0i32; nodes]; nodes];
    for v in 0..n {
        cap[vin(v)][vout(v)] = 1;
        for w in Bits(g.rows()[v]) {
            cap[vout(v)][vin(w)] = big;
        }
    }
    let local = x.count_ones() == 1 && y.count_ones() == 1 && x != y;
    if local {
        let (u, v) = (x.trailing_zeros() as usize, y.trailing_zeros() as usize);
        cap[vin(u)][vout(u)] = big;
        cap[vin(v)][vout(v)] = big;
        if g.has_edge(u, v) {
            cap[vout(u)][vin(v)] = 1;
            cap[vout(v)][vin(u)] = 0;
        }
    }
    for v in Bits(x) {
        cap[source][vin(v)] = big;
    }
    for v in Bits(y) {
        cap[vout(v)][sink] = big;
    }
    let mut flow = vec![vec![0i32; nodes]; nodes];
    let residual = |flow: &Vec<Vec<i32>>, a: usize, b: usize| cap[a][b] - flow[a][b];

    let bfs = |flow: &Vec<Vec<i32>>| -> Vec<usize> {
        let mut prev = vec![usize::MAX; nodes];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            for b in 0..nodes {
                if prev[b] == usize::MAX && residual(flow, a, b) > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        prev
    };

    let mut count = 0;
    loop {
        let prev = bfs(&flow);
        if prev[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            flow[a][b] += 1;
            flow[b][a] -= 1;
            b = a;
        }
        count += 1;
    }

    let reached = bfs(&flow);
    let separator: Vec<usize> = (0..n)
        .filter(|&v| reached[vin(v)] != usize::MAX && reached[vout(v)] == usize::MAX)
        .collect();

    let mut paths = Vec::with_capacity(count);
    for _ in 0..count {
        let mut seq = Vec::new();
        let mut a = source;
        while a != sink {
            let b = (0..nodes).find(|&b| flow[a][b] > 0).expect("flow is conserved");
            flow[a][b] -= 1;
            flow[b][a] += 1;
            if b < 2 * n && b % 2 == 0 {
                seq.push(b / 2);
            }
            a = b;
        }
        // Trim to the last X vertex and the first Y vertex after it.
        let i = seq.iter().rposition(|&v| x & bit(v) != 0).unwrap();
        let j = i + seq[i..].iter().position(|&v| y & bit(v) != 0).unwrap();
        paths.push(PathWitness::new(seq[i..=j].to_vec()));
    }
    paths.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    DisjointPaths { count, paths, separator }
}
