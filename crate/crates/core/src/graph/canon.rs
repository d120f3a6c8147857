//! Canonical labelling by equitable partition refinement and an
//! individualisation search tree, pruned with the automorphisms found at
//! equal leaves.
//!
//! The search visits every leaf that is not provably the image of an
//! already-visited leaf under a known automorphism, so the result is exact
//! for every supported order. Refinement keeps the hot path (n <= 10) cheap.

use super::{bit, Bits, Graph};

/// A canonical relabelling: `perm[v]` is the new label of old vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    pub perm: Vec<usize>,
    pub graph: Graph,
}

/// Splits cells by neighbour counts until the partition is equitable.
/// Sub-cells are ordered by increasing count, which keeps the procedure
/// independent of vertex names.
fn refine(g: &Graph, mut cells: Vec<u64>) -> Vec<u64> {
    let rows = g.rows();
    let mut counts: Vec<(u32, usize)> = Vec::with_capacity(64);
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            let mut split_any = false;
            let mut next = Vec::with_capacity(cells.len() + 4);
            for &cell in &cells {
                if cell & (cell - 1) == 0 {
                    next.push(cell);
                    continue;
                }
                counts.clear();
                counts.extend(Bits(cell).map(|v| ((rows[v] & splitter).count_ones(), v)));
                let first = counts[0].0;
                if counts.iter().all(|&(c, _)| c == first) {
                    next.push(cell);
                    continue;
                }
                split_any = true;
                counts.sort_unstable();
                let mut i = 0;
                while i < counts.len() {
                    let c = counts[i].0;
                    let mut part = 0u64;
                    while i < counts.len() && counts[i].0 == c {
                        part |= bit(counts[i].1);
                        i += 1;
                    }
                    next.push(part);
                }
            }
            if split_any {
                cells = next;
                continue 'restart;
            }
        }
        return cells;
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.order();
        let mut perm = vec![0usize; n];
        for (i, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = i;
        }
        let mut cert = vec![0u64; n];
        for v in 0..n {
            cert[perm[v]] = Bits(self.g.rows()[v]).fold(0u64, |m, w| m | bit(perm[w]));
        }
        match &self.best {
            None => self.best = Some((cert, perm)),
            Some((best_cert, best_perm)) => match cert.cmp(best_cert) {
                std::cmp::Ordering::Greater => self.best = Some((cert, perm)),
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => {
                    let mut inverse = vec![0usize; n];
                    for (v, &p) in best_perm.iter().enumerate() {
                        inverse[p] = v;
                    }
                    let gamma: Vec<usize> = perm.iter().map(|&p| inverse[p]).collect();
                    if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(gamma);
                    }
                }
            },
        }
    }

    fn descend(&mut self, cells: Vec<u64>, fixed: &mut Vec<usize>) {
        let cells = refine(self.g, cells);
        let Some(t) = cells.iter().position(|&c| c & (c - 1) != 0) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[t];
        // Orbits of the known automorphisms fixing `fixed` pointwise,
        // extended incrementally as new automorphisms turn up.
        let mut orbits: Vec<usize> = (0..self.g.order()).collect();
        let mut seen_autos = 0;
        let mut tried: Vec<usize> = Vec::new();
        for v in Bits(target) {
            if !tried.is_empty() {
                for gamma in &self.automorphisms[seen_autos..] {
                    if fixed.iter().all(|&f| gamma[f] == f) {
                        for (u, &w) in gamma.iter().enumerate() {
                            let (a, b) = (find(&mut orbits, u), find(&mut orbits, w));
                            if a != b {
                                orbits[a.max(b)] = a.min(b);
                            }
                        }
                    }
                }
                seen_autos = self.automorphisms.len();
                let rv = find(&mut orbits, v);
                if tried.iter().any(|&u| find(&mut orbits, u) == rv) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[t + 1..]);
            fixed.push(v);
            self.descend(child, fixed);
            fixed.pop();
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Canonical labelling respecting a vertex colouring: vertices of smaller
/// colour receive smaller labels, and two coloured graphs get identical
/// results iff they are isomorphic by a colour-preserving map (given equal
/// colour-class sizes).
pub fn canonical_labeling(g: &Graph, colors: Option<&[u32]>) -> Labeling {
    let n = g.order();
    if n == 0 {
        return Labeling { perm: Vec::new(), graph: g.clone() };
    }
    let cells = match colors {
        None => vec![g.vertex_mask()],
        Some(c) => {
            assert_eq!(c.len(), n, "one colour per vertex");
            let mut values: Vec<u32> = c.to_vec();
            values.sort_unstable();
            values.dedup();
            values
                .iter()
                .map(|&val| (0..n).filter(|&v| c[v] == val).fold(0u64, |m, v| m | bit(v)))
                .collect()
        }
    };
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    search.descend(cells, &mut Vec::new());
    let (cert, perm) = search.best.expect("at least one leaf");
    Labeling { perm, graph: Graph::from_rows_unchecked(cert) }
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g, None).graph
}

/// Canonical representative under colour-preserving isomorphism.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> Graph {
    canonical_labeling(g, Some(colors)).graph
}
