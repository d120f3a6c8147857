//! Exact planarity test.
//!
//! Each block is tested separately with the Demoucron–Malgrange–Pertuiset
//! path-embedding procedure: embed a cycle, then repeatedly embed a path of
//! the fragment with the fewest admissible faces. A fragment with no
//! admissible face certifies non-planarity.

use super::structure::reach_within;
use super::{bit, Bits, Graph};

/// Vertex sets of the blocks (maximal 2-connected subgraphs or bridges).
fn blocks(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn visit(
        g: &Graph,
        v: usize,
        parent: Option<usize>,
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        stack: &mut Vec<(usize, usize)>,
        out: &mut Vec<u64>,
    ) {
        disc[v] = *time;
        low[v] = *time;
        *time += 1;
        for w in Bits(g.rows()[v]) {
            if disc[w] == usize::MAX {
                stack.push((v, w));
                visit(g, w, Some(v), disc, low, time, stack, out);
                low[v] = low[v].min(low[w]);
                if low[w] >= disc[v] {
                    let mut mask = 0u64;
                    while let Some((a, b)) = stack.pop() {
                        mask |= bit(a) | bit(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    out.push(mask);
                }
            } else if Some(w) != parent && disc[w] < disc[v] {
                stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        }
    }

    for s in 0..n {
        if disc[s] == usize::MAX {
            visit(g, s, None, &mut disc, &mut low, &mut time, &mut stack, &mut out);
        }
    }
    out
}

fn face_mask(face: &[usize]) -> u64 {
    face.iter().fold(0, |m, &v| m | bit(v))
}

/// A cycle through the edge `(u, v)` in a 2-connected graph.
fn initial_cycle(g: &Graph) -> Vec<usize> {
    let (u, v) = g.edges()[0];
    // BFS from v to u without using the edge (v, u).
    let n = g.order();
    let mut prev = vec![usize::MAX; n];
    prev[v] = v;
    let mut queue = std::collections::VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for y in Bits(g.rows()[x]) {
            if prev[y] != usize::MAX || (x == v && y == u) {
                continue;
            }
            prev[y] = x;
            if y == u {
                queue.clear();
                break;
            }
            queue.push_back(y);
        }
    }
    let mut cycle = vec![u];
    let mut x = u;
    while x != v {
        x = prev[x];
        cycle.push(x);
    }
    cycle
}

struct Fragment {
    attachments: u64,
    /// Non-embedded vertices of the fragment (empty for a single chord).
    inner: u64,
    chord: Option<(usize, usize)>,
}

fn block_is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 {
        return true;
    }
    if g.size() > 3 * n - 6 {
        return false;
    }
    let cycle = initial_cycle(g);
    let mut embedded_v = face_mask(&cycle);
    let mut embedded_adj = vec![0u64; n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded_adj[a] |= bit(b);
        embedded_adj[b] |= bit(a);
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    loop {
        let mut fragments = Vec::new();
        for u in Bits(embedded_v) {
            for v in Bits(g.rows()[u] & embedded_v & !embedded_adj[u]) {
                if u < v {
                    fragments.push(Fragment {
                        attachments: bit(u) | bit(v),
                        inner: 0,
                        chord: Some((u, v)),
                    });
                }
            }
        }
        let mut rest = g.vertex_mask() & !embedded_v;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            let comp = reach_within(g, s, rest);
            rest &= !comp;
            let attachments = Bits(comp).fold(0u64, |m, v| m | g.rows()[v]) & embedded_v;
            fragments.push(Fragment { attachments, inner: comp, chord: None });
        }
        if fragments.is_empty() {
            return true;
        }

        let masks: Vec<u64> = faces.iter().map(|f| face_mask(f)).collect();
        let mut choice: Option<(usize, usize, usize)> = None; // (fragment, face, #admissible)
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| masks[f] & frag.attachments == frag.attachments)
                .collect();
            if admissible.is_empty() {
                return false;
            }
            if choice.is_none_or(|(_, _, k)| admissible.len() < k) {
                choice = Some((i, admissible[0], admissible.len()));
            }
        }
        let (fi, face_idx, _) = choice.unwrap();
        let frag = &fragments[fi];

        // A path through the fragment between two distinct attachments.
        let path: Vec<usize> = match frag.chord {
            Some((u, v)) => vec![u, v],
            None => {
                let a1 = frag.attachments.trailing_zeros() as usize;
                let start = (g.rows()[a1] & frag.inner).trailing_zeros() as usize;
                let mut prev = vec![usize::MAX; n];
                prev[start] = start;
                let mut queue = std::collections::VecDeque::from([start]);
                let mut end = None;
                while let Some(x) = queue.pop_front() {
                    let others = g.rows()[x] & frag.attachments & !bit(a1);
                    if others != 0 {
                        end = Some((x, others.trailing_zeros() as usize));
                        break;
                    }
                    for y in Bits(g.rows()[x] & frag.inner) {
                        if prev[y] == usize::MAX {
                            prev[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                let (last, a2) = end.expect("fragment of a 2-connected block has two attachments");
                let mut inner = vec![last];
                let mut x = last;
                while x != start {
                    x = prev[x];
                    inner.push(x);
                }
                inner.reverse();
                let mut p = vec![a1];
                p.extend(inner);
                p.push(a2);
                p
            }
        };

        for w in path.windows(2) {
            embedded_adj[w[0]] |= bit(w[1]);
            embedded_adj[w[1]] |= bit(w[0]);
        }
        embedded_v |= face_mask(&path);

        let face = faces.swap_remove(face_idx);
        let (a1, a2) = (path[0], *path.last().unwrap());
        let i = face.iter().position(|&v| v == a1).unwrap();
        let j = face.iter().position(|&v| v == a2).unwrap();
        let len = face.len();
        let interior = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut k = i;
        loop {
            f1.push(face[k]);
            if k == j {
                break;
            }
            k = (k + 1) % len;
        }
        f1.extend(interior.iter().rev());
        let mut f2 = Vec::new();
        let mut k = j;
        loop {
            f2.push(face[k]);
            if k == i {
                break;
            }
            k = (k + 1) % len;
        }
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
    }
}

/// Exact planarity decision.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return false;
    }
    blocks(g).into_iter().all(|mask| {
        if mask.count_ones() < 5 {
            return true;
        }
        let (block, _) = g.induced(mask);
        block_is_planar(&block)
    })
}
