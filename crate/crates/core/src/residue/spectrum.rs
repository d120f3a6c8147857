use std::ops::ControlFlow;

use crate::graph::{bit, Bits, Graph};

use super::{CycleWitness, PathWitness, ResidueSet};

/// What to do after visiting a path.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    Extend,
    Prune,
    Stop,
}

/// Depth-first walk over the simple paths that start at `start` and stay
/// inside `allowed`. `visit` sees every path with at least two vertices
/// together with its vertex mask. Returns `false` if stopped early.
fn walk_paths(
    g: &Graph,
    start: usize,
    allowed: u64,
    visit: &mut impl FnMut(&[usize], u64) -> Step,
) -> bool {
    fn go(
        g: &Graph,
        allowed: u64,
        path: &mut Vec<usize>,
        used: u64,
        visit: &mut impl FnMut(&[usize], u64) -> Step,
    ) -> bool {
        let last = *path.last().unwrap();
        for w in Bits(g.rows()[last] & allowed & !used) {
            path.push(w);
            let used = used | bit(w);
            let cont = match visit(path, used) {
                Step::Stop => false,
                Step::Prune => true,
                Step::Extend => go(g, allowed, path, used, visit),
            };
            path.pop();
            if !cont {
                return false;
            }
        }
        true
    }
    let mut path = vec![start];
    go(g, allowed, &mut path, bit(start), visit)
}

/// Residues of all cycle lengths, with one witness per residue.
#[derive(Debug, Clone)]
pub struct CycleSpectrum {
    pub residues: ResidueSet,
    /// `witnesses[r]` is a cycle of length `r (mod k)` when `r` occurs.
    pub witnesses: Vec<Option<CycleWitness>>,
}

/// Calls `f` once per cycle of `g` (as an open vertex sequence starting at
/// its smallest vertex) until it breaks.
pub fn for_each_cycle(g: &Graph, mut f: impl FnMut(&[usize]) -> ControlFlow<()>) {
    let n = g.order();
    for s in 0..n {
        let allowed = g.vertex_mask() & !crate::graph::low_mask(s);
        let completed = walk_paths(g, s, allowed, &mut |path, used| {
            let last = *path.last().unwrap();
            if path.len() >= 3 && g.has_edge(last, s) && path[1] < last && f(path).is_break() {
                return Step::Stop;
            }
            // Can the path still return to `s`?
            let free = allowed & !used;
            if g.rows()[s] & free == 0 {
                return Step::Prune;
            }
            let reach = crate::graph::reach_within(g, last, free | bit(last));
            if reach & g.rows()[s] & free == 0 {
                Step::Prune
            } else {
                Step::Extend
            }
        });
        if !completed {
            return;
        }
    }
}

fn cycle_search(g: &Graph, k: usize, wanted: ResidueSet) -> CycleSpectrum {
    let mut residues = ResidueSet::empty(k);
    let mut witnesses = vec![None; k];
    for_each_cycle(g, |open| {
        let r = open.len() % k;
        if !residues.contains(r) {
            residues.insert(r);
            witnesses[r] = Some(CycleWitness::from_open(open));
        }
        if wanted.is_subset(&residues) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    CycleSpectrum { residues, witnesses }
}

/// Exact residues (mod `k`) of the cycle lengths of `g`, with witnesses.
pub fn cycle_spectrum(g: &Graph, k: usize) -> CycleSpectrum {
    cycle_search(g, k, ResidueSet::full(k))
}

pub fn cycle_residues(g: &Graph, k: usize) -> ResidueSet {
    cycle_spectrum(g, k).residues
}

/// A cycle of length congruent to `residue` modulo `k`, if any.
pub fn has_mod_cycle(g: &Graph, residue: usize, k: usize) -> Option<CycleWitness> {
    let wanted = ResidueSet::from_residues(k, [residue]);
    cycle_search(g, k, wanted).witnesses[residue % k].take()
}

/// Residues of the lengths of all `(u, v)`-paths, with witnesses.
#[derive(Debug, Clone)]
pub struct PathSpectrum {
    pub residues: ResidueSet,
    pub witnesses: Vec<Option<PathWitness>>,
}

/// Exact residues of `(u, v)`-path lengths. Empty when `v` is unreachable.
pub fn path_spectrum(g: &Graph, u: usize, v: usize, k: usize) -> PathSpectrum {
    assert!(u != v, "path residues need distinct end vertices");
    let mut residues = ResidueSet::empty(k);
    let mut witnesses = vec![None; k];
    let all = g.vertex_mask();
    walk_paths(g, u, all, &mut |path, used| {
        let last = *path.last().unwrap();
        if last == v {
            let r = (path.len() - 1) % k;
            if !residues.contains(r) {
                residues.insert(r);
                witnesses[r] = Some(PathWitness::new(path.to_vec()));
            }
            return if residues.is_full() { Step::Stop } else { Step::Prune };
        }
        let free = (all & !used) | bit(last);
        if crate::graph::reach_within(g, last, free) & bit(v) == 0 {
            Step::Prune
        } else {
            Step::Extend
        }
    });
    PathSpectrum { residues, witnesses }
}

pub fn path_residues(g: &Graph, u: usize, v: usize, k: usize) -> ResidueSet {
    path_spectrum(g, u, v, k).residues
}

/// Whether every `(u, v)`-path has length in `l` (modulo `l`'s modulus).
pub fn is_l_type(g: &Graph, u: usize, v: usize, l: &ResidueSet) -> bool {
    path_residues(g, u, v, l.modulus()).is_subset(l)
}

/// Path residues for every ordered pair; the diagonal is empty.
#[derive(Debug, Clone)]
pub struct PairResidues {
    n: usize,
    table: Vec<ResidueSet>,
}

impl PairResidues {
    pub fn get(&self, u: usize, v: usize) -> ResidueSet {
        self.table[u * self.n + v]
    }

    /// Bitmask of the vertices `w` whose pair with `u` has `r` among its
    /// path residues.
    pub fn partners_with(&self, u: usize, r: usize) -> u64 {
        (0..self.n).filter(|&w| self.get(u, w).contains(r)).fold(0, |m, w| m | bit(w))
    }
}

/// All-pairs path residues, one path enumeration per start vertex.
pub fn pair_residues(g: &Graph, k: usize) -> PairResidues {
    let n = g.order();
    let mut table = vec![ResidueSet::empty(k); n * n];
    for u in 0..n {
        // only fill v > u, then mirror
        let row = &mut table[u * n..(u + 1) * n];
        let mut full = bit(u) | crate::graph::low_mask(u);
        walk_paths(g, u, g.vertex_mask(), &mut |path, used| {
            let last = *path.last().unwrap();
            if last > u {
                let s = &mut row[last];
                s.insert(path.len() - 1);
                if s.is_full() {
                    full |= bit(last);
                }
            }
            // Extend only while some reachable pair can still gain a residue.
            let free = (g.vertex_mask() & !used) | bit(last);
            let reach = crate::graph::reach_within(g, last, free) & !bit(last);
            if reach & !full == 0 {
                Step::Prune
            } else {
                Step::Extend
            }
        });
    }
    for u in 0..n {
        for v in 0..u {
            table[u * n + v] = table[v * n + u];
        }
    }
    PairResidues { n, table }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(r: &[usize]) -> ResidueSet {
        ResidueSet::from_residues(4, r.iter().copied())
    }

    /// Brute-force oracle: every vertex sequence of distinct vertices.
    fn brute_cycle_lengths(g: &Graph) -> Vec<usize> {
        let n = g.order();
        let mut lengths = Vec::new();
        fn extend(g: &Graph, seq: &mut Vec<usize>, lengths: &mut Vec<usize>) {
            let n = g.order();
            let last = *seq.last().unwrap();
            if seq.len() >= 3 && g.has_edge(last, seq[0]) {
                lengths.push(seq.len());
            }
            for w in 0..n {
                if !seq.contains(&w) && g.has_edge(last, w) {
                    seq.push(w);
                    extend(g, seq, lengths);
                    seq.pop();
                }
            }
        }
        for s in 0..n {
            extend(g, &mut vec![s], &mut lengths);
        }
        lengths
    }

    #[test]
    fn small_cycle_spectra() {
        assert_eq!(cycle_residues(&Graph::cycle(5), 4), set(&[1]));
        assert_eq!(cycle_residues(&Graph::complete(4), 4), set(&[0, 3]));
        assert!(cycle_residues(&Graph::path(6), 4).is_empty());
        assert!(has_mod_cycle(&Graph::cycle(4), 0, 4).is_some_and(|c| c.len() == 4));
        assert!(has_mod_cycle(&Graph::cycle(5), 0, 4).is_none());
        assert!(has_mod_cycle(&Graph::complete(5), 0, 4).is_some());
    }

    #[test]
    fn each_cycle_counted_once() {
        let mut count = 0;
        for_each_cycle(&Graph::complete(5), |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        // 10 triangles, 15 four-cycles, 12 five-cycles
        assert_eq!(count, 37);
        let brute = brute_cycle_lengths(&Graph::complete(5));
        // each cycle appears 2m times in the brute-force sequence count
        let distinct: usize = [3, 4, 5]
            .iter()
            .map(|&m| brute.iter().filter(|&&l| l == m).count() / (2 * m))
            .sum();
        assert_eq!(distinct, 37);
    }

    #[test]
    fn spectra_match_brute_force_on_petersen() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        for k in [3, 4, 5, 7] {
            let expect =
                ResidueSet::from_residues(k, brute_cycle_lengths(&g).into_iter().map(|l| l % k));
            let spec = cycle_spectrum(&g, k);
            assert_eq!(spec.residues, expect, "k = {k}");
            for r in spec.residues.iter() {
                let w = spec.witnesses[r].as_ref().unwrap();
                assert!(w.validate(&g) && w.len() % k == r);
            }
        }
    }

    #[test]
    fn path_spectra() {
        let k3 = Graph::complete(3);
        assert_eq!(path_residues(&k3, 0, 1, 4), set(&[1, 2]));
        assert!(!is_l_type(&k3, 0, 1, &set(&[1])));
        assert_eq!(path_residues(&Graph::path(3), 0, 2, 4), set(&[2]));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(path_residues(&split, 0, 3, 4).is_empty());
        assert!(is_l_type(&split, 0, 3, &set(&[])));
        let spec = path_spectrum(&Graph::cycle(7), 0, 3, 4);
        assert_eq!(spec.residues, set(&[3, 0]));
        let w = spec.witnesses[0].as_ref().unwrap();
        assert!(w.validate(&Graph::cycle(7)) && w.len() == 4);
    }

    #[test]
    fn all_pairs_agree_with_single_pairs() {
        let mut g = Graph::cycle(8);
        g.add_edge(0, 4);
        g.add_edge(2, 6);
        let all = pair_residues(&g, 4);
        for u in 0..8 {
            for v in 0..8 {
                if u != v {
                    assert_eq!(all.get(u, v), path_residues(&g, u, v, 4), "{u} {v}");
                }
            }
        }
    }
}
