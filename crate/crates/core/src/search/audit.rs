//! Structural self-checks on 2-connected graphs without cycles of length
//! divisible by 4. Each check is a known consequence of that hypothesis, so
//! on valid input the audit finds nothing; a report means a bug somewhere.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::graph::{bit, is_biconnected, Bits, Graph};
use crate::residue::{for_each_cycle, has_mod_cycle, CycleWitness, PathWitness};

use super::SearchError;

/// Largest order accepted by [`lemma_audit`].
pub const AUDIT_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditCheck {
    /// Two triangles: two disjoint connecting paths have total length
    /// 3 (mod 4), and there are never three disjoint ones.
    TrianglePair,
    /// Three odd cycles meeting pairwise in one vertex share that vertex;
    /// if their lengths agree mod 4, nothing away from it links all three.
    ConcurrentOddCycles,
    /// Three triangles: two of them are joined by disjoint paths, one
    /// through an edge of the third and one through its remaining vertex.
    TriangleTriple,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: AuditCheck,
    pub graph6: String,
    pub detail: String,
    pub cycles: Vec<CycleWitness>,
    pub paths: Vec<PathWitness>,
}

/// Every path whose only vertex in `xs` is its first and whose only vertex
/// in `ys` is its last. A vertex of `xs & ys` gives a one-vertex path.
fn connecting_paths(g: &Graph, xs: u64, ys: u64) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, used: u64, xs: u64, ys: u64, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for w in Bits(g.rows()[last] & !used & !xs) {
            path.push(w);
            if ys & bit(w) != 0 {
                out.push(path.clone());
            } else {
                extend(g, path, used | bit(w), xs, ys, out);
            }
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in Bits(xs) {
        if ys & bit(s) != 0 {
            out.push(vec![s]);
            continue;
        }
        extend(g, &mut vec![s], bit(s), xs, ys, &mut out);
    }
    out
}

fn mask_of(p: &[usize]) -> u64 {
    p.iter().fold(0, |m, &v| m | bit(v))
}

fn has_edge_on(p: &[usize], a: usize, b: usize) -> bool {
    p.windows(2).any(|w| (w[0], w[1]) == (a, b) || (w[0], w[1]) == (b, a))
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for w in Bits(g.rows()[u] & g.rows()[v]) {
            if w > v {
                out.push([u, v, w]);
            }
        }
    }
    out
}

fn tri_mask(t: &[usize; 3]) -> u64 {
    mask_of(t)
}

struct Auditor<'a> {
    g: &'a Graph,
    graph6: String,
    out: Vec<Violation>,
}

impl Auditor<'_> {
    fn report(&mut self, check: AuditCheck, detail: String, cycles: Vec<CycleWitness>, paths: Vec<PathWitness>) {
        self.out.push(Violation { check, graph6: self.graph6.clone(), detail, cycles, paths });
    }

    fn triangle_pairs(&mut self, tris: &[[usize; 3]]) {
        for (i, t1) in tris.iter().enumerate() {
            for t2 in &tris[i + 1..] {
                let paths = connecting_paths(self.g, tri_mask(t1), tri_mask(t2));
                let masks: Vec<u64> = paths.iter().map(|p| mask_of(p)).collect();
                let cycles = || vec![CycleWitness::from_open(t1), CycleWitness::from_open(t2)];
                for a in 0..paths.len() {
                    for b in a + 1..paths.len() {
                        if masks[a] & masks[b] != 0 {
                            continue;
                        }
                        let total = paths[a].len() + paths[b].len() - 2;
                        if total % 4 != 3 {
                            self.report(
                                AuditCheck::TrianglePair,
                                format!("disjoint connecting paths of total length {total}"),
                                cycles(),
                                vec![PathWitness::new(paths[a].clone()), PathWitness::new(paths[b].clone())],
                            );
                        }
                        for c in b + 1..paths.len() {
                            if masks[c] & (masks[a] | masks[b]) == 0 {
                                self.report(
                                    AuditCheck::TrianglePair,
                                    "three disjoint connecting paths".into(),
                                    cycles(),
                                    [a, b, c].iter().map(|&k| PathWitness::new(paths[k].clone())).collect(),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    fn concurrent_odd_cycles(&mut self) {
        let mut odd: Vec<Vec<usize>> = Vec::new();
        for_each_cycle(self.g, |c| {
            if c.len() % 2 == 1 {
                odd.push(c.to_vec());
            }
            ControlFlow::Continue(())
        });
        let masks: Vec<u64> = odd.iter().map(|c| mask_of(c)).collect();
        let once = |a: usize, b: usize| (masks[a] & masks[b]).count_ones() == 1;
        for i in 0..odd.len() {
            for j in i + 1..odd.len() {
                if !once(i, j) {
                    continue;
                }
                for k in j + 1..odd.len() {
                    if !once(i, k) || !once(j, k) {
                        continue;
                    }
                    let cycles = || [i, j, k].iter().map(|&c| CycleWitness::from_open(&odd[c])).collect();
                    let common = masks[i] & masks[j] & masks[k];
                    if common.count_ones() != 1 {
                        self.report(
                            AuditCheck::ConcurrentOddCycles,
                            "odd cycles meet pairwise in one vertex but share none".into(),
                            cycles(),
                            vec![],
                        );
                        continue;
                    }
                    let lens = [odd[i].len() % 4, odd[j].len() % 4, odd[k].len() % 4];
                    if lens[0] != lens[1] || lens[1] != lens[2] {
                        continue;
                    }
                    if let Some(link) = self.linking_component(common, [&odd[i], &odd[j], &odd[k]], [masks[i], masks[j], masks[k]]) {
                        let v = common.trailing_zeros();
                        self.report(
                            AuditCheck::ConcurrentOddCycles,
                            format!("vertices {:?} link all three cycles away from {v}", Bits(link).collect::<Vec<_>>()),
                            cycles(),
                            vec![],
                        );
                    }
                }
            }
        }
    }

    /// A component of `g - v` minus the cycles' edges that meets all three
    /// cycles.
    fn linking_component(&self, v: u64, cycles: [&Vec<usize>; 3], masks: [u64; 3]) -> Option<u64> {
        let mut rows: Vec<u64> = self.g.rows().iter().map(|r| r & !v).collect();
        for c in cycles {
            for i in 0..c.len() {
                let (a, b) = (c[i], c[(i + 1) % c.len()]);
                rows[a] &= !bit(b);
                rows[b] &= !bit(a);
            }
        }
        let mut rest = self.g.vertex_mask() & !v;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let next = Bits(frontier).fold(0, |m, u| m | rows[u]) & !comp;
                comp |= next;
                frontier = next;
            }
            rest &= !comp;
            if masks.iter().all(|m| m & comp != 0) {
                return Some(comp);
            }
        }
        None
    }

    fn triangle_triples(&mut self, tris: &[[usize; 3]]) {
        for i in 0..tris.len() {
            for j in i + 1..tris.len() {
                for k in j + 1..tris.len() {
                    let three = [tris[i], tris[j], tris[k]];
                    if !self.sigma_configuration(&three) {
                        self.report(
                            AuditCheck::TriangleTriple,
                            "no pair of triangles is joined through the third".into(),
                            three.iter().map(|t| CycleWitness::from_open(t)).collect(),
                            vec![],
                        );
                    }
                }
            }
        }
    }

    fn sigma_configuration(&self, three: &[[usize; 3]; 3]) -> bool {
        for third in 0..3 {
            let (t1, t2) = match third {
                0 => (three[1], three[2]),
                1 => (three[0], three[2]),
                _ => (three[0], three[1]),
            };
            let paths = connecting_paths(self.g, tri_mask(&t1), tri_mask(&t2));
            let masks: Vec<u64> = paths.iter().map(|p| mask_of(p)).collect();
            let t = three[third];
            for ci in 0..3 {
                let c = t[ci];
                let (a, b) = (t[(ci + 1) % 3], t[(ci + 2) % 3]);
                for (p, &pm) in paths.iter().zip(&masks) {
                    if !has_edge_on(p, a, b) {
                        continue;
                    }
                    if masks.iter().any(|&qm| qm & bit(c) != 0 && qm & pm == 0) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Runs all checks on a 2-connected graph of order at most 12 with no cycle
/// of length divisible by 4. An empty list is the expected answer.
pub fn lemma_audit(g: &Graph) -> Result<Vec<Violation>, SearchError> {
    let n = g.order();
    if n > AUDIT_MAX_ORDER {
        return Err(SearchError::Precondition(format!("order {n} exceeds {AUDIT_MAX_ORDER}")));
    }
    if !is_biconnected(g).unwrap_or(false) {
        return Err(SearchError::Precondition("graph is not 2-connected".into()));
    }
    if let Some(c) = has_mod_cycle(g, 0, 4) {
        return Err(SearchError::Precondition(format!(
            "graph has a cycle of length {} through {:?}",
            c.len(),
            c.open()
        )));
    }
    let mut a = Auditor { g, graph6: g.to_string(), out: Vec::new() };
    let tris = triangles(g);
    a.triangle_pairs(&tris);
    a.concurrent_odd_cycles();
    a.triangle_triples(&tris);
    Ok(a.out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connecting_paths_of_bowtie() {
        // triangles 012 and 234 share vertex 2
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let p = connecting_paths(&g, 0b00111, 0b11100);
        assert_eq!(p, vec![vec![2]]);
        let p = connecting_paths(&Graph::cycle(6), 0b000011, 0b011000);
        assert_eq!(p, vec![vec![0, 5, 4], vec![1, 2, 3]]);
    }

    #[test]
    fn clean_inputs() {
        assert!(lemma_audit(&Graph::cycle(5)).unwrap().is_empty());
        assert!(lemma_audit(&Graph::complete(3)).unwrap().is_empty());
        for k in 0..=2 {
            let g = crate::constructor::extremal_family_g(k).unwrap().construction.graph;
            assert!(lemma_audit(&g).unwrap().is_empty());
        }
    }

    #[test]
    fn preconditions() {
        assert!(matches!(lemma_audit(&Graph::cycle(4)), Err(SearchError::Precondition(_))));
        assert!(matches!(lemma_audit(&Graph::complete(5)), Err(SearchError::Precondition(_))));
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(lemma_audit(&path), Err(SearchError::Precondition(_))));
    }

    #[test]
    fn bowtie_with_bad_link_is_reported() {
        // triangles 012 and 234 also joined by 1-5-3: lengths 0 + 2. The
        // graph has a 4-cycle, so the check is run directly.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (1, 5), (5, 3)]).unwrap();
        let mut a = Auditor { g: &g, graph6: g.to_string(), out: Vec::new() };
        a.triangle_pairs(&triangles(&g));
        assert!(a.out.iter().any(|v| v.check == AuditCheck::TrianglePair));
    }
}
