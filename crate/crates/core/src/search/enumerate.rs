//! Isomorph-free generation by vertex augmentation.
//!
//! Every graph in a hereditary family arises from some member on one
//! vertex fewer by adding a vertex, so level `m + 1` is obtained from the
//! canonical representatives of level `m` by trying every admissible
//! neighbourhood of a new vertex and deduplicating by canonical form.
//! Forbidding cycles of a fixed residue is hereditary, and the admissible
//! neighbourhoods are exactly the cliques of a compatibility graph: the new
//! vertex closes a cycle of length `l(P) + 2` for every path `P` between two
//! of its neighbours.

use rayon::prelude::*;

use crate::graph::{bit, canonical_form, is_biconnected, is_connected, Bits, Graph};
use crate::residue::pair_residues;

use super::{GraphClass, SearchError, MAX_SEARCH_ORDER};

/// The graphs being generated: all graphs, or those with no cycle whose
/// length is `residue (mod modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Unrestricted,
    AvoidCycles { residue: usize, modulus: usize },
}

impl Family {
    /// No cycle of length divisible by 4.
    pub const MOD4_FREE: Family = Family::AvoidCycles { residue: 0, modulus: 4 };

    /// For each vertex `u`, the vertices that may both be joined to a new
    /// vertex together with `u`.
    fn compatibility(&self, g: &Graph) -> Vec<u64> {
        let n = g.order();
        match *self {
            Family::Unrestricted => (0..n).map(|u| g.vertex_mask() & !bit(u)).collect(),
            Family::AvoidCycles { residue, modulus } => {
                let pr = pair_residues(g, modulus);
                // a path of length r - 2 (mod k) closes a forbidden cycle
                let bad = (residue + 2 * modulus - 2) % modulus;
                (0..n)
                    .map(|u| g.vertex_mask() & !bit(u) & !pr.partners_with(u, bad))
                    .collect()
            }
        }
    }
}

/// Every clique of the compatibility graph (including the empty one when
/// `allow_empty`), as vertex masks.
fn cliques(compat: &[u64], allow_empty: bool) -> Vec<u64> {
    fn grow(compat: &[u64], clique: u64, candidates: u64, out: &mut Vec<u64>) {
        for v in Bits(candidates) {
            let c = clique | bit(v);
            out.push(c);
            let rest = candidates & compat[v] & !crate::graph::low_mask(v + 1);
            grow(compat, c, rest, out);
        }
    }
    let mut out = Vec::new();
    if allow_empty {
        out.push(0);
    }
    grow(compat, 0, crate::graph::low_mask(compat.len()), &mut out);
    out
}

fn children(g: &Graph, family: Family, connected: bool) -> Vec<Graph> {
    let compat = family.compatibility(g);
    cliques(&compat, !connected)
        .into_iter()
        .map(|s| canonical_form(&g.with_vertex(s).expect("order checked by caller")))
        .collect()
}

fn run<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T, SearchError> {
    match workers {
        None => Ok(job()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| SearchError::Workers(e.to_string()))?;
            Ok(pool.install(job))
        }
    }
}

/// Canonical representatives of all `n`-vertex members of `family` that are
/// connected (`connected = true`) or arbitrary, for every order `1..=n`.
/// `levels[m - 1]` holds order `m`, sorted.
pub fn generate_levels(
    n: usize,
    family: Family,
    connected: bool,
    workers: Option<usize>,
) -> Result<Vec<Vec<Graph>>, SearchError> {
    if n == 0 || n > MAX_SEARCH_ORDER {
        return Err(SearchError::OrderOutOfRange { n, min: 1, max: MAX_SEARCH_ORDER });
    }
    run(workers, || {
        let mut levels = vec![vec![Graph::empty(1).unwrap()]];
        for _ in 1..n {
            let parents = levels.last().unwrap();
            let mut next: Vec<Graph> = parents
                .par_iter()
                .flat_map_iter(|g| children(g, family, connected))
                .collect();
            next.par_sort_unstable();
            next.dedup();
            levels.push(next);
        }
        levels
    })
}

/// Canonical representatives of the `n`-vertex graphs of `family` in
/// `class`, sorted.
pub fn enumerate_family(
    n: usize,
    class: GraphClass,
    family: Family,
    workers: Option<usize>,
) -> Result<Vec<Graph>, SearchError> {
    let connected = class != GraphClass::All;
    let mut levels = generate_levels(n, family, connected, workers)?;
    let mut graphs = levels.pop().unwrap();
    if class == GraphClass::Biconnected {
        graphs.retain(|g| is_biconnected(g).unwrap_or(false));
    }
    debug_assert!(class == GraphClass::All || graphs.iter().all(|g| is_connected(g).unwrap()));
    Ok(graphs)
}

/// Canonical representatives of the `n`-vertex graphs with no cycle of
/// length divisible by 4, restricted to `class`, sorted.
pub fn enumerate_modfree(
    n: usize,
    class: GraphClass,
    workers: Option<usize>,
) -> Result<Vec<Graph>, SearchError> {
    if !(3..=MAX_SEARCH_ORDER).contains(&n) {
        return Err(SearchError::OrderOutOfRange { n, min: 3, max: MAX_SEARCH_ORDER });
    }
    enumerate_family(n, class, Family::MOD4_FREE, workers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residue::has_mod_cycle;

    fn counts(family: Family, class: GraphClass, max: usize) -> Vec<usize> {
        (1..=max).map(|n| enumerate_family(n, class, family, None).unwrap().len()).collect()
    }

    #[test]
    fn all_graphs_match_known_counts() {
        // numbers of graphs / connected graphs on 1..=7 vertices
        assert_eq!(
            counts(Family::Unrestricted, GraphClass::All, 7),
            vec![1, 2, 4, 11, 34, 156, 1044]
        );
        assert_eq!(
            counts(Family::Unrestricted, GraphClass::Connected, 7),
            vec![1, 1, 2, 6, 21, 112, 853]
        );
        assert_eq!(
            counts(Family::Unrestricted, GraphClass::Biconnected, 7)[2..],
            [1, 3, 10, 56, 468]
        );
    }

    #[test]
    fn small_biconnected_classes() {
        let k3 = enumerate_modfree(3, GraphClass::Biconnected, None).unwrap();
        assert_eq!(k3, vec![canonical_form(&Graph::complete(3))]);
        assert!(enumerate_modfree(4, GraphClass::Biconnected, None).unwrap().is_empty());
        let c5 = enumerate_modfree(5, GraphClass::Biconnected, None).unwrap();
        assert_eq!(c5, vec![canonical_form(&Graph::cycle(5))]);
    }

    #[test]
    fn pruning_agrees_with_unpruned_filter() {
        for n in 1..=6 {
            for class in [GraphClass::All, GraphClass::Connected] {
                let mut filtered: Vec<Graph> = enumerate_family(n, class, Family::Unrestricted, None)
                    .unwrap()
                    .into_iter()
                    .filter(|g| has_mod_cycle(g, 0, 4).is_none())
                    .collect();
                filtered.sort();
                let pruned = enumerate_family(n, class, Family::MOD4_FREE, None).unwrap();
                assert_eq!(pruned, filtered, "n = {n}");
            }
        }
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let a = enumerate_modfree(8, GraphClass::All, Some(1)).unwrap();
        let b = enumerate_modfree(8, GraphClass::All, Some(3)).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| has_mod_cycle(g, 0, 4).is_none()));
    }

    #[test]
    fn order_range_checked() {
        assert!(enumerate_modfree(2, GraphClass::All, None).is_err());
        assert!(enumerate_modfree(11, GraphClass::All, None).is_err());
    }
}
