//! Rooted graphs `(H; x, y)` with no cycle of length divisible by 4 whose
//! root-to-root paths have residues in a named pair `L` and whose every edge
//! lies on such a path.

use std::collections::BTreeSet;

use crate::gadgets::{every_edge_on_root_path, gadget, rooted_reversal_closure, GadgetName, RootedGraph};
use crate::residue::{path_residues, ResidueSet};

use super::report::{count_classes, ExtremalGraph, IsolatedVertices, SearchReport, Task};
use super::{enumerate_family, Family, GraphClass, SearchError};

/// Smallest order searched.
pub const PROP_MIN_ORDER: usize = 3;

/// For a named pair: the largest order covered by the bound, the numerator
/// of the linear bound `(3n - d) / 2`, and the gadget attaining it at that
/// order.
fn prop_params(l: &ResidueSet) -> Option<(usize, usize, GadgetName)> {
    if l.modulus() != 4 || l.len() != 2 {
        return None;
    }
    let m = l.mask();
    Some(match m {
        0b1001 => (6, 4, GadgetName::F6),
        0b0011 => (7, 3, GadgetName::F7),
        0b0110 => (8, 2, GadgetName::F8),
        0b1100 => (9, 3, GadgetName::F9),
        _ => return None,
    })
}

/// Largest order for which the bound applies to pair `l`.
pub fn prop_max_order(l: &ResidueSet) -> Option<usize> {
    prop_params(l).map(|p| p.0)
}

/// The gadget attaining the bound at the largest order for `l`.
pub fn prop_tight_gadget(l: &ResidueSet) -> Option<GadgetName> {
    prop_params(l).map(|p| p.2)
}

/// Upper bound on `e(H)`: with `t = (3n - d) / 2`, it is `floor(t)` when
/// `t` is fractional, `t` at the largest order, and `t - 1` otherwise.
pub fn prop_bound(l: &ResidueSet, n: usize) -> Option<usize> {
    let (max, d, _) = prop_params(l)?;
    if !(PROP_MIN_ORDER..=max).contains(&n) {
        return None;
    }
    let num = 3 * n - d;
    Some(if num % 2 == 1 || n == max { num / 2 } else { num / 2 - 1 })
}

fn check_range(l: &ResidueSet, n: usize) -> Result<(), SearchError> {
    let max = prop_max_order(l).ok_or(SearchError::NotNamedPair(*l))?;
    if !(PROP_MIN_ORDER..=max).contains(&n) {
        return Err(SearchError::OrderOutOfRange { n, min: PROP_MIN_ORDER, max });
    }
    Ok(())
}

/// Exhaustive search over rooted `n`-vertex graphs of type `l`.
///
/// Roots are unordered and graphs with isolated vertices are left out of
/// the maximum; the report says whether admitting them would change it.
pub fn verify_prop_gadget(l: &ResidueSet, n: usize, workers: Option<usize>) -> Result<SearchReport, SearchError> {
    check_range(l, n)?;
    let graphs = enumerate_family(n, GraphClass::All, Family::MOD4_FREE, workers)?;
    let mut report = SearchReport::new(Task::PropGadget, n, GraphClass::All);
    report.root_type = Some(*l);
    report.examined = graphs.len();
    report.bound = prop_bound(l, n);

    let mut rooted: BTreeSet<RootedGraph> = BTreeSet::new();
    let mut with_isolated: Option<usize> = None;
    for g in &graphs {
        let isolated = g.rows().contains(&0);
        for x in 0..n {
            for y in x + 1..n {
                if !path_residues(g, x, y, 4).is_subset(l) || !every_edge_on_root_path(g, x, y) {
                    continue;
                }
                with_isolated = with_isolated.max(Some(g.size()));
                if !isolated {
                    rooted.insert(RootedGraph { graph: g.clone(), roots: (x, y) }.canonical());
                }
            }
        }
    }
    report.max_edges = rooted.iter().map(|r| r.graph.size()).max();
    report.isolated_vertices = Some(IsolatedVertices {
        excluded: true,
        max_edges_if_included: with_isolated,
        matters: with_isolated != report.max_edges,
    });

    let extremal: Vec<RootedGraph> =
        rooted.into_iter().filter(|r| Some(r.graph.size()) == report.max_edges).collect();
    let closures: Vec<BTreeSet<_>> = extremal
        .iter()
        .map(|r| rooted_reversal_closure(r).expect("search orders are small"))
        .collect();
    let links: Vec<Vec<usize>> = closures
        .iter()
        .map(|c| {
            (0..extremal.len())
                .filter(|&j| c.contains(&(extremal[j].graph.clone(), extremal[j].roots)))
                .collect()
        })
        .collect();
    report.reversing_classes = Some(count_classes(&links));

    let name = prop_tight_gadget(l).expect("checked above");
    let f = gadget(name).expect("catalogue gadget").rooted.canonical();
    if closures.iter().any(|c| c.contains(&(f.graph.clone(), f.roots))) {
        report.tight_example = Some(name.to_string());
    }
    report.extremal = extremal
        .iter()
        .map(|r| ExtremalGraph { graph6: r.graph.to_string(), roots: Some(r.roots) })
        .collect();
    report.extremal.sort();
    Ok(report)
}
