use std::collections::HashSet;

use itertools::Itertools;
use modcycle::graph::{is_bipartite, is_planar, Graph};
use modcycle::residue::{find_even_theta, has_mod_cycle};
use modcycle::search::{enumerate_family, enumerate_modfree, Family, GraphClass};

fn labeled_modfree_count(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).array_combinations().map(|[a, b]| (a, b)).collect();
    let mut count = 0;
    for bits in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if has_mod_cycle(&g, 0, 4).is_none() {
            count += 1;
        }
    }
    count
}

fn labeled_copies(g: &Graph) -> u64 {
    let n = g.order();
    let copies: HashSet<Graph> = (0..n).permutations(n).map(|p| g.permuted(&p)).collect();
    copies.len() as u64
}

#[test]
fn class_counts_match_labeled_filter() {
    for n in 3..=7 {
        let classes = enumerate_modfree(n, GraphClass::All, None).unwrap();
        let from_classes: u64 = classes.iter().map(labeled_copies).sum();
        assert_eq!(from_classes, labeled_modfree_count(n), "n = {n}");
    }
}

#[test]
fn workers_do_not_change_results() {
    for class in [GraphClass::All, GraphClass::Biconnected] {
        let one = enumerate_modfree(9, class, Some(1)).unwrap();
        let four = enumerate_modfree(9, class, Some(4)).unwrap();
        assert_eq!(one, four);
    }
}

#[test]
fn bipartite_members_are_sparse() {
    for n in 4..=9 {
        for g in enumerate_modfree(n, GraphClass::All, None).unwrap() {
            if is_bipartite(&g) {
                assert!(2 * g.size() <= 3 * (n - 2), "{g}");
            }
        }
    }
}

#[test]
fn theta_and_planarity_imply_mod_cycle_on_all_small_graphs() {
    for n in 3..=7 {
        for g in enumerate_family(n, GraphClass::All, Family::Unrestricted, None).unwrap() {
            let modfree = has_mod_cycle(&g, 0, 4).is_none();
            if !is_planar(&g) {
                assert!(!modfree, "{g}");
            }
            for [x, y] in (0..n).array_combinations() {
                if let Some(t) = find_even_theta(&g, x, y) {
                    assert!(t.validate(&g));
                    assert!(!modfree, "{g}");
                }
            }
        }
    }
}
