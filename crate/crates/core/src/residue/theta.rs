use crate::graph::{bit, reach_within, Bits, Graph};

use super::{PathWitness, ThetaWitness};

/// Every `(x, y)`-path of even length, ordered by length then vertex
/// sequence.
fn even_paths(g: &Graph, x: usize, y: usize) -> Vec<PathWitness> {
    fn go(g: &Graph, y: usize, path: &mut Vec<usize>, used: u64, out: &mut Vec<PathWitness>) {
        let last = *path.last().unwrap();
        for w in Bits(g.rows()[last] & !used) {
            path.push(w);
            if w == y {
                if (path.len() - 1) % 2 == 0 {
                    out.push(PathWitness::new(path.clone()));
                }
            } else {
                let free = (g.vertex_mask() & !used) | bit(w);
                if reach_within(g, w, free) & bit(y) != 0 {
                    go(g, y, path, used | bit(w), out);
                }
            }
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(g, y, &mut vec![x], bit(x), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.vertices.cmp(&b.vertices)));
    out
}

/// Three internally disjoint `(x, y)`-paths of even length, minimising the
/// total length; ties go to the lexicographically smallest triple.
pub fn find_even_theta(g: &Graph, x: usize, y: usize) -> Option<ThetaWitness> {
    assert!(x != y, "theta endpoints must differ");
    let paths = even_paths(g, x, y);
    let interiors: Vec<u64> = paths.iter().map(|p| p.interior_mask()).collect();
    let mut best: Option<(usize, [usize; 3])> = None;
    for i in 0..paths.len() {
        let li = paths[i].len();
        for j in i + 1..paths.len() {
            let lij = li + paths[j].len();
            if best.is_some_and(|(t, _)| lij + paths[j].len() > t) {
                break;
            }
            if interiors[i] & interiors[j] != 0 {
                continue;
            }
            let both = interiors[i] | interiors[j];
            for k in j + 1..paths.len() {
                let total = lij + paths[k].len();
                if best.is_some_and(|(t, _)| total > t) {
                    break;
                }
                if interiors[k] & both != 0 {
                    continue;
                }
                // Sorted order makes the first hit at a given total the
                // lexicographically smallest one among those sharing `i`.
                let better = match best {
                    None => true,
                    Some((t, [a, b, c])) => {
                        total < t
                            || (total == t
                                && (&paths[i], &paths[j], &paths[k])
                                    < (&paths[a], &paths[b], &paths[c]))
                    }
                };
                if better {
                    best = Some((total, [i, j, k]));
                }
                break;
            }
        }
    }
    best.map(|(_, [a, b, c])| ThetaWitness {
        x,
        y,
        paths: [paths[a].clone(), paths[b].clone(), paths[c].clone()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k23_has_even_theta() {
        let g = Graph::complete_bipartite(2, 3);
        let t = find_even_theta(&g, 0, 1).unwrap();
        assert!(t.validate(&g));
        assert_eq!(t.lengths(), [2, 2, 2]);
    }

    #[test]
    fn odd_cycle_has_none() {
        let g = Graph::cycle(5);
        for x in 0..5 {
            for y in 0..5 {
                if x != y {
                    assert!(find_even_theta(&g, x, y).is_none());
                }
            }
        }
    }

    #[test]
    fn prefers_shortest_total() {
        // paths 0-2-1, 0-3-1, 0-4-1 and 0-5-6-7-1
        let g = Graph::from_edges(
            8,
            &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (0, 5), (5, 6), (6, 7), (7, 1)],
        )
        .unwrap();
        let t = find_even_theta(&g, 0, 1).unwrap();
        assert_eq!(t.lengths(), [2, 2, 2]);
        assert_eq!(t.paths[2].vertices, vec![0, 4, 1]);
    }
}
