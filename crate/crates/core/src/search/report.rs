use serde::Serialize;

use crate::gadgets::{every_edge_on_root_path, reversal_closure};
use crate::graph::{canonical_form, from_graph6, is_biconnected, is_connected, Graph};
use crate::residue::{has_mod_cycle, path_residues, ResidueSet};

use super::audit::Violation;
use super::{enumerate_modfree, GraphClass, SearchError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    MaxEdges,
    PropGadget,
    LemmaAudit,
}

/// An extremal graph in canonical form; rooted searches also give roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ExtremalGraph {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<(usize, usize)>,
}

/// Extremal results of a rooted search when graphs with isolated vertices
/// are admitted as well.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsolatedVertices {
    pub excluded: bool,
    pub max_edges_if_included: Option<usize>,
    /// Whether admitting them would change the maximum.
    pub matters: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub task: Task,
    pub order: usize,
    pub class: GraphClass,
    /// Cycles of length `forbidden_residue (mod modulus)` are excluded.
    pub forbidden_residue: usize,
    pub modulus: usize,
    /// Required superset of the root-to-root path residues, if rooted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_type: Option<ResidueSet>,
    pub examined: usize,
    pub max_edges: Option<usize>,
    /// Upper bound the maximum is checked against.
    pub bound: Option<usize>,
    pub extremal: Vec<ExtremalGraph>,
    pub reversing_classes: Option<usize>,
    /// Catalogue gadget reversing-equivalent to an extremal graph, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tight_example: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isolated_vertices: Option<IsolatedVertices>,
    pub violations: Vec<Violation>,
}

impl SearchReport {
    pub fn new(task: Task, order: usize, class: GraphClass) -> Self {
        SearchReport {
            task,
            order,
            class,
            forbidden_residue: 0,
            modulus: 4,
            root_type: None,
            examined: 0,
            max_edges: None,
            bound: None,
            extremal: Vec::new(),
            reversing_classes: None,
            tight_example: None,
            isolated_vertices: None,
            violations: Vec::new(),
        }
    }

    /// Whether the maximum (if any) respects the bound (if any).
    pub fn within_bound(&self) -> bool {
        match (self.max_edges, self.bound) {
            (Some(m), Some(b)) => m <= b,
            _ => true,
        }
    }

    /// Re-checks every extremal graph against the constraints of the class.
    pub fn revalidate(&self) -> Result<(), String> {
        for e in &self.extremal {
            let g = from_graph6(&e.graph6).map_err(|err| format!("{}: {err}", e.graph6))?;
            let fail = |why: &str| Err(format!("{}: {why}", e.graph6));
            if g.order() != self.order || Some(g.size()) != self.max_edges {
                return fail("wrong order or size");
            }
            if has_mod_cycle(&g, self.forbidden_residue, self.modulus).is_some() {
                return fail("has a forbidden cycle");
            }
            let class_ok = match self.class {
                GraphClass::All => true,
                GraphClass::Connected => is_connected(&g).unwrap_or(false),
                GraphClass::Biconnected => is_biconnected(&g).unwrap_or(false),
            };
            if !class_ok {
                return fail("outside the class");
            }
            if let (Some(l), Some((x, y))) = (self.root_type, e.roots) {
                if !path_residues(&g, x, y, self.modulus).is_subset(&l) {
                    return fail("root paths outside the type");
                }
                if !every_edge_on_root_path(&g, x, y) {
                    return fail("an edge lies on no root path");
                }
                if g.rows().contains(&0) {
                    return fail("isolated vertex");
                }
            }
        }
        Ok(())
    }
}

/// Edge bound for `n`-vertex graphs of the class with no cycle of length
/// divisible by 4: `floor(19(n - 1) / 12)` in general and
/// `floor((3n - 1) / 2)` for 2-connected graphs.
pub fn edge_bound(n: usize, class: GraphClass) -> usize {
    match class {
        GraphClass::All | GraphClass::Connected => 19 * (n.saturating_sub(1)) / 12,
        GraphClass::Biconnected => (3 * n).saturating_sub(1) / 2,
    }
}

/// Partitions items into classes given, for each item, the indices of items
/// equivalent to it.
pub(crate) fn count_classes(links: &[Vec<usize>]) -> usize {
    let mut parent: Vec<usize> = (0..links.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (i, js) in links.iter().enumerate() {
        for &j in js {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    (0..links.len()).filter(|&i| find(&mut parent, i) == i).count()
}

/// Maximum edge count over the class, with every extremal graph. For the
/// 2-connected class the extremal graphs are also grouped by reversals.
pub fn max_edges(n: usize, class: GraphClass, workers: Option<usize>) -> Result<SearchReport, SearchError> {
    let graphs = enumerate_modfree(n, class, workers)?;
    let mut report = SearchReport::new(Task::MaxEdges, n, class);
    report.examined = graphs.len();
    report.bound = Some(edge_bound(n, class));
    report.max_edges = graphs.iter().map(Graph::size).max();
    let extremal: Vec<&Graph> =
        graphs.iter().filter(|g| Some(g.size()) == report.max_edges).collect();
    report.extremal = extremal
        .iter()
        .map(|g| ExtremalGraph { graph6: g.to_string(), roots: None })
        .collect();
    report.extremal.sort();
    if class == GraphClass::Biconnected {
        let links: Vec<Vec<usize>> = extremal
            .iter()
            .map(|g| {
                let closure = reversal_closure(g).expect("search orders are small");
                (0..extremal.len())
                    .filter(|&j| closure.contains(&canonical_form(extremal[j])))
                    .collect()
            })
            .collect();
        report.reversing_classes = Some(count_classes(&links));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_maxima() {
        let r = max_edges(5, GraphClass::Biconnected, None).unwrap();
        assert_eq!(r.max_edges, Some(5));
        assert_eq!(r.extremal, vec![ExtremalGraph { graph6: canonical_form(&Graph::cycle(5)).to_string(), roots: None }]);
        assert_eq!(r.reversing_classes, Some(1));
        r.revalidate().unwrap();
        let r = max_edges(4, GraphClass::Biconnected, None).unwrap();
        assert_eq!((r.max_edges, r.examined), (None, 0));
        let r = max_edges(7, GraphClass::All, Some(2)).unwrap();
        assert_eq!(r.max_edges, Some(9));
        assert!(r.within_bound());
        r.revalidate().unwrap();
    }

    #[test]
    fn bounds() {
        let all: Vec<usize> = (3..=9).map(|n| edge_bound(n, GraphClass::All)).collect();
        assert_eq!(all, vec![3, 4, 6, 7, 9, 11, 12]);
        assert_eq!(edge_bound(8, GraphClass::Biconnected), 11);
    }

    #[test]
    fn report_json_shape() {
        let r = max_edges(3, GraphClass::Biconnected, None).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["task"], "max-edges");
        assert_eq!(v["class"], "biconnected");
        assert_eq!(v["max_edges"], 3);
        assert_eq!(v["extremal"][0]["graph6"], "Bw");
        assert!(v.get("root_type").is_none());
    }
}
