//! The named rooted gadgets. The six `F` graphs are frozen data: each is a
//! representative of the unique class of extremal rooted graphs found by
//! exhaustive search for its residue type and order.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::graph::{from_graph6, Graph};
use crate::residue::{has_mod_cycle, path_residues, ResidueSet};

use super::{every_edge_on_root_path, GadgetError, RootedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetName {
    F3,
    F4,
    F6,
    F7,
    F8,
    F9,
    K3,
    /// Path on the given number of vertices (at least 2).
    Path(usize),
    /// Cycle on the given number of vertices (at least 3).
    Cycle(usize),
}

impl GadgetName {
    /// The six frozen gadgets.
    pub const FROZEN: [GadgetName; 6] = [
        GadgetName::F3,
        GadgetName::F4,
        GadgetName::F6,
        GadgetName::F7,
        GadgetName::F8,
        GadgetName::F9,
    ];
}

impl fmt::Display for GadgetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetName::Path(n) => write!(f, "P{n}"),
            GadgetName::Cycle(n) => write!(f, "C{n}"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for GadgetName {
    type Err = GadgetError;

    fn from_str(s: &str) -> Result<Self, GadgetError> {
        let unknown = || GadgetError::UnknownGadget(s.to_string());
        Ok(match s {
            "F3" => GadgetName::F3,
            "F4" => GadgetName::F4,
            "F6" => GadgetName::F6,
            "F7" => GadgetName::F7,
            "F8" => GadgetName::F8,
            "F9" => GadgetName::F9,
            "K3" => GadgetName::K3,
            _ => {
                let (kind, digits) = s.split_at(s.len().min(1));
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(unknown());
                }
                let k: usize = digits.parse().map_err(|_| unknown())?;
                match kind {
                    "P" => GadgetName::Path(k),
                    "C" => GadgetName::Cycle(k),
                    _ => return Err(unknown()),
                }
            }
        })
    }
}

/// Documented constraints of a catalogue entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetSpec {
    pub name: GadgetName,
    pub vertices: usize,
    pub edges: usize,
    /// Exact residues of the `(a, b)`-path lengths modulo 4.
    pub declared_type: ResidueSet,
    pub has_c: bool,
}

impl GadgetSpec {
    pub fn of(name: GadgetName) -> Result<GadgetSpec, GadgetError> {
        let pair = ResidueSet::consecutive_pair;
        let (vertices, edges, declared_type, has_c) = match name {
            GadgetName::F3 => (3, 2, ResidueSet::from_residues(4, [2]), false),
            GadgetName::F4 => (4, 4, pair(2), false),
            GadgetName::F6 => (6, 7, pair(3), true),
            GadgetName::F7 => (7, 9, pair(0), false),
            GadgetName::F8 => (8, 11, pair(1), false),
            GadgetName::F9 => (9, 12, pair(2), false),
            GadgetName::K3 => (3, 3, pair(1), true),
            GadgetName::Path(n) => {
                check_min(name, n, 2)?;
                (n, n - 1, ResidueSet::from_residues(4, [n - 1]), false)
            }
            GadgetName::Cycle(n) => {
                check_min(name, n, 3)?;
                (n, n, ResidueSet::from_residues(4, [1, n - 1]), true)
            }
        };
        Ok(GadgetSpec { name, vertices, edges, declared_type, has_c })
    }

    /// Checks every documented constraint against a realisation.
    pub fn validate(&self, g: &Gadget) -> Result<(), GadgetError> {
        let fail = |reason: String| GadgetError::Invalid { name: self.name.to_string(), reason };
        let graph = &g.rooted.graph;
        let (a, b) = g.rooted.roots;
        if graph.order() != self.vertices || graph.size() != self.edges {
            return Err(fail(format!(
                "expected {} vertices and {} edges, found {} and {}",
                self.vertices,
                self.edges,
                graph.order(),
                graph.size()
            )));
        }
        let is_cycle = matches!(self.name, GadgetName::Cycle(_));
        if !is_cycle {
            if let Some(c) = has_mod_cycle(graph, 0, 4) {
                return Err(fail(format!("contains the 4k-cycle {:?}", c.vertices)));
            }
        }
        let pr = path_residues(graph, a, b, 4);
        if pr != self.declared_type {
            return Err(fail(format!("(a, b) path residues are {pr}, not {}", self.declared_type)));
        }
        if !every_edge_on_root_path(graph, a, b) {
            return Err(fail("an edge lies on no (a, b)-path".into()));
        }
        if self.has_c != g.c.is_some() {
            return Err(fail("root c presence does not match".into()));
        }
        if self.name == GadgetName::F6 {
            let c = g.c.unwrap();
            if !graph.has_edge(b, c) {
                return Err(fail("c is not a neighbour of b".into()));
            }
            let bc = path_residues(graph, b, c, 4);
            if bc != ResidueSet::consecutive_pair(0) {
                return Err(fail(format!("(b, c) path residues are {bc}, not {{0,1}}")));
            }
        }
        if self.name == GadgetName::F9 && graph.neighbors(a) & graph.neighbors(b) == 0 {
            return Err(fail("a and b have no common neighbour".into()));
        }
        Ok(())
    }
}

fn check_min(name: GadgetName, n: usize, min: usize) -> Result<(), GadgetError> {
    if n < min {
        return Err(GadgetError::TooSmall { name: name.to_string(), min });
    }
    Ok(())
}

/// A catalogue entry: the rooted graph `(G; a, b)` and the optional third
/// root `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub name: GadgetName,
    pub rooted: RootedGraph,
    pub c: Option<usize>,
}

impl Gadget {
    /// Vertex id of the root labelled `a`, `b` or `c`.
    pub fn root(&self, label: &str) -> Result<usize, GadgetError> {
        match (label, self.c) {
            ("a", _) => Ok(self.rooted.x()),
            ("b", _) => Ok(self.rooted.y()),
            ("c", Some(c)) => Ok(c),
            _ => Err(GadgetError::NoSuchRoot {
                gadget: self.name.to_string(),
                label: label.to_string(),
            }),
        }
    }

    pub fn sidecar(&self) -> GadgetSidecar {
        GadgetSidecar {
            name: self.name.to_string(),
            graph6: self.rooted.graph.to_string(),
            roots: self.rooted.roots,
            c: self.c,
            declared_type: GadgetSpec::of(self.name).expect("catalogue name").declared_type,
        }
    }
}

/// JSON description written next to an exported gadget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetSidecar {
    pub name: String,
    pub graph6: String,
    pub roots: (usize, usize),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    pub declared_type: ResidueSet,
}

/// graph6, a, b, c for the frozen entries.
const FROZEN_DATA: [(GadgetName, &str, usize, usize, Option<usize>); 6] = [
    (GadgetName::F3, "Bg", 0, 2, None),
    (GadgetName::F4, "CN", 0, 1, None),
    (GadgetName::F6, "EIeg", 0, 1, Some(2)),
    (GadgetName::F7, "F_Tl_", 0, 1, None),
    (GadgetName::F8, "G_CjeW", 0, 1, None),
    // F8 with a pendant vertex 8 at its root 0
    (GadgetName::F9, "H_CjeY?", 8, 1, None),
];

fn frozen() -> &'static [Gadget; 6] {
    static CELL: OnceLock<[Gadget; 6]> = OnceLock::new();
    CELL.get_or_init(|| {
        FROZEN_DATA.map(|(name, g6, a, b, c)| {
            let graph = from_graph6(g6).expect("frozen graph6");
            let g = Gadget { name, rooted: RootedGraph::new(graph, a, b).unwrap(), c };
            GadgetSpec::of(name).unwrap().validate(&g).expect("frozen gadget is valid");
            g
        })
    })
}

/// The catalogue entry for `name`.
pub fn gadget(name: GadgetName) -> Result<Gadget, GadgetError> {
    let spec = GadgetSpec::of(name)?;
    let built = |graph: Graph, a: usize, b: usize, c: Option<usize>| Gadget {
        name,
        rooted: RootedGraph { graph, roots: (a, b) },
        c,
    };
    Ok(match name {
        GadgetName::K3 => built(Graph::complete(3), 0, 1, Some(2)),
        GadgetName::Path(n) => built(Graph::path(n), 0, n - 1, None),
        GadgetName::Cycle(n) => built(Graph::cycle(n), 0, 1, Some(2)),
        _ => {
            let i = GadgetName::FROZEN.iter().position(|&f| f == name).unwrap();
            frozen()[i].clone()
        }
    })
    .inspect(|g| debug_assert!(spec.validate(g).is_ok()))
}
