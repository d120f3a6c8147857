//! Gap-reducing construction steps, the two infinite extremal families and
//! compositional residue certificates.

mod certificate;
mod family;
mod profile;

pub use certificate::{sum_law_bound, ResidueCertificate};
pub use family::{extremal_family_g, extremal_family_h, extremal_for_n, FamilyGraph};
pub use profile::find_gap_profile;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::gadgets::{gadget, gap, parallel_sum, GadgetError, GadgetName, GadgetSpec, RootedGraph};
use crate::graph::Graph;
use crate::residue::{path_residues, ResidueSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error("{set} is not one of {{0,1}}, {{1,2}}, {{2,3}}, {{0,3}}")]
    UnnamedSet { set: ResidueSet },
    #[error("attach point ({x}, {y}) is invalid for a graph on {n} vertices")]
    BadAttachPoint { x: usize, y: usize, n: usize },
    #[error("{kind} at ({x}, {y}): path residues {residues} {reason}")]
    Precondition { kind: StepKind, x: usize, y: usize, residues: ResidueSet, reason: String },
    #[error("{gadget} cannot be attached by R1")]
    NotAnR1Gadget { gadget: GadgetName },
    #[error("extremal graphs are only constructed for n >= 12 (got {0})")]
    OrderTooSmall(usize),
    #[error("the construction would exceed 64 vertices")]
    TooLarge,
}

/// The two-element residue sets `{0,1}`, `{1,2}`, `{2,3}`, `{0,3}`.
pub fn named_index(set: &ResidueSet) -> Option<usize> {
    (0..4).find(|&i| ResidueSet::consecutive_pair(i) == *set)
}

/// `{0,1} <-> {1,2}` and `{2,3} <-> {0,3}`.
pub fn matched(set: &ResidueSet) -> Result<ResidueSet, ConstructError> {
    let i = named_index(set).ok_or(ConstructError::UnnamedSet { set: *set })?;
    Ok(ResidueSet::consecutive_pair(i ^ 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StepKind {
    R1,
    R2,
    R3,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for StepKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "R1" => Ok(StepKind::R1),
            "R2" => Ok(StepKind::R2),
            "R3" => Ok(StepKind::R3),
            other => Err(format!("unknown step kind {other:?}")),
        }
    }
}

/// One construction step at the attach point `(x, y)`. For R1 the gadget
/// may be left open, in which case the smallest admissible one is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionStep {
    pub kind: StepKind,
    pub at: (usize, usize),
    pub gadget: Option<GadgetName>,
}

impl ConstructionStep {
    pub fn r1(x: usize, y: usize, gadget: Option<GadgetName>) -> Self {
        ConstructionStep { kind: StepKind::R1, at: (x, y), gadget }
    }

    pub fn r2(x: usize, y: usize) -> Self {
        ConstructionStep { kind: StepKind::R2, at: (x, y), gadget: None }
    }

    pub fn r3(x: usize, y: usize) -> Self {
        ConstructionStep { kind: StepKind::R3, at: (x, y), gadget: None }
    }
}

/// Gadgets R1 may attach, smallest first.
pub const R1_GADGETS: [GadgetName; 7] = [
    GadgetName::F3,
    GadgetName::K3,
    GadgetName::F4,
    GadgetName::F6,
    GadgetName::F7,
    GadgetName::F8,
    GadgetName::F9,
];

/// R1 gadgets whose type fits the set matched to some named set containing
/// `residues`.
pub fn admissible_r1_gadgets(residues: &ResidueSet) -> Vec<GadgetName> {
    R1_GADGETS
        .into_iter()
        .filter(|&name| {
            let ty = GadgetSpec::of(name).unwrap().declared_type;
            (0..4).any(|i| {
                let l = ResidueSet::consecutive_pair(i);
                residues.is_subset(&l) && ty.is_subset(&ResidueSet::consecutive_pair(i ^ 1))
            })
        })
        .collect()
}

/// The result of one step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepOutcome {
    pub graph: Graph,
    pub gap_delta: i64,
    /// The gadget actually attached.
    pub gadget: GadgetName,
}

/// Applies `step` to `g` after checking its precondition. The result keeps
/// the ids of `g`; new vertices are appended.
pub fn apply_step(g: &Graph, step: &ConstructionStep) -> Result<StepOutcome, ConstructError> {
    let (x, y) = step.at;
    let n = g.order();
    if x >= n || y >= n || x == y {
        return Err(ConstructError::BadAttachPoint { x, y, n });
    }
    let residues = path_residues(g, x, y, 4);
    let violation = |reason: &str| ConstructError::Precondition {
        kind: step.kind,
        x,
        y,
        residues,
        reason: reason.to_string(),
    };
    let (name, operand) = match step.kind {
        StepKind::R1 => {
            let admissible = admissible_r1_gadgets(&residues);
            let name = match step.gadget {
                Some(name) => {
                    if !R1_GADGETS.contains(&name) {
                        return Err(ConstructError::NotAnR1Gadget { gadget: name });
                    }
                    if !admissible.contains(&name) {
                        return Err(violation(&format!(
                            "admit no named set whose matched set contains the type of {name}"
                        )));
                    }
                    name
                }
                None => *admissible
                    .first()
                    .ok_or_else(|| violation("are not contained in any named set"))?,
            };
            (name, gadget(name)?.rooted)
        }
        StepKind::R2 => {
            if !residues.is_subset(&ResidueSet::consecutive_pair(1)) {
                return Err(violation("are not contained in {1,2}"));
            }
            if !g.has_edge(x, y) {
                return Err(violation("are fine but x and y are not adjacent, so (F6; b, c) would not share its root edge"));
            }
            let f6 = gadget(GadgetName::F6)?;
            let (b, c) = (f6.root("b")?, f6.root("c")?);
            (GadgetName::F6, f6.rooted.rerooted(b, c)?)
        }
        StepKind::R3 => {
            if residues.contains(1) {
                return Err(violation("contain 1"));
            }
            (GadgetName::Path(4), gadget(GadgetName::Path(4))?.rooted)
        }
    };
    let base = RootedGraph::new(g.clone(), x, y)?;
    let sum = parallel_sum(&base, &operand)?;
    let gap_delta = gap(&sum.graph) - gap(g);
    Ok(StepOutcome { graph: sum.graph, gap_delta, gadget: name })
}

/// One entry of a gap trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    /// `start`, `R1`, `R2`, `R3` or `sum`.
    pub step: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gadget: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<(usize, usize)>,
    pub gap: i64,
    pub graph6: String,
}

impl TraceEntry {
    pub fn new(step: &str, gadget: Option<String>, at: Option<(usize, usize)>, g: &Graph) -> Self {
        TraceEntry { step: step.to_string(), gadget, at, gap: gap(g), graph6: g.to_string() }
    }
}

/// A graph together with the steps that built it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    pub trace: Vec<TraceEntry>,
}

impl Construction {
    pub fn start(g: Graph) -> Self {
        let trace = vec![TraceEntry::new("start", None, None, &g)];
        Construction { graph: g, trace }
    }

    pub fn apply(&mut self, step: &ConstructionStep) -> Result<i64, ConstructError> {
        let out = apply_step(&self.graph, step)?;
        self.graph = out.graph;
        self.trace.push(TraceEntry::new(
            &step.kind.to_string(),
            Some(out.gadget.to_string()),
            Some(step.at),
            &self.graph,
        ));
        Ok(out.gap_delta)
    }

    pub fn gaps(&self) -> Vec<i64> {
        self.trace.iter().map(|t| t.gap).collect()
    }

    /// Gap never increases along the trace.
    pub fn is_gap_reducing(&self) -> bool {
        self.trace.windows(2).all(|w| w[0].gap >= w[1].gap)
    }

    /// Gap strictly decreases along the trace.
    pub fn is_strict(&self) -> bool {
        self.trace.windows(2).all(|w| w[0].gap > w[1].gap)
    }
}

/// Exact gap change for the gadgets with fixed deltas, and the upper bound
/// for those whose delta depends on a shared root edge.
pub fn expected_delta(kind: StepKind, gadget: GadgetName) -> (Option<i64>, i64) {
    match (kind, gadget) {
        (StepKind::R1, GadgetName::F3) => (Some(-1), -1),
        (StepKind::R1, GadgetName::F4) | (StepKind::R1, GadgetName::F6) => (Some(-2), -2),
        (StepKind::R1, GadgetName::F9) => (Some(-3), -3),
        (StepKind::R1, GadgetName::F7) | (StepKind::R1, GadgetName::K3) => (None, -1),
        (StepKind::R1, GadgetName::F8) => (None, -2),
        _ => (Some(0), 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_biconnected;
    use crate::residue::has_mod_cycle;

    fn set(r: &[usize]) -> ResidueSet {
        ResidueSet::from_residues(4, r.iter().copied())
    }

    #[test]
    fn matching_is_an_involution_and_sound() {
        assert_eq!(matched(&set(&[0, 1])).unwrap(), set(&[1, 2]));
        assert_eq!(matched(&set(&[2, 3])).unwrap(), set(&[0, 3]));
        for i in 0..4 {
            let l = ResidueSet::consecutive_pair(i);
            let m = matched(&l).unwrap();
            assert_eq!(matched(&m).unwrap(), l);
            assert!(!l.sumset(&m).contains(0));
        }
        assert!(matches!(matched(&set(&[0, 2])), Err(ConstructError::UnnamedSet { .. })));
    }

    #[test]
    fn r1_with_k3_on_c5() {
        let mut c = Construction::start(Graph::cycle(5));
        let d = c.apply(&ConstructionStep::r1(0, 1, Some(GadgetName::K3))).unwrap();
        assert_eq!(d, -1);
        assert_eq!(c.gaps(), vec![4, 3]);
        assert!(c.is_strict());
    }

    #[test]
    fn default_r1_gadget_is_smallest() {
        // (0, 1) on C5 has residues {0,1}; the matched set {1,2} admits F3 and K3
        let out = apply_step(&Graph::cycle(5), &ConstructionStep::r1(0, 1, None)).unwrap();
        assert_eq!(out.gadget, GadgetName::F3);
        assert_eq!(out.gap_delta, -1);
    }

    #[test]
    fn preconditions_are_checked() {
        let c5 = Graph::cycle(5);
        // (0, 2) on C5: residues {2,3}, matched {0,3} admits only F6
        let e = apply_step(&c5, &ConstructionStep::r1(0, 2, Some(GadgetName::K3))).unwrap_err();
        assert!(matches!(e, ConstructError::Precondition { residues, .. } if residues == set(&[2, 3])));
        assert!(apply_step(&c5, &ConstructionStep::r1(0, 2, Some(GadgetName::F6))).is_ok());
        // R3 needs no 1 (mod 4) path; adjacent vertices have one
        assert!(apply_step(&c5, &ConstructionStep::r3(0, 1)).is_err());
        assert!(apply_step(&c5, &ConstructionStep::r3(0, 2)).is_ok());
        // R2 on K3 edge: residues {1,2}
        let out = apply_step(&Graph::complete(3), &ConstructionStep::r2(0, 1)).unwrap();
        assert_eq!(out.gap_delta, 0);
        assert!(apply_step(&c5, &ConstructionStep::r2(0, 1)).is_err());
        assert!(matches!(
            apply_step(&c5, &ConstructionStep::r3(0, 0)),
            Err(ConstructError::BadAttachPoint { .. })
        ));
        assert!(matches!(
            apply_step(&c5, &ConstructionStep::r1(0, 1, Some(GadgetName::Path(4)))),
            Err(ConstructError::NotAnR1Gadget { .. })
        ));
    }

    #[test]
    fn r3_adds_two_vertices_three_edges() {
        let out = apply_step(&Graph::cycle(5), &ConstructionStep::r3(0, 2)).unwrap();
        assert_eq!((out.graph.order(), out.graph.size()), (7, 8));
        assert_eq!(out.gap_delta, 0);
        assert!(has_mod_cycle(&out.graph, 0, 4).is_none());
        assert!(is_biconnected(&out.graph).unwrap());
    }

    #[test]
    fn trace_json() {
        let mut c = Construction::start(Graph::complete(3));
        c.apply(&ConstructionStep::r1(0, 1, Some(GadgetName::F7))).unwrap();
        let json = serde_json::to_value(&c.trace).unwrap();
        assert_eq!(json[0]["step"], "start");
        assert!(json[0].get("gadget").is_none());
        assert_eq!(json[1]["step"], "R1");
        assert_eq!(json[1]["gadget"], "F7");
        assert_eq!(json[1]["at"], serde_json::json!([0, 1]));
        assert_eq!(json[1]["gap"], 1);
    }
}
