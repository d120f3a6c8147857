use std::collections::HashSet;

use crate::graph::{canonical_form, Graph};
use crate::residue::path_residues;

use super::{admissible_r1_gadgets, apply_step, Construction, ConstructionStep, StepKind};

/// Depth-first search for a sequence of steps of the given kinds from
/// `start` whose gaps are exactly `gaps` (including the start). Attach
/// points range over ordered vertex pairs; states are deduplicated by
/// canonical form at each depth. Returns the first sequence found in a
/// fixed order.
pub fn find_gap_profile(start: &Graph, kinds: &[StepKind], gaps: &[i64]) -> Option<Construction> {
    assert_eq!(gaps.len(), kinds.len() + 1, "one gap per graph in the sequence");
    let first = Construction::start(start.clone());
    if first.trace[0].gap != gaps[0] {
        return None;
    }
    let mut seen: Vec<HashSet<Graph>> = vec![HashSet::new(); kinds.len() + 1];
    search(first, kinds, gaps, &mut seen)
}

fn candidate_steps(g: &Graph, kind: StepKind) -> Vec<ConstructionStep> {
    let n = g.order();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            match kind {
                StepKind::R1 => {
                    let pr = path_residues(g, x, y, 4);
                    for name in admissible_r1_gadgets(&pr) {
                        out.push(ConstructionStep::r1(x, y, Some(name)));
                    }
                }
                StepKind::R2 => out.push(ConstructionStep::r2(x, y)),
                StepKind::R3 if x < y => out.push(ConstructionStep::r3(x, y)),
                StepKind::R3 => {}
            }
        }
    }
    out
}

fn search(
    current: Construction,
    kinds: &[StepKind],
    gaps: &[i64],
    seen: &mut [HashSet<Graph>],
) -> Option<Construction> {
    let depth = current.trace.len() - 1;
    if depth == kinds.len() {
        return Some(current);
    }
    for step in candidate_steps(&current.graph, kinds[depth]) {
        let Ok(out) = apply_step(&current.graph, &step) else {
            continue;
        };
        let target = gaps[depth + 1];
        if current.trace[depth].gap + out.gap_delta != target {
            continue;
        }
        if !seen[depth + 1].insert(canonical_form(&out.graph)) {
            continue;
        }
        let mut next = current.clone();
        next.apply(&step).expect("step was just validated");
        if let Some(found) = search(next, kinds, gaps, seen) {
            return Some(found);
        }
    }
    None
}
