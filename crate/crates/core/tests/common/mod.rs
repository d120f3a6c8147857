use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use modcycle::constructor::{admissible_r1_gadgets, apply_step, expected_delta, ConstructionStep, StepKind};
use modcycle::gadgets::GadgetName;
use modcycle::graph::Graph;
use modcycle::residue::{has_mod_cycle, path_residues};
use modcycle::search::{enumerate_modfree, GraphClass};

pub struct GapRun {
    pub applied: usize,
    pub per_step: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

/// Applies `target` random valid steps to random graphs (small connected
/// members of the family, then earlier results) and checks each gap change
/// against its exact value or bound.
pub fn random_gap_run(seed: u64, target: usize) -> GapRun {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut pool: Vec<Graph> =
        (4..=7).flat_map(|n| enumerate_modfree(n, GraphClass::Connected, None).unwrap()).collect();
    let mut run = GapRun { applied: 0, per_step: BTreeMap::new(), failures: Vec::new() };
    let mut attempts = 0;
    while run.applied < target && attempts < 200_000 {
        attempts += 1;
        let g = pool.choose(&mut rng).unwrap().clone();
        let n = g.order();
        if n > 40 {
            continue;
        }
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if x == y {
            continue;
        }
        let step = match rng.gen_range(0..3) {
            0 => {
                let options = admissible_r1_gadgets(&path_residues(&g, x, y, 4));
                let Some(&name) = options.choose(&mut rng) else { continue };
                ConstructionStep::r1(x, y, Some(name))
            }
            1 => ConstructionStep::r2(x, y),
            _ => ConstructionStep::r3(x, y),
        };
        let Ok(out) = apply_step(&g, &step) else { continue };
        let (exact, bound) = expected_delta(step.kind, out.gadget);
        let ok = match exact {
            Some(d) => out.gap_delta == d,
            None => out.gap_delta <= bound,
        } && (step.kind == StepKind::R1 || out.gap_delta == 0);
        if !ok {
            run.failures.push(format!("{step:?} on {g}: change {}", out.gap_delta));
        }
        if has_mod_cycle(&out.graph, 0, 4).is_some() {
            run.failures.push(format!("{step:?} on {g}: result has a 0 mod 4 cycle"));
        }
        let key = match step.kind {
            StepKind::R1 => format!("R1/{}", out.gadget),
            other => other.to_string(),
        };
        *run.per_step.entry(key).or_default() += 1;
        pool.push(out.graph);
        run.applied += 1;
    }
    run
}

#[allow(dead_code)]
pub const R1_NAMES: [GadgetName; 7] = [
    GadgetName::F3,
    GadgetName::F4,
    GadgetName::F6,
    GadgetName::F7,
    GadgetName::F8,
    GadgetName::F9,
    GadgetName::K3,
];
