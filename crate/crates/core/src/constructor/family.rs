use crate::gadgets::{gadget, GadgetName};
use crate::graph::{Graph, MAX_VERTICES};
use crate::residue::{cycle_residues, path_residues, ResidueSet};

use super::{Construction, ConstructError, ConstructionStep, ResidueCertificate};

/// A member of one of the extremal families with the data needed to check
/// it without an exhaustive cycle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub construction: Construction,
    /// Where the repeated `P4` sums are attached.
    pub attach: (usize, usize),
    /// Cycle residues of the base graph plus the `P4` chain.
    pub certificate: ResidueCertificate,
}

impl FamilyGraph {
    pub fn graph(&self) -> &Graph {
        &self.construction.graph
    }
}

fn with_p4_chain(
    base: Construction,
    attach: (usize, usize),
    k: usize,
) -> Result<FamilyGraph, ConstructError> {
    if base.graph.order() + 2 * k > MAX_VERTICES {
        return Err(ConstructError::TooLarge);
    }
    let (x, y) = attach;
    let mut certificate =
        ResidueCertificate::new(cycle_residues(&base.graph, 4), path_residues(&base.graph, x, y, 4));
    let mut construction = base;
    let p4_paths = ResidueSet::from_residues(4, [3]);
    for _ in 0..k {
        construction.apply(&ConstructionStep::r3(x, y))?;
        certificate.push("P4", &ResidueSet::empty(4), &p4_paths);
    }
    Ok(FamilyGraph { construction, attach, certificate })
}

/// `F6` with `F4` attached at its roots, then `k` copies of `P4` at the same
/// roots: `8 + 2k` vertices, `11 + 3k` edges.
pub fn extremal_family_g(k: usize) -> Result<FamilyGraph, ConstructError> {
    let f6 = gadget(GadgetName::F6)?;
    let (a, b) = f6.rooted.roots;
    let mut c = Construction::start(f6.rooted.graph);
    c.apply(&ConstructionStep::r1(a, b, Some(GadgetName::F4)))?;
    with_p4_chain(c, (a, b), k)
}

/// `K3` with `F7` attached at two of its edges, then `k` copies of `P4` at
/// the first pair without a path of length 1 (mod 4): `13 + 2k` vertices,
/// `19 + 3k` edges.
pub fn extremal_family_h(k: usize) -> Result<FamilyGraph, ConstructError> {
    let mut c = Construction::start(Graph::complete(3));
    c.apply(&ConstructionStep::r1(0, 1, Some(GadgetName::F7)))?;
    c.apply(&ConstructionStep::r1(1, 2, Some(GadgetName::F7)))?;
    let n = c.graph.order();
    let attach = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| !path_residues(&c.graph, x, y, 4).contains(1))
        .expect("the 13-vertex base has a pair without 1 (mod 4) paths");
    with_p4_chain(c, attach, k)
}

/// A 2-connected `n`-vertex graph with `floor((3n - 1) / 2)` edges and no
/// cycle of length divisible by 4: the first family for even `n`, the
/// second for odd `n`.
pub fn extremal_for_n(n: usize) -> Result<FamilyGraph, ConstructError> {
    if n < 12 {
        return Err(ConstructError::OrderTooSmall(n));
    }
    if n % 2 == 0 {
        extremal_family_g((n - 8) / 2)
    } else {
        extremal_family_h((n - 13) / 2)
    }
}
