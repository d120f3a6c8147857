use serde::Serialize;

use crate::residue::ResidueSet;

/// Residues of cycles that a parallel sum at the roots can contain: a cycle
/// of the sum lies in one operand or joins a root path of each.
pub fn sum_law_bound(
    cycles_a: &ResidueSet,
    cycles_b: &ResidueSet,
    paths_a: &ResidueSet,
    paths_b: &ResidueSet,
) -> ResidueSet {
    cycles_a.union(cycles_b).union(&paths_a.sumset(paths_b))
}

/// One parallel sum at the tracked roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateStep {
    pub operand: String,
    /// Upper bound on the cycle residues after this sum.
    pub cycle_bound: ResidueSet,
    /// Exact residues of the root-to-root paths after this sum.
    pub root_paths: ResidueSet,
}

/// Tracks cycle residues through a chain of parallel sums at one fixed
/// root pair, starting from exactly computed residues of a base graph.
///
/// Root paths of a sum are exactly the root paths of the two operands,
/// because a path leaving one operand can only re-enter through a root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueCertificate {
    pub base_cycles: ResidueSet,
    pub base_root_paths: ResidueSet,
    pub steps: Vec<CertificateStep>,
}

impl ResidueCertificate {
    pub fn new(base_cycles: ResidueSet, base_root_paths: ResidueSet) -> Self {
        ResidueCertificate { base_cycles, base_root_paths, steps: Vec::new() }
    }

    pub fn cycle_bound(&self) -> ResidueSet {
        self.steps.last().map_or(self.base_cycles, |s| s.cycle_bound)
    }

    pub fn root_paths(&self) -> ResidueSet {
        self.steps.last().map_or(self.base_root_paths, |s| s.root_paths)
    }

    /// Records a sum with an operand of known cycle and root-path residues.
    pub fn push(&mut self, operand: &str, cycles: &ResidueSet, paths: &ResidueSet) {
        let cycle_bound = sum_law_bound(&self.cycle_bound(), cycles, &self.root_paths(), paths);
        let root_paths = self.root_paths().union(paths);
        self.steps.push(CertificateStep { operand: operand.to_string(), cycle_bound, root_paths });
    }

    /// Whether the bound rules out cycles of length `r` modulo the
    /// certificate's modulus.
    pub fn excludes(&self, r: usize) -> bool {
        !self.cycle_bound().contains(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_chain_keeps_zero_out() {
        let set = |r: &[usize]| ResidueSet::from_residues(4, r.iter().copied());
        let mut c = ResidueCertificate::new(set(&[2, 3]), set(&[0, 2, 3]));
        for _ in 0..5 {
            c.push("P4", &set(&[]), &set(&[3]));
        }
        assert!(c.excludes(0));
        assert_eq!(c.root_paths(), set(&[0, 2, 3]));
        // a root path of length 1 would be fatal
        let mut bad = ResidueCertificate::new(set(&[3]), set(&[1]));
        bad.push("P4", &set(&[]), &set(&[3]));
        assert!(!bad.excludes(0));
    }
}
