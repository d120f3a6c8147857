//! Exact modular length analysis: cycle and path residue spectra,
//! vertex-disjoint path families and even theta subgraphs.

mod menger;
mod spectrum;
mod theta;
mod witness;

pub use menger::{max_disjoint_paths, DisjointPaths};
pub use spectrum::{
    cycle_residues, cycle_spectrum, for_each_cycle, has_mod_cycle, is_l_type, pair_residues,
    path_residues, path_spectrum, CycleSpectrum, PairResidues, PathSpectrum,
};
pub use theta::find_even_theta;
pub use witness::{CycleWitness, PathWitness, ThetaWitness};

use std::fmt;

use serde::{Serialize, Serializer};

/// Largest supported modulus; members live in a `u64`.
pub const MAX_MODULUS: usize = 64;

/// A subset of the integers modulo `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueSet {
    modulus: u8,
    members: u64,
}

impl ResidueSet {
    pub fn empty(k: usize) -> Self {
        assert!((2..=MAX_MODULUS).contains(&k), "modulus {k} outside 2..=64");
        ResidueSet { modulus: k as u8, members: 0 }
    }

    /// Every residue modulo `k`.
    pub fn full(k: usize) -> Self {
        let mut s = ResidueSet::empty(k);
        s.members = crate::graph::low_mask(k);
        s
    }

    /// Residues are reduced modulo `k`.
    pub fn from_residues(k: usize, residues: impl IntoIterator<Item = usize>) -> Self {
        let mut s = ResidueSet::empty(k);
        for r in residues {
            s.insert(r);
        }
        s
    }

    /// `{i, i+1} mod 4`, the two-element sets indexed so that set `2j`
    /// is paired with set `2j+1`: `{0,1}`, `{1,2}`, `{2,3}`, `{0,3}`.
    pub fn consecutive_pair(i: usize) -> Self {
        assert!(i < 4, "pair index {i} outside 0..4");
        ResidueSet::from_residues(4, [i, i + 1])
    }

    pub fn from_mask(k: usize, mask: u64) -> Self {
        let mut s = ResidueSet::empty(k);
        s.members = mask & crate::graph::low_mask(k);
        s
    }

    #[inline]
    pub fn modulus(&self) -> usize {
        self.modulus as usize
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.members
    }

    #[inline]
    pub fn insert(&mut self, r: usize) {
        self.members |= 1u64 << (r % self.modulus());
    }

    #[inline]
    pub fn contains(&self, r: usize) -> bool {
        self.members >> (r % self.modulus()) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.modulus()
    }

    pub fn is_subset(&self, other: &ResidueSet) -> bool {
        self.same_modulus(other);
        self.members & !other.members == 0
    }

    pub fn union(&self, other: &ResidueSet) -> ResidueSet {
        self.same_modulus(other);
        ResidueSet { modulus: self.modulus, members: self.members | other.members }
    }

    pub fn intersection(&self, other: &ResidueSet) -> ResidueSet {
        self.same_modulus(other);
        ResidueSet { modulus: self.modulus, members: self.members & other.members }
    }

    /// `{(a + b) mod k : a in self, b in other}`.
    pub fn sumset(&self, other: &ResidueSet) -> ResidueSet {
        self.same_modulus(other);
        let mut out = ResidueSet::empty(self.modulus());
        for b in other.iter() {
            out.members |= self.shifted(b).members;
        }
        out
    }

    /// `{(a + t) mod k : a in self}`.
    pub fn shifted(&self, t: usize) -> ResidueSet {
        let k = self.modulus();
        let t = t % k;
        let mask = crate::graph::low_mask(k);
        let rotated = if t == 0 {
            self.members
        } else {
            ((self.members << t) | (self.members >> (k - t))) & mask
        };
        ResidueSet { modulus: self.modulus, members: rotated }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        crate::graph::Bits(self.members)
    }

    fn same_modulus(&self, other: &ResidueSet) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod {})", self.modulus)
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, r) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

/// Serialised as the sorted member list.
impl Serialize for ResidueSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
