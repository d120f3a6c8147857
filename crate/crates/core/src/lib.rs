//! Graphs without cycles of length divisible by a modulus: residue spectra,
//! rooted gadgets, extremal constructions and exhaustive search.

pub mod graph;
pub mod residue;
pub mod search;
pub mod gadgets;
pub mod constructor;
pub mod dsl;
