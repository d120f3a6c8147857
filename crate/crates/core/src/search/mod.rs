//! Exhaustive search over graphs with no cycle of length divisible by 4.

mod audit;
mod enumerate;
mod prop;
mod report;

pub use audit::{lemma_audit, AuditCheck, Violation, AUDIT_MAX_ORDER};
pub use enumerate::{enumerate_family, enumerate_modfree, generate_levels, Family};
pub use prop::{prop_bound, prop_max_order, prop_tight_gadget, verify_prop_gadget, PROP_MIN_ORDER};
pub use report::{edge_bound, max_edges, ExtremalGraph, IsolatedVertices, SearchReport, Task};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Largest order supported by the exhaustive searches.
pub const MAX_SEARCH_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    All,
    Connected,
    Biconnected,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::All => "all",
            GraphClass::Connected => "connected",
            GraphClass::Biconnected => "biconnected",
        })
    }
}

impl FromStr for GraphClass {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, SearchError> {
        match s {
            "all" => Ok(GraphClass::All),
            "connected" => Ok(GraphClass::Connected),
            "biconnected" | "2-connected" => Ok(GraphClass::Biconnected),
            other => Err(SearchError::UnknownClass(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("unknown graph class {0:?} (expected all, connected or biconnected)")]
    UnknownClass(String),
    #[error("{0} is not one of the named pairs {{0,1}}, {{1,2}}, {{2,3}}, {{0,3}}")]
    NotNamedPair(crate::residue::ResidueSet),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("could not start worker pool: {0}")]
    Workers(String),
}
