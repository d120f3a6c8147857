use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::graph::{bit, Graph};

/// A path as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
}

impl PathWitness {
    pub fn new(vertices: Vec<usize>) -> Self {
        PathWitness { vertices }
    }

    /// Length in edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn vertex_mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | bit(v))
    }

    /// Vertices other than the two ends.
    pub fn interior_mask(&self) -> u64 {
        match self.vertices.len() {
            0..=2 => 0,
            k => self.vertices[1..k - 1].iter().fold(0, |m, &v| m | bit(v)),
        }
    }

    /// Nonempty, distinct vertices, consecutive ones adjacent.
    pub fn validate(&self, g: &Graph) -> bool {
        !self.vertices.is_empty()
            && self.vertices.iter().all(|&v| v < g.order())
            && self.vertex_mask().count_ones() as usize == self.vertices.len()
            && self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

impl Serialize for PathWitness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PathWitness", 2)?;
        st.serialize_field("kind", "path")?;
        st.serialize_field("vertices", &self.vertices)?;
        st.end()
    }
}

/// A cycle as a closed vertex sequence (first vertex repeated at the end).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
}

impl CycleWitness {
    /// From the open sequence `v0 .. v_{m-1}`; closes it.
    pub fn from_open(open: &[usize]) -> Self {
        let mut vertices = open.to_vec();
        vertices.push(open[0]);
        CycleWitness { vertices }
    }

    /// Length in edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The distinct vertices, in cyclic order.
    pub fn open(&self) -> &[usize] {
        &self.vertices[..self.len()]
    }

    pub fn vertex_mask(&self) -> u64 {
        self.open().iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    pub fn validate(&self, g: &Graph) -> bool {
        let m = self.len();
        m >= 3
            && self.vertices[0] == self.vertices[m]
            && self.vertices.iter().all(|&v| v < g.order())
            && self.vertex_mask().count_ones() as usize == m
            && self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

impl Serialize for CycleWitness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CycleWitness", 2)?;
        st.serialize_field("kind", "cycle")?;
        st.serialize_field("vertices", &self.vertices)?;
        st.end()
    }
}

/// Three internally disjoint paths between `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaWitness {
    pub x: usize,
    pub y: usize,
    pub paths: [PathWitness; 3],
}

impl ThetaWitness {
    pub fn vertices(&self) -> Vec<usize> {
        let mask = self.paths.iter().fold(0u64, |m, p| m | p.vertex_mask());
        crate::graph::Bits(mask).collect()
    }

    pub fn lengths(&self) -> [usize; 3] {
        [self.paths[0].len(), self.paths[1].len(), self.paths[2].len()]
    }

    pub fn validate(&self, g: &Graph) -> bool {
        let ends_ok = self.x != self.y
            && self.paths.iter().all(|p| {
                p.validate(g) && !p.is_empty() && p.start() == self.x && p.end() == self.y
            });
        if !ends_ok {
            return false;
        }
        let [a, b, c] = &self.paths;
        let disjoint = a.interior_mask() & b.interior_mask() == 0
            && a.interior_mask() & c.interior_mask() == 0
            && b.interior_mask() & c.interior_mask() == 0;
        disjoint && self.paths.iter().filter(|p| p.len() == 1).count() <= 1
    }
}

impl Serialize for ThetaWitness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let paths: Vec<&Vec<usize>> = self.paths.iter().map(|p| &p.vertices).collect();
        let mut st = s.serialize_struct("ThetaWitness", 5)?;
        st.serialize_field("kind", "theta")?;
        st.serialize_field("vertices", &self.vertices())?;
        st.serialize_field("x", &self.x)?;
        st.serialize_field("y", &self.y)?;
        st.serialize_field("paths", &paths)?;
        st.end()
    }
}
