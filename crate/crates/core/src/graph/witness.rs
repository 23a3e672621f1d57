// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Digraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("vertex {0} is out of range")]
    OutOfRange(Vertex),
    #[error("vertex {0} is repeated")]
    Repeated(Vertex),
    #[error("missing arc {0}->{1}")]
    MissingArc(Vertex, Vertex),
    #[error("a cycle needs at least two vertices")]
    TooShort,
}

fn check_distinct(d: &Digraph, vertices: &[Vertex]) -> Result<(), WitnessError> {
    let mut seen = vec![false; d.vertex_count()];
    for &v in vertices {
        if v >= d.vertex_count() {
            return Err(WitnessError::OutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(WitnessError::Repeated(v));
        }
    }
    Ok(())
}

/// Directed simple path given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathWitness {
    pub vertices: Vec<Vertex>,
}

impl PathWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        PathWitness { vertices }
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    pub fn check(&self, d: &Digraph) -> Result<(), WitnessError> {
        check_distinct(d, &self.vertices)?;
        for pair in self.vertices.windows(2) {
            if !d.has_arc(pair[0], pair[1]) {
                return Err(WitnessError::MissingArc(pair[0], pair[1]));
            }
        }
        Ok(())
    }
}

/// Directed cycle; the closing arc runs from the last vertex to the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleWitness {
    pub vertices: Vec<Vertex>,
}

impl CycleWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        CycleWitness { vertices }
    }

    /// Number of arcs, equal to the number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn check(&self, d: &Digraph) -> Result<(), WitnessError> {
        if self.vertices.len() < 2 {
            return Err(WitnessError::TooShort);
        }
        check_distinct(d, &self.vertices)?;
        let n = self.vertices.len();
        for i in 0..n {
            let (u, v) = (self.vertices[i], self.vertices[(i + 1) % n]);
            if !d.has_arc(u, v) {
                return Err(WitnessError::MissingArc(u, v));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_checks() {
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(PathWitness::new(vec![0, 1, 2]).check(&d).is_ok());
        assert_eq!(PathWitness::new(vec![0, 1, 2]).len(), 2);
        assert_eq!(PathWitness::new(vec![1]).len(), 0);
        assert_eq!(
            PathWitness::new(vec![0, 2]).check(&d),
            Err(WitnessError::MissingArc(0, 2))
        );
        assert_eq!(
            PathWitness::new(vec![0, 1, 2, 0]).check(&d),
            Err(WitnessError::Repeated(0))
        );
        assert_eq!(
            PathWitness::new(vec![7]).check(&d),
            Err(WitnessError::OutOfRange(7))
        );
    }

    #[test]
    fn cycle_checks() {
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        assert!(CycleWitness::new(vec![1, 2, 0]).check(&d).is_ok());
        assert!(CycleWitness::new(vec![0, 1]).check(&d).is_ok());
        assert_eq!(
            CycleWitness::new(vec![0]).check(&d),
            Err(WitnessError::TooShort)
        );
        assert_eq!(
            CycleWitness::new(vec![0, 2, 1]).check(&d),
            Err(WitnessError::MissingArc(0, 2))
        );
    }
}
