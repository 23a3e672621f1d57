// SPDX-License-Identifier: Apache-2.0

//! Directed-graph carrier and the primitives every other module builds on.

mod girth;
mod scc;
mod witness;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use girth::{girth, girth_with, Girth};
pub use scc::strong_components;
pub use witness::{CycleWitness, PathWitness, WitnessError};

/// Dense vertex id in `[0, vertex_count)`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid digraph: {}", format_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("degree profile is undefined for the empty digraph")]
    Empty,
    #[error("vertex {vertex} is out of range for a digraph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("vertex {vertex} has out-degree {degree}, fewer than the required {required}")]
    InsufficientOutDegree {
        vertex: Vertex,
        degree: usize,
        required: usize,
    },
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// A single broken digraph invariant together with the offending arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    SelfLoop { tail: Vertex, head: Vertex },
    DuplicateArc { tail: Vertex, head: Vertex },
    VertexOutOfRange { tail: Vertex, head: Vertex },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::SelfLoop { tail, head } => write!(f, "self-loop {tail}->{head}"),
            Violation::DuplicateArc { tail, head } => write!(f, "duplicate arc {tail}->{head}"),
            Violation::VertexOutOfRange { tail, head } => {
                write!(f, "arc {tail}->{head} references a vertex out of range")
            }
        }
    }
}

/// Checks a raw arc list against the digraph invariants.
///
/// Returns every violation, in input order. An empty vector means the list
/// describes a valid [`Digraph`].
pub fn validate(vertex_count: usize, arcs: &[(Vertex, Vertex)]) -> Vec<Violation> {
    let mut seen = BTreeSet::new();
    let mut violations = Vec::new();
    for &(tail, head) in arcs {
        if tail >= vertex_count || head >= vertex_count {
            violations.push(Violation::VertexOutOfRange { tail, head });
        } else if tail == head {
            violations.push(Violation::SelfLoop { tail, head });
        } else if !seen.insert((tail, head)) {
            violations.push(Violation::DuplicateArc { tail, head });
        }
    }
    violations
}

/// Loopless directed graph without parallel arcs.
///
/// Adjacency lists are kept sorted by vertex id, which every deterministic
/// tie-break in the crate relies on. Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ArcList", into = "ArcList")]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    arc_count: usize,
}

/// Serialized form of a digraph: `{"n": .., "arcs": [[u, v], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcList {
    pub n: usize,
    pub arcs: Vec<[Vertex; 2]>,
}

impl TryFrom<ArcList> for Digraph {
    type Error = GraphError;

    fn try_from(list: ArcList) -> Result<Self, Self::Error> {
        Digraph::new(list.n, list.arcs.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<Digraph> for ArcList {
    fn from(d: Digraph) -> Self {
        ArcList {
            n: d.vertex_count(),
            arcs: d.arcs().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.vertex_count())
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

impl Digraph {
    pub fn new(
        vertex_count: usize,
        arcs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let arcs: Vec<_> = arcs.into_iter().collect();
        let violations = validate(vertex_count, &arcs);
        if !violations.is_empty() {
            return Err(GraphError::Invalid(violations));
        }
        Ok(Self::from_valid_arcs(vertex_count, arcs))
    }

    /// Builds from arcs already known to be in range, loop-free and unique.
    pub(crate) fn from_valid_arcs(vertex_count: usize, arcs: Vec<(Vertex, Vertex)>) -> Self {
        let mut out = vec![Vec::new(); vertex_count];
        let mut inn = vec![Vec::new(); vertex_count];
        for &(u, v) in &arcs {
            debug_assert!(u != v && u < vertex_count && v < vertex_count);
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        Digraph {
            out,
            inn,
            arc_count: arcs.len(),
        }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::from_valid_arcs(vertex_count, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    pub fn out_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.inn[v].len()
    }

    pub fn has_arc(&self, tail: Vertex, head: Vertex) -> bool {
        tail < self.vertex_count() && self.out[tail].binary_search(&head).is_ok()
    }

    /// All arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, heads)| heads.iter().map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// True iff no pair of opposite arcs `(x, y), (y, x)` is present.
    pub fn is_oriented(&self) -> bool {
        self.arcs().all(|(u, v)| u > v || !self.has_arc(v, u))
    }

    pub fn min_out_degree(&self) -> Option<usize> {
        self.out.iter().map(Vec::len).min()
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile, GraphError> {
        if self.vertex_count() == 0 {
            return Err(GraphError::Empty);
        }
        let outs = self.out.iter().map(Vec::len);
        let ins = self.inn.iter().map(Vec::len);
        Ok(DegreeProfile {
            min_out: outs.clone().min().unwrap_or(0),
            max_out: outs.max().unwrap_or(0),
            min_in: ins.clone().min().unwrap_or(0),
            max_in: ins.max().unwrap_or(0),
        })
    }

    /// Number of out-neighbours of `v` inside `members`.
    pub fn out_degree_into(&self, v: Vertex, members: &[bool]) -> usize {
        self.out[v].iter().filter(|&&w| members[w]).count()
    }

    /// Induced subgraph on `subset`, relabelled to `[0, |subset|)` in
    /// ascending order of original id.
    ///
    /// Returns the subgraph and the table mapping new ids to original ids.
    pub fn induced_subgraph(
        &self,
        subset: &[Vertex],
    ) -> Result<(Digraph, Vec<Vertex>), GraphError> {
        for &v in subset {
            self.check_vertex(v)?;
        }
        let mut originals: Vec<Vertex> = subset.to_vec();
        originals.sort_unstable();
        originals.dedup();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in originals.iter().enumerate() {
            local[v] = i;
        }
        let arcs = originals
            .iter()
            .flat_map(|&u| {
                let local = &local;
                self.out[u]
                    .iter()
                    .filter(move |&&w| local[w] != usize::MAX)
                    .map(move |&w| (local[u], local[w]))
            })
            .collect();
        Ok((Digraph::from_valid_arcs(originals.len(), arcs), originals))
    }

    /// Induced subgraph of a strong component in which every vertex keeps at
    /// least `min_out` out-neighbours.
    ///
    /// Among qualifying components the one containing the smallest vertex id
    /// wins. Returns `None` when no component qualifies.
    pub fn min_outdeg_strong_subgraph(&self, min_out: usize) -> Option<(Digraph, Vec<Vertex>)> {
        let mut members = vec![false; self.vertex_count()];
        let mut best: Option<Vec<Vertex>> = None;
        for component in strong_components(self) {
            for &v in &component {
                members[v] = true;
            }
            let qualifies = component
                .iter()
                .all(|&v| self.out_degree_into(v, &members) >= min_out);
            for &v in &component {
                members[v] = false;
            }
            if qualifies {
                let smallest = component.iter().min().copied();
                let current = best.as_ref().and_then(|c| c.iter().min().copied());
                if current.is_none() || smallest < current {
                    best = Some(component);
                }
            }
        }
        best.map(|c| {
            self.induced_subgraph(&c)
                .expect("component ids are in range")
        })
    }

    /// Keeps, per vertex, the `delta` out-arcs with the smallest head ids.
    pub fn prune_to_exact_outdegree(&self, delta: usize) -> Result<Digraph, GraphError> {
        if let Some(v) = self.vertices().find(|&v| self.out_degree(v) < delta) {
            return Err(GraphError::InsufficientOutDegree {
                vertex: v,
                degree: self.out_degree(v),
                required: delta,
            });
        }
        let arcs = self
            .out
            .iter()
            .enumerate()
            .flat_map(|(u, heads)| heads[..delta].iter().map(move |&v| (u, v)))
            .collect();
        Ok(Digraph::from_valid_arcs(self.vertex_count(), arcs))
    }

    /// Vertices reachable from `source` by directed paths (including itself).
    pub fn reachable_from(&self, source: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![source];
        seen[source] = true;
        while let Some(u) = stack.pop() {
            for &w in &self.out[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn is_strongly_connected(&self) -> bool {
        strong_components(self).len() <= 1
    }
}

/// Extremes of the out- and in-degree sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub min_out: usize,
    pub max_out: usize,
    pub min_in: usize,
    pub max_in: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn complete(m: usize) -> Digraph {
        let arcs = (0..m).flat_map(|u| (0..m).filter(move |&v| v != u).map(move |v| (u, v)));
        Digraph::new(m, arcs).unwrap()
    }

    #[test]
    fn validate_reports_each_violation() {
        assert!(validate(3, &[(0, 1), (1, 2), (2, 0)]).is_empty());
        assert_eq!(
            validate(1, &[(0, 0)]),
            vec![Violation::SelfLoop { tail: 0, head: 0 }]
        );
        assert_eq!(
            validate(2, &[(0, 1), (0, 1)]),
            vec![Violation::DuplicateArc { tail: 0, head: 1 }]
        );
        assert_eq!(
            validate(2, &[(0, 5)]),
            vec![Violation::VertexOutOfRange { tail: 0, head: 5 }]
        );
        assert!(matches!(
            Digraph::new(1, [(0, 0)]),
            Err(GraphError::Invalid(_))
        ));
    }

    #[test]
    fn orientation() {
        assert!(triangle().is_oriented());
        assert!(!Digraph::new(2, [(0, 1), (1, 0)]).unwrap().is_oriented());
        assert!(!complete(3).is_oriented());
    }

    #[test]
    fn degree_profiles() {
        let p = triangle().degree_profile().unwrap();
        assert_eq!((p.min_out, p.max_out, p.min_in, p.max_in), (1, 1, 1, 1));
        let p = complete(3).degree_profile().unwrap();
        assert_eq!((p.min_out, p.max_out), (2, 2));
        let p = Digraph::new(3, [(0, 1), (0, 2)])
            .unwrap()
            .degree_profile()
            .unwrap();
        assert_eq!((p.min_out, p.max_out), (0, 2));
        assert_eq!(Digraph::empty(0).degree_profile(), Err(GraphError::Empty));
    }

    #[test]
    fn induced_subgraphs() {
        let t = triangle();
        let (all, map) = t.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(all, t);
        assert_eq!(map, vec![0, 1, 2]);
        let (none, _) = t.induced_subgraph(&[]).unwrap();
        assert_eq!(none.vertex_count(), 0);
        let (pair, _) = t.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(pair.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(matches!(
            t.induced_subgraph(&[3]),
            Err(GraphError::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn strong_subgraph_selection() {
        let (sub, map) = triangle().min_outdeg_strong_subgraph(1).unwrap();
        assert_eq!(sub, triangle());
        assert_eq!(map, vec![0, 1, 2]);
        assert!(Digraph::new(2, [(0, 1)])
            .unwrap()
            .min_outdeg_strong_subgraph(1)
            .is_none());
        // A 6-cycle on 0..6 and a triangle on 6..9: both qualify, 0 wins.
        let mut arcs: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        arcs.extend([(6, 7), (7, 8), (8, 6)]);
        let d = Digraph::new(9, arcs).unwrap();
        let (_, map) = d.min_outdeg_strong_subgraph(1).unwrap();
        assert_eq!(map, vec![0, 1, 2, 3, 4, 5]);
        // Same union with the triangle first.
        let mut arcs: Vec<_> = (3..9)
            .map(|i| (i, if i == 8 { 3 } else { i + 1 }))
            .collect();
        arcs.extend([(0, 1), (1, 2), (2, 0)]);
        let (_, map) = Digraph::new(9, arcs)
            .unwrap()
            .min_outdeg_strong_subgraph(1)
            .unwrap();
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn pruning() {
        assert_eq!(triangle().prune_to_exact_outdegree(1).unwrap(), triangle());
        let pruned = complete(3).prune_to_exact_outdegree(1).unwrap();
        assert_eq!(
            pruned.arcs().collect::<Vec<_>>(),
            vec![(0, 1), (1, 0), (2, 0)]
        );
        assert!(matches!(
            triangle().prune_to_exact_outdegree(2),
            Err(GraphError::InsufficientOutDegree { vertex: 0, .. })
        ));
    }

    #[test]
    fn serde_round_trip() {
        let json = serde_json::to_string(&triangle()).unwrap();
        assert_eq!(json, r#"{"n":3,"arcs":[[0,1],[1,2],[2,0]]}"#);
        let back: Digraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, triangle());
        assert!(serde_json::from_str::<Digraph>(r#"{"n":1,"arcs":[[0,0]]}"#).is_err());
    }
}
