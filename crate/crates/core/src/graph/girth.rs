// SPDX-License-Identifier: Apache-2.0

use std::collections::VecDeque;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use super::{CycleWitness, Digraph, Vertex};
use crate::Execution;

/// Length of the shortest directed cycle, with a witness when one exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Girth {
    Finite(CycleWitness),
    Acyclic,
}

impl Girth {
    pub fn value(&self) -> Option<usize> {
        match self {
            Girth::Finite(c) => Some(c.len()),
            Girth::Acyclic => None,
        }
    }

    pub fn witness(&self) -> Option<&CycleWitness> {
        match self {
            Girth::Finite(c) => Some(c),
            Girth::Acyclic => None,
        }
    }
}

pub fn girth(d: &Digraph) -> Girth {
    girth_with(d, Execution::default())
}

/// Exact girth by breadth-first search from every vertex.
///
/// The search rooted at `s` only visits vertices with id `>= s`, so it finds
/// the shortest cycle whose smallest vertex is `s`. Searches share the best
/// length found so far and stop expanding at that depth; ties are resolved
/// by the smallest root, so the witness does not depend on scheduling.
pub fn girth_with(d: &Digraph, exec: Execution) -> Girth {
    let best = AtomicUsize::new(usize::MAX);
    let per_root = exec.map_range(0..d.vertex_count(), |s| {
        let found = shortest_cycle_through_min(d, s, best.load(Ordering::Relaxed));
        if let Some(c) = &found {
            best.fetch_min(c.len(), Ordering::Relaxed);
        }
        found
    });
    per_root
        .into_iter()
        .flatten()
        .min_by_key(|c| c.len())
        .map_or(Girth::Acyclic, Girth::Finite)
}

/// Shortest cycle through `s` using only vertices `>= s`, or `None` if every
/// such cycle is longer than `cutoff`.
fn shortest_cycle_through_min(d: &Digraph, s: Vertex, cutoff: usize) -> Option<CycleWitness> {
    let n = d.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        // A cycle closing from u has length dist[u] + 1.
        if dist[u] + 1 > cutoff {
            break;
        }
        if u != s && d.has_arc(u, s) {
            let mut vertices = vec![u];
            let mut cur = u;
            while cur != s {
                cur = parent[cur];
                vertices.push(cur);
            }
            vertices.reverse();
            return Some(CycleWitness::new(vertices));
        }
        for &w in d.out_neighbours(u) {
            if w > s && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let tri = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(girth(&tri).value(), Some(3));
        let arc = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(girth(&arc), Girth::Acyclic);
        let two = Digraph::new(3, [(0, 1), (1, 2), (2, 0), (2, 1)]).unwrap();
        let g = girth(&two);
        assert_eq!(g.value(), Some(2));
        g.witness().unwrap().check(&two).unwrap();
    }

    #[test]
    fn modes_agree() {
        // Two disjoint 4-cycles plus a 5-cycle; witness must be the first 4-cycle.
        let mut arcs: Vec<_> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        arcs.extend((4..8).map(|i| (i, 4 + (i - 3) % 4)));
        arcs.extend((8..13).map(|i| (i, 8 + (i - 7) % 5)));
        let d = Digraph::new(13, arcs).unwrap();
        let seq = girth_with(&d, Execution::Sequential);
        assert_eq!(seq, girth_with(&d, Execution::Parallel));
        assert_eq!(seq.witness().unwrap().vertices, vec![0, 1, 2, 3]);
    }
}
