// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use crate::graph::{Digraph, PathWitness, Vertex};
use crate::solvers::{find_two_disjoint_cycles, SolverError, SolverLimits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    /// No two vertex-disjoint cycles of length at least `δ + 1`.
    NoTwoLongCycles,
    /// Every out-neighbour of `v_{a-1}` lies on the path.
    OutNeighboursOnPath,
    /// Every out-neighbour of `B⁻` lies on the closed cycle `C`.
    PredecessorsIntoCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ClaimStatus {
    Holds,
    Violated { counterwitness: Vec<Vec<Vertex>> },
    NotApplicable { reason: String },
}

impl ClaimStatus {
    pub fn holds(&self) -> bool {
        matches!(self, ClaimStatus::Holds)
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, ClaimStatus::Violated { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub claim: ClaimId,
    #[serde(flatten)]
    pub status: ClaimStatus,
}

/// The sets read off a non-extendable path `P = v_0 … v_ℓ` and its cycle
/// bound index `a`.
///
/// `C = v_a … v_ℓ v_a`, `A = N⁺(v_{a-1}) ∩ {v_0, …, v_{a-1}}`,
/// `B = N⁺(v_{a-1}) ∩ V(C)` and `B⁻` the predecessors on `C` of `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofSets {
    pub a_index: usize,
    pub pivot: Vertex,
    pub cycle: Vec<Vertex>,
    pub a_set: Vec<Vertex>,
    pub b_set: Vec<Vertex>,
    pub b_minus_set: Vec<Vertex>,
}

impl ProofSets {
    /// `None` when `a = 0` (no `v_{a-1}`) or `a` is past the endpoint.
    pub fn compute(d: &Digraph, path: &PathWitness, a: usize) -> Option<ProofSets> {
        let p = &path.vertices;
        if a == 0 || a >= p.len() {
            return None;
        }
        let pivot = p[a - 1];
        let cycle = p[a..].to_vec();
        let mut position = vec![usize::MAX; d.vertex_count()];
        for (i, &v) in p.iter().enumerate() {
            position[v] = i;
        }
        let mut a_set = Vec::new();
        let mut b_set = Vec::new();
        let mut b_minus_set = Vec::new();
        for &w in d.out_neighbours(pivot) {
            match position[w] {
                i if i < a => a_set.push(w),
                i if i != usize::MAX => {
                    b_set.push(w);
                    // Predecessor on C; v_a is preceded by the endpoint.
                    b_minus_set.push(if i == a { p[p.len() - 1] } else { p[i - 1] });
                }
                _ => {}
            }
        }
        b_minus_set.sort_unstable();
        Some(ProofSets {
            a_index: a,
            pivot,
            cycle,
            a_set,
            b_set,
            b_minus_set,
        })
    }
}

/// Exact search for two disjoint cycles of length at least `δ + 1`.
pub fn check_claim_no_two_long_cycles(
    d: &Digraph,
    delta: usize,
    limits: &SolverLimits,
) -> Result<ClaimStatus, SolverError> {
    Ok(match find_two_disjoint_cycles(d, delta + 1, limits)? {
        None => ClaimStatus::Holds,
        Some((first, second)) => ClaimStatus::Violated {
            counterwitness: vec![first.vertices, second.vertices],
        },
    })
}

/// Checks `N⁺(v_{a-1}) ⊆ V(P)`.
pub fn check_claim_outneighbours_on_path(d: &Digraph, path: &PathWitness, a: usize) -> ClaimStatus {
    if a == 0 || a >= path.vertices.len() {
        return ClaimStatus::NotApplicable {
            reason: format!("index a = {a} has no predecessor on the path"),
        };
    }
    let pivot = path.vertices[a - 1];
    let off_path: Vec<Vertex> = d
        .out_neighbours(pivot)
        .iter()
        .copied()
        .filter(|w| !path.vertices.contains(w))
        .collect();
    if off_path.is_empty() {
        ClaimStatus::Holds
    } else {
        ClaimStatus::Violated {
            counterwitness: vec![vec![pivot], off_path],
        }
    }
}

/// Checks `N⁺(B⁻) ⊆ V(C)`.
pub fn check_claim_predecessors_into_cycle(
    d: &Digraph,
    path: &PathWitness,
    a: usize,
) -> ClaimStatus {
    let Some(sets) = ProofSets::compute(d, path, a) else {
        return ClaimStatus::NotApplicable {
            reason: format!("index a = {a} has no predecessor on the path"),
        };
    };
    let mut on_cycle = vec![false; d.vertex_count()];
    for &v in &sets.cycle {
        on_cycle[v] = true;
    }
    let escapes: Vec<Vec<Vertex>> = sets
        .b_minus_set
        .iter()
        .flat_map(|&b| {
            d.out_neighbours(b)
                .iter()
                .filter(|&&w| !on_cycle[w])
                .map(move |&w| vec![b, w])
        })
        .collect();
    if escapes.is_empty() {
        ClaimStatus::Holds
    } else {
        ClaimStatus::Violated {
            counterwitness: escapes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lollipop() -> Digraph {
        // Path 0 -> 1 -> 2 -> 3 -> 4 closing 4 -> 2; pivot 1 also points at 3.
        Digraph::new(5, [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    #[test]
    fn sets_by_hand() {
        let d = lollipop();
        let p = PathWitness::new(vec![0, 1, 2, 3, 4]);
        let sets = ProofSets::compute(&d, &p, 2).unwrap();
        assert_eq!(sets.pivot, 1);
        assert_eq!(sets.cycle, vec![2, 3, 4]);
        assert!(sets.a_set.is_empty());
        assert_eq!(sets.b_set, vec![2, 3]);
        // 2 is preceded on C by the endpoint 4, 3 by 2.
        assert_eq!(sets.b_minus_set, vec![2, 4]);
        assert!(ProofSets::compute(&d, &p, 0).is_none());
    }

    #[test]
    fn claim_checkers() {
        let d = lollipop();
        let p = PathWitness::new(vec![0, 1, 2, 3, 4]);
        assert!(check_claim_outneighbours_on_path(&d, &p, 2).holds());
        assert!(check_claim_predecessors_into_cycle(&d, &p, 2).holds());
        assert!(matches!(
            check_claim_outneighbours_on_path(&d, &p, 0),
            ClaimStatus::NotApplicable { .. }
        ));

        // Pivot with an off-path out-neighbour, and B⁻ escaping C.
        let d = Digraph::new(6, [(0, 1), (1, 2), (1, 5), (2, 3), (3, 1), (3, 0)]).unwrap();
        let p = PathWitness::new(vec![0, 1, 2, 3]);
        assert!(check_claim_outneighbours_on_path(&d, &p, 1).holds());
        assert_eq!(
            check_claim_outneighbours_on_path(&d, &p, 2),
            ClaimStatus::Violated {
                counterwitness: vec![vec![1], vec![5]]
            }
        );
        // a = 2: pivot 1, B = {2}, B⁻ = {3}; 3 -> 0 leaves C = {2, 3}.
        assert_eq!(
            check_claim_predecessors_into_cycle(&d, &p, 2),
            ClaimStatus::Violated {
                counterwitness: vec![vec![3, 0], vec![3, 1]]
            }
        );
    }

    #[test]
    fn disjoint_cycle_claim() {
        let cycle = Digraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(
            check_claim_no_two_long_cycles(&cycle, 2, &SolverLimits::default())
                .unwrap()
                .holds()
        );
        let two = Digraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(
            check_claim_no_two_long_cycles(&two, 2, &SolverLimits::default())
                .unwrap()
                .is_violated()
        );
    }
}
