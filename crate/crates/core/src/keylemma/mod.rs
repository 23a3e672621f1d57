// SPDX-License-Identifier: Apache-2.0

//! Maximum-path witness machinery for oriented graphs with minimum
//! out-degree `δ`, and the closed-form path bounds derived from it.
//!
//! For an oriented `D` with `δ⁺(D) ≥ δ`, either `ℓ(D) ≥ 2δ`, or there is an
//! induced subgraph `S` with `|S| ≤ δ` and `δ⁺(S) ≥ 2δ − ℓ(D)`.
//! [`analyze_key_lemma`] decides which case holds and, in the second case,
//! constructs `S` the constructive way:
//!
//! 1. restrict to a strong component with minimum out-degree `δ` and prune
//!    every out-degree to exactly `δ`;
//! 2. among all maximum-length paths pick one whose cycle bound is largest
//!    (ties: lexicographically smallest vertex sequence);
//! 3. read off `a`, `A`, `B`, `B⁻` and take `S = D[B⁻]`;
//! 4. check the three intermediate claims on the working digraph.

mod bounds;
mod claims;
mod verify;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Digraph, PathWitness, Vertex};
use crate::solvers::{
    cycle_bound, enumerate_maximum_paths, longest_path_exact, SolverError, SolverLimits,
};

pub use bounds::{bound_table, BoundTable, Rational};
pub use claims::{
    check_claim_no_two_long_cycles, check_claim_outneighbours_on_path,
    check_claim_predecessors_into_cycle, ClaimId, ClaimRecord, ClaimStatus, ProofSets,
};
pub use verify::{verify_path_bounds, BoundCheck, BoundStatus, ConjectureProbes, PathBoundsReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KeyLemmaError {
    #[error("digraph is not oriented (it has a 2-cycle)")]
    NotOriented,
    #[error("minimum out-degree {found} is below the requested {required}")]
    InsufficientOutDegree { required: usize, found: usize },
    #[error("the empty digraph has no minimum out-degree")]
    Empty,
    #[error(transparent)]
    Solver(#[from] SolverError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    LongPath,
    SmallSubgraph,
}

/// The subgraph `S` and the sets it was built from. Vertex ids refer to the
/// analysed input digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaWitness {
    /// `ℓ` of the pruned strong component the path was chosen in.
    pub working_ell: usize,
    /// Maximum path of the working digraph with the largest cycle bound.
    pub path: PathWitness,
    pub cycle_bound: usize,
    /// `None` when the chosen path closes back to its first vertex.
    pub sets: Option<ProofSets>,
    pub s_vertices: Vec<Vertex>,
    /// `δ⁺(S)` with `S` induced in the input digraph.
    pub s_min_outdeg: Option<usize>,
    /// `δ⁺(S)` with `S` induced in the pruned working digraph.
    pub s_min_outdeg_working: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeyLemmaReport {
    pub delta: usize,
    /// Exact `ℓ` of the input digraph.
    pub ell: usize,
    pub best_path: PathWitness,
    pub outcome: Outcome,
    /// Vertices (input ids) of the strong component the analysis used.
    pub working_vertices: Vec<Vertex>,
    /// Exact `ℓ` of the pruned working component.
    pub working_ell: usize,
    /// Whether the working digraph meets the proof environment: strongly
    /// connected, oriented, out-degrees exactly `δ` and `ℓ < 2δ`.
    pub hypotheses_hold: bool,
    /// Present iff the outcome is [`Outcome::SmallSubgraph`].
    pub witness: Option<LemmaWitness>,
    /// Witness construction on the working digraph when the input has a
    /// path of length `2δ` but the working digraph has `ℓ ≤ 2δ`.
    pub probe: Option<LemmaWitness>,
    pub claims: Vec<ClaimRecord>,
    /// `δ⁺(S) ≥ 2δ + 1 − ℓ` on the working digraph, recorded but not part
    /// of the contract.
    pub sharper_bound_holds: Option<bool>,
}

impl KeyLemmaReport {
    /// Contract violations; empty for a structurally valid report.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let long = self.ell >= 2 * self.delta;
        match self.outcome {
            Outcome::LongPath => {
                if !long || self.best_path.len() != self.ell {
                    out.push(format!(
                        "long-path outcome with ell = {} and witness length {}",
                        self.ell,
                        self.best_path.len()
                    ));
                }
                if self.witness.is_some() {
                    out.push("long-path outcome carries a subgraph witness".into());
                }
                if self.hypotheses_hold {
                    if let Some(w) = &self.probe {
                        out.extend(self.working_violations(w));
                    }
                }
            }
            Outcome::SmallSubgraph => {
                if long {
                    out.push(format!(
                        "small-subgraph outcome although ell = {} >= 2δ",
                        self.ell
                    ));
                }
                match &self.witness {
                    None => out.push("small-subgraph outcome without witness".into()),
                    Some(w) => {
                        match w.s_min_outdeg {
                            Some(k) if k + self.ell >= 2 * self.delta => {}
                            other => out.push(format!(
                                "δ⁺(S) = {other:?} is below 2δ − ℓ = {}",
                                2 * self.delta as i64 - self.ell as i64
                            )),
                        }
                        out.extend(self.working_violations(w));
                    }
                }
            }
        }
        out
    }

    /// The dichotomy applied to the working digraph itself, plus the set
    /// identities `|A| + |B| = δ` and `|B⁻| = |B|`.
    fn working_violations(&self, w: &LemmaWitness) -> Vec<String> {
        let mut out = Vec::new();
        if w.s_vertices.len() > self.delta {
            out.push(format!(
                "|S| = {} exceeds δ = {}",
                w.s_vertices.len(),
                self.delta
            ));
        }
        match w.s_min_outdeg_working {
            Some(k) if k + w.working_ell >= 2 * self.delta => {}
            other => out.push(format!(
                "working δ⁺(S) = {other:?} is below 2δ − ℓ = {}",
                2 * self.delta as i64 - w.working_ell as i64
            )),
        }
        match &w.sets {
            None => out.push("cycle bound index a = 0".into()),
            Some(sets) => {
                if sets.a_set.len() + sets.b_set.len() != self.delta {
                    out.push(format!(
                        "|A| + |B| = {} differs from δ = {}",
                        sets.a_set.len() + sets.b_set.len(),
                        self.delta
                    ));
                }
                if sets.b_minus_set.len() != sets.b_set.len() {
                    out.push("|B⁻| differs from |B|".into());
                }
            }
        }
        out
    }

    pub fn claim(&self, id: ClaimId) -> Option<&ClaimStatus> {
        self.claims
            .iter()
            .find(|c| c.claim == id)
            .map(|c| &c.status)
    }
}

fn check_input(d: &Digraph, delta: usize) -> Result<(), KeyLemmaError> {
    if !d.is_oriented() {
        return Err(KeyLemmaError::NotOriented);
    }
    let found = d.min_out_degree().ok_or(KeyLemmaError::Empty)?;
    if found < delta {
        return Err(KeyLemmaError::InsufficientOutDegree {
            required: delta,
            found,
        });
    }
    Ok(())
}

/// Working digraph of the analysis: a strong component with minimum
/// out-degree `δ`, pruned to out-degree exactly `δ`, plus its id table.
pub fn working_digraph(d: &Digraph, delta: usize) -> Option<(Digraph, Vec<Vertex>)> {
    let (component, ids) = d.min_outdeg_strong_subgraph(delta)?;
    let pruned = component
        .prune_to_exact_outdegree(delta)
        .expect("component has minimum out-degree delta");
    Some((pruned, ids))
}

/// Runs the witness construction on `working` regardless of its `ℓ`.
///
/// Returns the witness (in `working` ids) and the claim records. Useful on
/// instances where `ℓ = 2δ`, outside the proof environment, as a probe.
pub fn lemma_witness(
    working: &Digraph,
    delta: usize,
    limits: &SolverLimits,
) -> Result<(LemmaWitness, Vec<ClaimRecord>), SolverError> {
    let paths = enumerate_maximum_paths(working, limits)?;
    let mut chosen: Option<(PathWitness, usize, usize)> = None;
    for path in paths {
        let cb = cycle_bound(working, &path)?;
        if chosen
            .as_ref()
            .is_none_or(|(_, bound, _)| cb.bound > *bound)
        {
            chosen = Some((path, cb.bound, cb.back_index));
        }
    }
    let (path, bound, a) = chosen.ok_or(SolverError::NoCycle)?;
    let sets = ProofSets::compute(working, &path, a);
    let s_vertices = sets
        .as_ref()
        .map(|s| s.b_minus_set.clone())
        .unwrap_or_default();
    let s_min_outdeg_working = min_outdeg_within(working, &s_vertices);
    let claims = vec![
        ClaimRecord {
            claim: ClaimId::NoTwoLongCycles,
            status: check_claim_no_two_long_cycles(working, delta, limits)?,
        },
        ClaimRecord {
            claim: ClaimId::OutNeighboursOnPath,
            status: check_claim_outneighbours_on_path(working, &path, a),
        },
        ClaimRecord {
            claim: ClaimId::PredecessorsIntoCycle,
            status: check_claim_predecessors_into_cycle(working, &path, a),
        },
    ];
    let witness = LemmaWitness {
        working_ell: path.len(),
        path,
        cycle_bound: bound,
        sets,
        s_vertices,
        s_min_outdeg: s_min_outdeg_working,
        s_min_outdeg_working,
    };
    Ok((witness, claims))
}

fn min_outdeg_within(d: &Digraph, subset: &[Vertex]) -> Option<usize> {
    let mut members = vec![false; d.vertex_count()];
    for &v in subset {
        members[v] = true;
    }
    subset.iter().map(|&v| d.out_degree_into(v, &members)).min()
}

fn relabel(ids: &[Vertex], vertices: &[Vertex]) -> Vec<Vertex> {
    vertices.iter().map(|&v| ids[v]).collect()
}

fn relabel_witness(mut w: LemmaWitness, ids: &[Vertex], input: &Digraph) -> LemmaWitness {
    w.path = PathWitness::new(relabel(ids, &w.path.vertices));
    if let Some(sets) = w.sets.as_mut() {
        sets.pivot = ids[sets.pivot];
        sets.cycle = relabel(ids, &sets.cycle);
        sets.a_set = relabel(ids, &sets.a_set);
        sets.b_set = relabel(ids, &sets.b_set);
        sets.b_minus_set = relabel(ids, &sets.b_minus_set);
        sets.b_minus_set.sort_unstable();
    }
    w.s_vertices = relabel(ids, &w.s_vertices);
    w.s_vertices.sort_unstable();
    w.s_min_outdeg = min_outdeg_within(input, &w.s_vertices);
    w
}

fn relabel_claims(claims: &mut [ClaimRecord], ids: &[Vertex]) {
    for record in claims {
        if let ClaimStatus::Violated { counterwitness } = &mut record.status {
            for group in counterwitness.iter_mut() {
                *group = relabel(ids, group);
            }
        }
    }
}

/// Decides the dichotomy for an oriented `d` with `δ⁺(d) ≥ delta` and
/// builds the subgraph witness when no path of length `2δ` exists.
pub fn analyze_key_lemma(
    d: &Digraph,
    delta: usize,
    limits: &SolverLimits,
) -> Result<KeyLemmaReport, KeyLemmaError> {
    check_input(d, delta)?;
    let best_path = longest_path_exact(d, limits)?;
    let ell = best_path.len();
    let (working, ids) =
        working_digraph(d, delta).expect("a sink strong component keeps every out-arc");
    let working_ell = longest_path_exact(&working, limits)?.len();
    let hypotheses_hold = working_ell < 2 * delta && working.is_strongly_connected();
    let outcome = if ell >= 2 * delta {
        Outcome::LongPath
    } else {
        Outcome::SmallSubgraph
    };

    let mut claims = Vec::new();
    let mut built = None;
    if working_ell <= 2 * delta {
        let (w, mut c) = lemma_witness(&working, delta, limits)?;
        relabel_claims(&mut c, &ids);
        claims = c;
        built = Some(relabel_witness(w, &ids, d));
    }
    let sharper_bound_holds = built
        .as_ref()
        .filter(|_| outcome == Outcome::SmallSubgraph)
        .and_then(|w| {
            w.s_min_outdeg_working
                .map(|k| k + w.working_ell > 2 * delta)
        });
    let (witness, probe) = match outcome {
        Outcome::SmallSubgraph => (built, None),
        Outcome::LongPath => (None, built),
    };
    Ok(KeyLemmaReport {
        delta,
        ell,
        best_path,
        outcome,
        working_vertices: ids,
        working_ell,
        hypotheses_hold,
        witness,
        probe,
        claims,
        sharper_bound_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        build_counterexample, generate, CounterexampleParams, GenKind, GenSpec,
    };

    fn triangle() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn triangle_has_long_path() {
        let report = analyze_key_lemma(&triangle(), 1, &SolverLimits::default()).unwrap();
        assert_eq!(report.outcome, Outcome::LongPath);
        assert_eq!(report.ell, 2);
        assert!(report.invariant_violations().is_empty());
    }

    #[test]
    fn input_errors() {
        let digon = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(
            analyze_key_lemma(&digon, 1, &SolverLimits::default()),
            Err(KeyLemmaError::NotOriented)
        );
        assert_eq!(
            analyze_key_lemma(&triangle(), 2, &SolverLimits::default()),
            Err(KeyLemmaError::InsufficientOutDegree {
                required: 2,
                found: 1
            })
        );
    }

    #[test]
    fn lift_instance_has_long_path() {
        // D(1, 2) with δ = 2 is oriented with girth 3 and ℓ = 5 ≥ 2δ.
        let d = build_counterexample(CounterexampleParams::new(2, 1, 2).unwrap());
        assert!(d.is_oriented());
        let limits = SolverLimits::default();
        let report = analyze_key_lemma(&d, 2, &limits).unwrap();
        assert_eq!(report.ell, 5);
        assert_eq!(report.outcome, Outcome::LongPath);
        assert!(report.witness.is_none() && report.probe.is_none());
        assert!(report.invariant_violations().is_empty());

        // The witness machinery still runs when called directly.
        let (working, _) = working_digraph(&d, 2).unwrap();
        let (witness, claims) = lemma_witness(&working, 2, &limits).unwrap();
        assert_eq!(witness.working_ell, 5);
        assert_eq!(witness.path.len(), 5);
        assert_eq!(claims.len(), 3);
    }

    #[test]
    fn deterministic_reports() {
        let d = generate(&GenSpec::new(GenKind::OrientedMinOutdeg, 9, 2, 5)).unwrap();
        let a = analyze_key_lemma(&d, 2, &SolverLimits::default()).unwrap();
        let b = analyze_key_lemma(&d, 2, &SolverLimits::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.invariant_violations().is_empty());
    }

    #[test]
    fn small_subgraph_report_validation() {
        let witness = LemmaWitness {
            working_ell: 3,
            path: PathWitness::new(vec![0, 1, 2, 3]),
            cycle_bound: 3,
            sets: Some(ProofSets {
                a_index: 1,
                pivot: 0,
                cycle: vec![1, 2, 3],
                a_set: vec![],
                b_set: vec![1, 2],
                b_minus_set: vec![1, 3],
            }),
            s_vertices: vec![1, 3],
            s_min_outdeg: Some(1),
            s_min_outdeg_working: Some(1),
        };
        let report = KeyLemmaReport {
            delta: 2,
            ell: 3,
            best_path: PathWitness::new(vec![0, 1, 2, 3]),
            outcome: Outcome::SmallSubgraph,
            working_vertices: vec![0, 1, 2, 3],
            working_ell: 3,
            hypotheses_hold: false,
            witness: Some(witness.clone()),
            probe: None,
            claims: vec![],
            sharper_bound_holds: Some(false),
        };
        assert!(report.invariant_violations().is_empty());

        let mut bad = report.clone();
        bad.witness = Some(LemmaWitness {
            s_min_outdeg: Some(0),
            ..witness.clone()
        });
        assert_eq!(bad.invariant_violations().len(), 1);

        let mut bad = report.clone();
        bad.ell = 4;
        assert!(!bad.invariant_violations().is_empty());

        let mut bad = report;
        bad.witness = Some(LemmaWitness {
            sets: None,
            ..witness
        });
        assert_eq!(
            bad.invariant_violations(),
            vec!["cycle bound index a = 0".to_string()]
        );
    }
}
