// SPDX-License-Identifier: Apache-2.0

//! Exact searches used as ground truth for every formula and bound.
//!
//! Longest path is NP-hard, so every entry point is exact-or-error: small
//! instances go through a subset DP over `(vertex set, endpoint)` states,
//! larger ones through a depth-first branch-and-bound whose bound is the
//! number of vertices still reachable from the current endpoint. Instances
//! beyond [`SolverLimits`] or searches that exhaust the node budget fail
//! loudly instead of returning an approximation.

mod bb;
mod cycles;
mod dp;

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Digraph, PathWitness, Vertex, WitnessError};
use crate::Execution;

pub use cycles::find_two_disjoint_cycles;

/// Environment variable holding default limits, e.g. `dp=22,bb=40,budget=100000000`.
pub const LIMITS_ENV: &str = "GIRTHPATH_LIMITS";

/// Hard ceilings imposed by the bitmask representations.
const DP_CEILING: usize = 30;
const BB_CEILING: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("instance has {vertex_count} vertices, above the limit of {limit}")]
    TooLarge { vertex_count: usize, limit: usize },
    #[error("search exceeded the node budget of {0}")]
    BudgetExceeded(u64),
    #[error("invalid solver limits: {0}")]
    InvalidLimits(String),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
    #[error("path is not a valid path of the digraph: {0}")]
    InvalidPath(#[from] WitnessError),
    #[error("path can be extended: endpoint has out-neighbour {0} off the path")]
    PathExtendable(Vertex),
    #[error("path endpoint has no out-neighbours, so no cycle closes")]
    NoCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverLimits {
    pub max_dp_vertices: usize,
    pub max_bb_vertices: usize,
    /// Cap on branch-and-bound node expansions.
    pub node_budget: u64,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            max_dp_vertices: 22,
            max_bb_vertices: 40,
            node_budget: 100_000_000,
        }
    }
}

impl SolverLimits {
    pub fn validate(&self) -> Result<(), SolverError> {
        let bad = |msg: String| Err(SolverError::InvalidLimits(msg));
        if self.max_dp_vertices == 0 || self.max_bb_vertices == 0 || self.node_budget == 0 {
            return bad("all limits must be positive".into());
        }
        if self.max_dp_vertices > self.max_bb_vertices {
            return bad(format!(
                "dp limit {} exceeds bb limit {}",
                self.max_dp_vertices, self.max_bb_vertices
            ));
        }
        if self.max_dp_vertices > DP_CEILING {
            return bad(format!("dp limit is capped at {DP_CEILING}"));
        }
        if self.max_bb_vertices > BB_CEILING {
            return bad(format!("bb limit is capped at {BB_CEILING}"));
        }
        Ok(())
    }

    /// Reads [`LIMITS_ENV`], falling back to the defaults when unset.
    pub fn from_env() -> Result<Self, SolverError> {
        match std::env::var(LIMITS_ENV) {
            Ok(value) => value.parse(),
            Err(_) => Ok(Self::default()),
        }
    }

    fn check_dp(&self, d: &Digraph) -> Result<(), SolverError> {
        self.validate()?;
        if d.vertex_count() > self.max_dp_vertices {
            return Err(SolverError::TooLarge {
                vertex_count: d.vertex_count(),
                limit: self.max_dp_vertices,
            });
        }
        Ok(())
    }

    fn check_bb(&self, d: &Digraph) -> Result<(), SolverError> {
        self.validate()?;
        if d.vertex_count() > self.max_bb_vertices {
            return Err(SolverError::TooLarge {
                vertex_count: d.vertex_count(),
                limit: self.max_bb_vertices,
            });
        }
        Ok(())
    }
}

impl FromStr for SolverLimits {
    type Err = SolverError;

    /// Parses `key=value` pairs separated by commas; missing keys keep
    /// their defaults.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut limits = SolverLimits::default();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| {
                SolverError::InvalidLimits(format!("expected key=value, got `{item}`"))
            })?;
            let number: u64 = value
                .trim()
                .parse()
                .map_err(|_| SolverError::InvalidLimits(format!("`{value}` is not an integer")))?;
            match key.trim() {
                "dp" => limits.max_dp_vertices = number as usize,
                "bb" => limits.max_bb_vertices = number as usize,
                "budget" => limits.node_budget = number,
                other => return Err(SolverError::InvalidLimits(format!("unknown key `{other}`"))),
            }
        }
        limits.validate()?;
        Ok(limits)
    }
}

/// Exact longest directed path, `ℓ(D)`, with a witness.
pub fn longest_path_exact(d: &Digraph, limits: &SolverLimits) -> Result<PathWitness, SolverError> {
    longest_path_exact_with(d, limits, Execution::default())
}

pub fn longest_path_exact_with(
    d: &Digraph,
    limits: &SolverLimits,
    exec: Execution,
) -> Result<PathWitness, SolverError> {
    limits.check_bb(d)?;
    if d.vertex_count() <= limits.max_dp_vertices {
        Ok(dp::longest_path(d, None))
    } else {
        let earlier = bb::earlier_twins(d);
        let roots: Vec<Vertex> = d.vertices().filter(|&v| earlier[v] == 0).collect();
        bb::longest_path(d, &roots, limits, exec)
    }
}

/// Exact longest directed path starting at `start`.
pub fn longest_path_from(
    d: &Digraph,
    start: Vertex,
    limits: &SolverLimits,
) -> Result<PathWitness, SolverError> {
    if start >= d.vertex_count() {
        return Err(SolverError::VertexOutOfRange(start));
    }
    limits.check_bb(d)?;
    if d.vertex_count() <= limits.max_dp_vertices {
        Ok(dp::longest_path(d, Some(start)))
    } else {
        bb::longest_path(d, &[start], limits, Execution::Sequential)
    }
}

/// Every directed path of maximum length, in lexicographic order of vertex
/// sequences. A path and its reversal are distinct.
pub fn enumerate_maximum_paths(
    d: &Digraph,
    limits: &SolverLimits,
) -> Result<Vec<PathWitness>, SolverError> {
    limits.check_dp(d)?;
    let longest = dp::longest_path(d, None).len();
    bb::enumerate_paths_of_length(d, longest, limits)
}

/// The cycle closed by a non-extendable path's endpoint and its earliest
/// on-path out-neighbour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleBound {
    pub path: PathWitness,
    /// Number of arcs of the closed cycle `v_a … v_last v_a`.
    pub bound: usize,
    /// Index `a` of the earliest out-neighbour of the endpoint on the path.
    pub back_index: usize,
}

pub fn cycle_bound(d: &Digraph, path: &PathWitness) -> Result<CycleBound, SolverError> {
    path.check(d)?;
    let last = path.last().ok_or(SolverError::NoCycle)?;
    if d.out_degree(last) == 0 {
        return Err(SolverError::NoCycle);
    }
    let mut position = vec![usize::MAX; d.vertex_count()];
    for (i, &v) in path.vertices.iter().enumerate() {
        position[v] = i;
    }
    let mut back_index = usize::MAX;
    for &w in d.out_neighbours(last) {
        if position[w] == usize::MAX {
            return Err(SolverError::PathExtendable(w));
        }
        back_index = back_index.min(position[w]);
    }
    Ok(CycleBound {
        path: path.clone(),
        bound: path.len() - back_index + 1,
        back_index,
    })
}
