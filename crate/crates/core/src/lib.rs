// SPDX-License-Identifier: Apache-2.0

//! Digraph toolkit for girth and longest-directed-path questions.
//!
//! The crate is organised around a small immutable [`Digraph`] carrier:
//!
//! - [`graph`]: representation, validation, degrees, strong components,
//!   girth and path/cycle witnesses.
//! - [`solvers`]: exact longest-path search (subset DP and branch-and-bound),
//!   maximum-path enumeration, cycle bounds and disjoint-cycle search.
//! - [`constructions`]: the k-lift operation, the `D(a, b)` lift family and
//!   seeded random generators.
//! - [`keylemma`]: closed-form path bounds and the maximum-path witness
//!   machinery (sets `A`, `B`, `B⁻`, `S`) with its claim checkers.
//! - [`lll`]: balanced partitions with an out-degree floor via permutation
//!   resampling, and the stitched long path built on top of them.
//! - [`sweep`]: seeded verification suites used by the CLI and the
//!   acceptance tests.
//!
//! Data-parallel loops go through [`Execution`]; with the `parallel` feature
//! disabled every mode runs sequentially and produces identical results.

pub mod brute;
pub mod constructions;
mod exec;
pub mod graph;
pub mod io;
pub mod keylemma;
pub mod lll;
pub mod solvers;
pub mod sweep;

pub use exec::Execution;
pub use graph::{
    CycleWitness, DegreeProfile, Digraph, Girth, GraphError, PathWitness, Vertex, Violation,
};
pub use solvers::{SolverError, SolverLimits};
