// SPDX-License-Identifier: Apache-2.0

//! Depth-first branch-and-bound over simple paths.
//!
//! The admissible bound at a node is the current length plus the number of
//! unvisited vertices reachable from the endpoint through unvisited
//! vertices.
//!
//! Twins (vertices with equal in- and out-neighbourhoods) are never adjacent
//! and swapping two of them is an automorphism, so some longest path uses
//! every twin class in increasing id order. The longest-path search only
//! enters a twin once all its smaller twins are on the path.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use super::SolverError;
use crate::graph::{Digraph, PathWitness, Vertex};
use crate::Execution;

const BUDGET_FLUSH: u64 = 4096;

fn out_masks(d: &Digraph) -> Vec<u64> {
    d.vertices()
        .map(|v| d.out_neighbours(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Unvisited vertices reachable from `end` without touching `visited`.
fn reachable(out: &[u64], end: Vertex, visited: u64) -> u64 {
    let mut seen = out[end] & !visited;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= out[x];
        }
        next &= !visited & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// `earlier[v]`: twins of `v` with a smaller id.
pub(super) fn earlier_twins(d: &Digraph) -> Vec<u64> {
    let mut earlier = vec![0u64; d.vertex_count()];
    let mut order: Vec<Vertex> = d.vertices().collect();
    order.sort_by(|&u, &v| {
        (d.out_neighbours(u), d.in_neighbours(u), u).cmp(&(
            d.out_neighbours(v),
            d.in_neighbours(v),
            v,
        ))
    });
    let mut class_mask = 0u64;
    for (i, &v) in order.iter().enumerate() {
        let same = i > 0 && {
            let u = order[i - 1];
            d.out_neighbours(u) == d.out_neighbours(v) && d.in_neighbours(u) == d.in_neighbours(v)
        };
        if !same {
            class_mask = 0;
        }
        earlier[v] = class_mask;
        class_mask |= 1 << v;
    }
    earlier
}

struct Budget<'a> {
    shared: &'a AtomicU64,
    limit: u64,
    local: u64,
}

impl Budget<'_> {
    fn tick(&mut self) -> Result<(), SolverError> {
        self.local += 1;
        if self.local == BUDGET_FLUSH {
            let total = self.shared.fetch_add(self.local, Ordering::Relaxed) + self.local;
            self.local = 0;
            if total > self.limit {
                return Err(SolverError::BudgetExceeded(self.limit));
            }
        }
        Ok(())
    }

    fn finish(&mut self) -> Result<(), SolverError> {
        let total = self.shared.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        if total > self.limit {
            Err(SolverError::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

struct RootSearch<'a> {
    out: &'a [u64],
    earlier: &'a [u64],
    n: usize,
    global_best: &'a AtomicUsize,
    budget: Budget<'a>,
    path: Vec<Vertex>,
    best: Vec<Vertex>,
}

impl RootSearch<'_> {
    fn best_len(&self) -> usize {
        self.best.len().saturating_sub(1)
    }

    fn dfs(&mut self, end: Vertex, visited: u64) -> Result<(), SolverError> {
        self.budget.tick()?;
        let len = self.path.len() - 1;
        if len > self.best_len() || self.best.is_empty() {
            self.best.clone_from(&self.path);
            self.global_best.fetch_max(len, Ordering::Relaxed);
        }
        if self.best_len() + 1 == self.n {
            return Ok(());
        }
        let bound = len + reachable(self.out, end, visited).count_ones() as usize;
        // Ties with the shared best are still explored so that the
        // per-root witness does not depend on scheduling.
        if bound <= self.best_len() || bound < self.global_best.load(Ordering::Relaxed) {
            return Ok(());
        }
        let mut next = self.out[end] & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            if self.earlier[w] & !visited != 0 {
                continue;
            }
            self.path.push(w);
            self.dfs(w, visited | 1 << w)?;
            self.path.pop();
            if self.best_len() + 1 == self.n {
                break;
            }
        }
        Ok(())
    }
}

/// Longest path starting at one of `roots`; the smallest root wins ties.
///
/// Roots with a smaller twin among the other vertices are redundant when
/// every vertex is a root; callers may drop them.
pub(super) fn longest_path(
    d: &Digraph,
    roots: &[Vertex],
    limits: &super::SolverLimits,
    exec: Execution,
) -> Result<PathWitness, SolverError> {
    if d.vertex_count() == 0 {
        return Ok(PathWitness::new(Vec::new()));
    }
    let out = out_masks(d);
    let earlier = earlier_twins(d);
    let global_best = AtomicUsize::new(0);
    let spent = AtomicU64::new(0);
    let per_root = exec.map(roots, |&root| {
        let mut search = RootSearch {
            out: &out,
            earlier: &earlier,
            n: d.vertex_count(),
            global_best: &global_best,
            budget: Budget {
                shared: &spent,
                limit: limits.node_budget,
                local: 0,
            },
            path: vec![root],
            best: Vec::new(),
        };
        search.dfs(root, 1 << root)?;
        search.budget.finish()?;
        Ok::<_, SolverError>(search.best)
    });
    let mut best: Vec<Vertex> = Vec::new();
    for result in per_root {
        let candidate = result?;
        if candidate.len() > best.len() {
            best = candidate;
        }
    }
    Ok(PathWitness::new(best))
}

/// All paths with exactly `length` arcs, in lexicographic order.
pub(super) fn enumerate_paths_of_length(
    d: &Digraph,
    length: usize,
    limits: &super::SolverLimits,
) -> Result<Vec<PathWitness>, SolverError> {
    struct Enumerate<'a> {
        out: &'a [u64],
        length: usize,
        budget: Budget<'a>,
        path: Vec<Vertex>,
        found: Vec<PathWitness>,
    }

    impl Enumerate<'_> {
        fn dfs(&mut self, end: Vertex, visited: u64) -> Result<(), SolverError> {
            self.budget.tick()?;
            let len = self.path.len() - 1;
            if len == self.length {
                self.found.push(PathWitness::new(self.path.clone()));
                return Ok(());
            }
            if len + (reachable(self.out, end, visited).count_ones() as usize) < self.length {
                return Ok(());
            }
            let mut next = self.out[end] & !visited;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                self.path.push(w);
                self.dfs(w, visited | 1 << w)?;
                self.path.pop();
            }
            Ok(())
        }
    }

    let out = out_masks(d);
    let spent = AtomicU64::new(0);
    let mut search = Enumerate {
        out: &out,
        length,
        budget: Budget {
            shared: &spent,
            limit: limits.node_budget,
            local: 0,
        },
        path: Vec::new(),
        found: Vec::new(),
    };
    for root in d.vertices() {
        search.path = vec![root];
        search.dfs(root, 1 << root)?;
    }
    search.budget.finish()?;
    Ok(search.found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_counterexample, CounterexampleParams};

    #[test]
    fn twin_classes_of_a_lift() {
        // Hub 0 is 2-lifted onto the twins 3 and 4.
        let d = build_counterexample(CounterexampleParams::new(2, 2, 2).unwrap());
        let earlier = earlier_twins(&d);
        assert_eq!(earlier[3], 0);
        assert_eq!(earlier[4], 1 << 3);
        assert_eq!(earlier[0], 0);
        assert_eq!((0..9).filter(|&v| earlier[v] != 0).count(), 3);
    }
}
