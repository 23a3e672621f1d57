// SPDX-License-Identifier: Apache-2.0

//! Naive reference oracles.
//!
//! Plain recursive enumeration over vertex vectors, sharing no code with
//! [`crate::solvers`] or [`crate::graph::girth`]. Only usable on tiny
//! instances; the verification suites compare the fast paths against these.

use crate::graph::{Digraph, Vertex};

fn for_each_simple_path(d: &Digraph, visit: &mut impl FnMut(&[Vertex])) {
    fn extend(
        d: &Digraph,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        visit: &mut impl FnMut(&[Vertex]),
    ) {
        visit(path);
        let end = *path.last().unwrap();
        for &w in d.out_neighbours(end) {
            if !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(d, path, on_path, visit);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    let mut on_path = vec![false; d.vertex_count()];
    for s in d.vertices() {
        on_path[s] = true;
        extend(d, &mut vec![s], &mut on_path, visit);
        on_path[s] = false;
    }
}

/// Longest simple path length by visiting every simple path.
pub fn longest_path_length(d: &Digraph) -> usize {
    let mut best = 0;
    for_each_simple_path(d, &mut |p| best = best.max(p.len() - 1));
    best
}

/// Every simple path with `length` arcs, in lexicographic order.
pub fn paths_of_length(d: &Digraph, length: usize) -> Vec<Vec<Vertex>> {
    let mut found = Vec::new();
    for_each_simple_path(d, &mut |p| {
        if p.len() == length + 1 {
            found.push(p.to_vec());
        }
    });
    found.sort();
    found
}

/// Every simple directed cycle, listed once starting from its smallest vertex.
pub fn simple_cycles(d: &Digraph) -> Vec<Vec<Vertex>> {
    let mut cycles = Vec::new();
    for_each_simple_path(d, &mut |p| {
        let (first, last) = (p[0], p[p.len() - 1]);
        if p.len() >= 2 && p.iter().all(|&v| v >= first) && d.has_arc(last, first) {
            cycles.push(p.to_vec());
        }
    });
    cycles
}

/// Girth by full cycle enumeration; `None` for acyclic digraphs.
pub fn girth(d: &Digraph) -> Option<usize> {
    simple_cycles(d).iter().map(Vec::len).min()
}
