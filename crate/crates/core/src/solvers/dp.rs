// SPDX-License-Identifier: Apache-2.0

//! Subset dynamic programming over `(vertex set, endpoint)` states.

use crate::graph::{Digraph, PathWitness, Vertex};

pub(super) fn out_masks32(d: &Digraph) -> Vec<u32> {
    d.vertices()
        .map(|v| d.out_neighbours(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// `reach[mask]` holds the endpoints `e` such that some path visits exactly
/// the vertices of `mask` and ends at `e`. With `start` set, only paths
/// beginning at that vertex are tracked.
fn reach_table(d: &Digraph, start: Option<Vertex>) -> Vec<u32> {
    let n = d.vertex_count();
    let out = out_masks32(d);
    let mut reach = vec![0u32; 1usize << n];
    match start {
        Some(s) => reach[1 << s] = 1 << s,
        None => {
            for v in 0..n {
                reach[1 << v] = 1 << v;
            }
        }
    }
    for mask in 1..reach.len() {
        let mut ends = reach[mask];
        while ends != 0 {
            let e = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = out[e] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    reach
}

/// Longest path, optionally from a fixed start.
///
/// The witness is canonical: smallest vertex set (as a mask) among those of
/// maximum size, smallest endpoint, then smallest predecessor at each step.
pub(super) fn longest_path(d: &Digraph, start: Option<Vertex>) -> PathWitness {
    if d.vertex_count() == 0 {
        return PathWitness::new(Vec::new());
    }
    let reach = reach_table(d, start);
    let (best_mask, _) = reach
        .iter()
        .enumerate()
        .filter(|(_, &ends)| ends != 0)
        .map(|(mask, _)| (mask, mask.count_ones()))
        .fold(
            (0usize, 0u32),
            |acc, cur| if cur.1 > acc.1 { cur } else { acc },
        );
    let out = out_masks32(d);
    let mut mask = best_mask as u32;
    let mut end = reach[best_mask].trailing_zeros();
    let mut reversed = vec![end as usize];
    while mask.count_ones() > 1 {
        let rest = mask & !(1 << end);
        let prev = (0..32)
            .find(|&p| reach[rest as usize] >> p & 1 == 1 && out[p as usize] >> end & 1 == 1)
            .expect("dp predecessor exists");
        reversed.push(prev as usize);
        mask = rest;
        end = prev;
    }
    reversed.reverse();
    PathWitness::new(reversed)
}
