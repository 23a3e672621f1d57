// SPDX-License-Identifier: Apache-2.0

use super::{dp::out_masks32, SolverError, SolverLimits};
use crate::graph::{CycleWitness, Digraph};

/// For each vertex set `mask`, the endpoints of paths that start at the
/// smallest vertex of `mask` and visit exactly `mask`.
fn anchored_paths(out: &[u32], n: usize) -> Vec<u32> {
    let mut table = vec![0u32; 1usize << n];
    for v in 0..n {
        table[1 << v] = 1 << v;
    }
    for mask in 1..table.len() {
        let mut ends = table[mask];
        if ends == 0 {
            continue;
        }
        let low = mask.trailing_zeros();
        // Only vertices above the anchor may join.
        let above = !((1u32 << (low + 1)) - 1);
        while ends != 0 {
            let e = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = out[e] & !(mask as u32) & above;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                table[mask | 1 << w] |= 1 << w;
            }
        }
    }
    table
}

fn spans_cycle(out: &[u32], table: &[u32], mask: usize) -> Option<u32> {
    if mask.count_ones() < 2 {
        return None;
    }
    let low = mask.trailing_zeros();
    let mut ends = table[mask];
    while ends != 0 {
        let e = ends.trailing_zeros();
        ends &= ends - 1;
        if out[e as usize] >> low & 1 == 1 {
            return Some(e);
        }
    }
    None
}

fn rebuild_cycle(out: &[u32], table: &[u32], mask: usize, end: u32) -> CycleWitness {
    let mut mask = mask as u32;
    let mut end = end;
    let mut reversed = vec![end as usize];
    while mask.count_ones() > 1 {
        let rest = mask & !(1 << end);
        let prev = (0..32)
            .find(|&p| table[rest as usize] >> p & 1 == 1 && out[p as usize] >> end & 1 == 1)
            .expect("anchored predecessor exists");
        reversed.push(prev as usize);
        mask = rest;
        end = prev;
    }
    reversed.reverse();
    CycleWitness::new(reversed)
}

/// Exact search for two vertex-disjoint directed cycles, each with at least
/// `min_len` arcs.
///
/// Every vertex set spanning a long enough cycle is found by Hamiltonian-cycle
/// DP; a subset-closure pass then answers whether the complement of such a
/// set still contains one. The pair whose first cycle has the numerically
/// smallest vertex mask is returned.
pub fn find_two_disjoint_cycles(
    d: &Digraph,
    min_len: usize,
    limits: &SolverLimits,
) -> Result<Option<(CycleWitness, CycleWitness)>, SolverError> {
    limits.check_dp(d)?;
    let n = d.vertex_count();
    let out = out_masks32(d);
    let table = anchored_paths(&out, n);
    let size = 1usize << n;
    let min_len = min_len.max(2) as u32;
    // inside[mask]: a vertex set (as mask + 1, 0 for none) spanning a long
    // cycle and contained in `mask`.
    let mut inside = vec![0u32; size];
    for (mask, slot) in inside.iter_mut().enumerate().skip(1) {
        if mask.count_ones() >= min_len && spans_cycle(&out, &table, mask).is_some() {
            *slot = mask as u32 + 1;
        }
    }
    for bit in 0..n {
        for mask in 0..size {
            if mask >> bit & 1 == 1 && inside[mask] == 0 {
                inside[mask] = inside[mask ^ 1 << bit];
            }
        }
    }
    let full = size - 1;
    for mask in 1..size {
        if inside[mask] != mask as u32 + 1 {
            continue;
        }
        let other = inside[full ^ mask];
        if other != 0 {
            let other = (other - 1) as usize;
            let first_end = spans_cycle(&out, &table, mask).expect("mask spans a cycle");
            let second_end = spans_cycle(&out, &table, other).expect("mask spans a cycle");
            return Ok(Some((
                rebuild_cycle(&out, &table, mask, first_end),
                rebuild_cycle(&out, &table, other, second_end),
            )));
        }
    }
    Ok(None)
}
