// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{bad_event_counts, check_cd_regular, LllConfig, LllError};
use crate::graph::{Digraph, Vertex};

/// A balanced partition with every cross out-degree recorded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionCertificate {
    /// `V_1 … V_t`, each sorted.
    pub parts: Vec<Vec<Vertex>>,
    pub t: usize,
    pub sizes: Vec<usize>,
    /// `ln d / (2c′)`.
    pub degree_floor: f64,
    /// `min over v, j of d⁺(v, V_j)`.
    pub min_cross_degree: usize,
    pub resample_rounds_used: u64,
    pub fake_vertex_count: usize,
}

impl PartitionCertificate {
    /// Recounts from `d`: the parts partition `V(D)`, sizes differ by at
    /// most one, and every `d⁺(v, V_j)` meets `⌈degree_floor⌉`.
    pub fn verify(&self, d: &Digraph) -> Result<(), LllError> {
        let fail = |msg: String| Err(LllError::InvalidPartition(msg));
        let n = d.vertex_count();
        if self.parts.len() != self.t || self.t == 0 {
            return fail(format!(
                "expected {} parts, found {}",
                self.t,
                self.parts.len()
            ));
        }
        let mut part_of = vec![usize::MAX; n];
        for (j, part) in self.parts.iter().enumerate() {
            if self.sizes.get(j) != Some(&part.len()) {
                return fail(format!("recorded size of part {j} is wrong"));
            }
            for &v in part {
                if v >= n || part_of[v] != usize::MAX {
                    return fail(format!("vertex {v} is out of range or repeated"));
                }
                part_of[v] = j;
            }
        }
        if let Some(v) = part_of.iter().position(|&j| j == usize::MAX) {
            return fail(format!("vertex {v} is in no part"));
        }
        let (lo, hi) = (self.sizes.iter().min(), self.sizes.iter().max());
        if hi.zip(lo).is_some_and(|(hi, lo)| hi - lo > 1) {
            return fail("part sizes differ by more than one".into());
        }
        let counts = cross_degrees(d, &part_of, self.t);
        let min = counts.iter().copied().min().unwrap_or(0);
        if min != self.min_cross_degree {
            return fail(format!(
                "recorded min cross degree {} but recount gives {min}",
                self.min_cross_degree
            ));
        }
        let floor = self.degree_floor.ceil() as usize;
        if n > 0 && min < floor {
            return fail(format!("min cross degree {min} is below the floor {floor}"));
        }
        Ok(())
    }
}

/// `counts[v·t + j] = d⁺(v, V_j)`.
fn cross_degrees(d: &Digraph, part_of: &[usize], t: usize) -> Vec<usize> {
    let mut counts = vec![0; d.vertex_count() * t];
    for (u, w) in d.arcs() {
        counts[u * t + part_of[w]] += 1;
    }
    counts
}

struct Resampler<'a> {
    d: &'a Digraph,
    t: usize,
    /// Block `i` holds slots `i·t .. (i+1)·t`; entries `≥ n` are fakes.
    slots: Vec<Vertex>,
    part_of: Vec<usize>,
    counts: Vec<usize>,
    bad: BTreeSet<Vertex>,
}

impl Resampler<'_> {
    fn is_bad(&self, v: Vertex) -> bool {
        let deg = self.d.out_degree(v);
        (0..self.t).any(|j| bad_event_counts(deg, self.counts[v * self.t + j], self.t))
    }

    fn refresh(&mut self, v: Vertex) {
        if self.is_bad(v) {
            self.bad.insert(v);
        } else {
            self.bad.remove(&v);
        }
    }

    /// Reshuffles block `i` and updates the cross degrees of every vertex
    /// with an out-neighbour in it.
    fn resample_block(&mut self, i: usize, rng: &mut ChaCha8Rng, touched: &mut Vec<Vertex>) {
        let n = self.d.vertex_count();
        let block = &mut self.slots[i * self.t..(i + 1) * self.t];
        block.shuffle(rng);
        for (j, &w) in block.iter().enumerate() {
            if w >= n || self.part_of[w] == j {
                continue;
            }
            let old = std::mem::replace(&mut self.part_of[w], j);
            for &u in self.d.in_neighbours(w) {
                self.counts[u * self.t + old] -= 1;
                self.counts[u * self.t + j] += 1;
                touched.push(u);
            }
        }
    }
}

/// Splits `V(D)` into `t = ⌊c′d/ln d⌋` balanced parts with
/// `d⁺(v, V_j)` close to `d⁺(v)/t` for every `v` and `j`.
///
/// Vertices are grouped into blocks of `t` consecutive ids, the last one
/// padded with fake vertices; part `j` takes the `j`-th entry of every block
/// permutation. While some `(v, j)` deviates by `d⁺(v)/(2t)` or more, the
/// smallest such `v` has its block and every block meeting `N⁺(v)`
/// reshuffled. Fakes are dropped from the result.
pub fn partition_lll(d: &Digraph, cfg: &LllConfig) -> Result<PartitionCertificate, LllError> {
    cfg.validate()?;
    check_cd_regular(d, cfg.c, cfg.d)?;
    let t = cfg.parts();
    if t == 0 {
        return Err(LllError::NoParts);
    }
    let n = d.vertex_count();
    let blocks = n.div_ceil(t);
    let padded = blocks * t;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut slots: Vec<Vertex> = (0..padded).collect();
    for block in slots.chunks_mut(t) {
        block.shuffle(&mut rng);
    }
    let mut part_of = vec![0; n];
    for (slot, &v) in slots.iter().enumerate() {
        if v < n {
            part_of[v] = slot % t;
        }
    }
    let counts = cross_degrees(d, &part_of, t);
    let mut r = Resampler {
        d,
        t,
        slots,
        part_of,
        counts,
        bad: BTreeSet::new(),
    };
    for v in 0..n {
        r.refresh(v);
    }

    let mut rounds = 0u64;
    let mut touched = Vec::new();
    let mut scope = BTreeSet::new();
    while let Some(&v) = r.bad.first() {
        if rounds == cfg.max_resample_rounds {
            return Err(LllError::NotConverged(rounds));
        }
        rounds += 1;
        scope.clear();
        scope.insert(v / t);
        scope.extend(d.out_neighbours(v).iter().map(|&w| w / t));
        touched.clear();
        for &i in &scope {
            r.resample_block(i, &mut rng, &mut touched);
        }
        touched.sort_unstable();
        touched.dedup();
        for &u in &touched {
            r.refresh(u);
        }
    }

    let mut parts = vec![Vec::with_capacity(blocks); t];
    for v in 0..n {
        parts[r.part_of[v]].push(v);
    }
    Ok(PartitionCertificate {
        sizes: parts.iter().map(Vec::len).collect(),
        parts,
        t,
        degree_floor: cfg.degree_floor(),
        min_cross_degree: r.counts.iter().copied().min().unwrap_or(0),
        resample_rounds_used: rounds,
        fake_vertex_count: padded - n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generate, GenKind, GenSpec};
    use crate::lll::{bad_event, c_prime_for_parts};

    fn instance(n: usize, d: usize, seed: u64) -> Digraph {
        generate(&GenSpec::new(GenKind::CdRegular, n, d, seed).with_c(2.0)).unwrap()
    }

    #[test]
    fn single_part_is_trivial() {
        let d = instance(40, 8, 1);
        let cfg = LllConfig::new(2.0, 8, c_prime_for_parts(8, 1), 3);
        let cert = partition_lll(&d, &cfg).unwrap();
        assert_eq!(cert.t, 1);
        assert_eq!(cert.resample_rounds_used, 0);
        assert_eq!(cert.parts, vec![(0..40).collect::<Vec<_>>()]);
        assert_eq!(cert.min_cross_degree, 8);
        cert.verify(&d).unwrap();
    }

    #[test]
    fn two_parts_at_d128() {
        let d = instance(512, 128, 7);
        let cfg = LllConfig::new(2.0, 128, c_prime_for_parts(128, 2), 7);
        let cert = partition_lll(&d, &cfg).unwrap();
        cert.verify(&d).unwrap();
        assert_eq!(cert.sizes, vec![256, 256]);
        assert_eq!(cert.fake_vertex_count, 0);
        assert!(cert.min_cross_degree >= cfg.degree_floor_ceil());
        assert_eq!(partition_lll(&d, &cfg).unwrap(), cert);
    }

    #[test]
    fn padding_and_no_bad_events() {
        let d = instance(101, 60, 2);
        let cfg = LllConfig::new(2.0, 60, c_prime_for_parts(60, 3), 11);
        let cert = partition_lll(&d, &cfg).unwrap();
        cert.verify(&d).unwrap();
        assert_eq!(cert.fake_vertex_count, 1);
        assert_eq!(cert.sizes.iter().sum::<usize>(), 101);
        for part in &cert.parts {
            let mut mask = vec![false; 101];
            part.iter().for_each(|&v| mask[v] = true);
            assert!(d.vertices().all(|v| !bad_event(&d, v, &mask, 3).unwrap()));
        }
    }

    #[test]
    fn rejects_irregular_input_and_round_cap() {
        let star = Digraph::new(4, [(0, 1), (1, 0), (2, 0), (3, 0)]).unwrap();
        let cfg = LllConfig::new(1.0, 1, 1.0, 0);
        assert!(partition_lll(&star, &cfg).is_err());

        // With d = 6 and t = 3 every vertex needs exactly two out-neighbours
        // in each part; 50 rounds cannot get all 60 vertices there.
        let d = instance(60, 6, 5);
        let mut cfg = LllConfig::new(2.0, 6, c_prime_for_parts(6, 3), 0);
        cfg.max_resample_rounds = 50;
        assert_eq!(partition_lll(&d, &cfg), Err(LllError::NotConverged(50)));
    }

    #[test]
    fn verify_catches_tampering() {
        let d = instance(64, 16, 4);
        let cfg = LllConfig::new(2.0, 16, c_prime_for_parts(16, 2), 4);
        let cert = partition_lll(&d, &cfg).unwrap();
        let mut bad = cert.clone();
        let v = bad.parts[0].pop().unwrap();
        bad.parts[1].push(v);
        assert!(bad.verify(&d).is_err());
        let mut bad = cert;
        bad.min_cross_degree += 1;
        assert!(bad.verify(&d).is_err());
    }

    #[test]
    fn block_permutations_are_uniform() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut freq = std::collections::HashMap::new();
        let draws = 10_000.0f64;
        for _ in 0..draws as usize {
            let mut block = [0u8, 1, 2, 3];
            block.shuffle(&mut rng);
            *freq.entry(block).or_insert(0usize) += 1;
        }
        assert_eq!(freq.len(), 24);
        let p = 1.0 / 24.0;
        let sigma = (draws * p * (1.0 - p)).sqrt();
        for &count in freq.values() {
            assert!((count as f64 - draws * p).abs() <= 5.0 * sigma, "{count}");
        }
    }
}
