// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use super::{
    check_cd_regular, default_c_prime, lll_feasibility, partition_lll, Feasibility, LllConfig,
    LllError, PartitionCertificate, DEFAULT_MAX_RESAMPLE_ROUNDS,
};
use crate::graph::{girth, Digraph, PathWitness, Vertex};

/// A path built from one greedy maximal segment per part.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StitchResult {
    pub path: PathWitness,
    /// Arcs inside each part, in part order.
    pub segment_lengths: Vec<usize>,
    /// The `t − 1` arcs joining consecutive segments.
    pub connectors: Vec<(Vertex, Vertex)>,
    pub girth: Option<usize>,
    /// `t(g − 1) + t − 1`.
    pub guaranteed_floor: usize,
}

/// Walks a maximal path through `D[V_1]` from its smallest vertex, always
/// taking the smallest unvisited out-neighbour in the part, then crosses to
/// the smallest out-neighbour in the next part and repeats.
///
/// A segment ends only when every out-neighbour of its endpoint inside the
/// part is on it, which closes a cycle, so each segment has at least `g − 1`
/// arcs once every vertex has an out-neighbour in every part.
pub fn stitch_long_path(d: &Digraph, parts: &[Vec<Vertex>]) -> Result<StitchResult, LllError> {
    let fail = |msg: String| Err(LllError::InvalidPartition(msg));
    let n = d.vertex_count();
    if parts.is_empty() || parts.iter().any(Vec::is_empty) {
        return fail("every part must be non-empty".into());
    }
    let mut part_of = vec![usize::MAX; n];
    for (j, part) in parts.iter().enumerate() {
        for &v in part {
            if v >= n || part_of[v] != usize::MAX {
                return fail(format!("vertex {v} is out of range or repeated"));
            }
            part_of[v] = j;
        }
    }

    let mut visited = vec![false; n];
    let mut path = Vec::new();
    let mut segment_lengths = Vec::with_capacity(parts.len());
    let mut connectors = Vec::with_capacity(parts.len() - 1);
    let mut current = *parts[0].iter().min().expect("non-empty");
    for j in 0..parts.len() {
        if j > 0 {
            let from = current;
            current = match d.out_neighbours(from).iter().find(|&&w| part_of[w] == j) {
                Some(&w) => w,
                None => return fail(format!("vertex {from} has no out-neighbour in part {j}")),
            };
            connectors.push((from, current));
        }
        let start = path.len();
        loop {
            visited[current] = true;
            path.push(current);
            let next = d
                .out_neighbours(current)
                .iter()
                .find(|&&w| part_of[w] == j && !visited[w]);
            match next {
                Some(&w) => current = w,
                None => break,
            }
        }
        segment_lengths.push(path.len() - start - 1);
    }

    let t = parts.len();
    let g = girth(d).value();
    let guaranteed_floor = g.map_or(0, |g| t * (g - 1) + t - 1);
    let result = StitchResult {
        path: PathWitness::new(path),
        segment_lengths,
        connectors,
        girth: g,
        guaranteed_floor,
    };
    if result.path.len() < guaranteed_floor {
        return fail(format!(
            "stitched length {} is below t(g-1)+t-1 = {guaranteed_floor}; some endpoint lacks an out-neighbour in its own part",
            result.path.len()
        ));
    }
    Ok(result)
}

/// Optional settings for [`long_path_driver`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriverOverrides {
    /// Explicit `c′`; otherwise the largest feasible grid value.
    pub c_prime: Option<f64>,
    pub seed: u64,
    pub max_resample_rounds: u64,
}

impl Default for DriverOverrides {
    fn default() -> Self {
        DriverOverrides {
            c_prime: None,
            seed: 0,
            max_resample_rounds: DEFAULT_MAX_RESAMPLE_ROUNDS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DriverReport {
    /// `δ⁺(D)`, used as `d`.
    pub d: usize,
    /// In-degree factor `C`.
    #[serde(rename = "C")]
    pub in_factor: f64,
    pub c_prime: Option<f64>,
    /// `c′ / 2`.
    pub c: Option<f64>,
    pub feasibility: Option<Feasibility>,
    /// Why the single-part fallback ran, if it did.
    pub fallback: Option<String>,
    pub t: usize,
    pub certificate: Option<PartitionCertificate>,
    pub stitch: StitchResult,
    /// `c·d·g / ln d`, when `c` and `g` are known.
    pub target: Option<f64>,
    pub achieved: usize,
}

/// Feasibility check, partition and stitch; falls back to a single part
/// (one greedy maximal path) when `t ≤ 1` or the inequality fails.
pub fn long_path_driver(
    d: &Digraph,
    c: f64,
    overrides: DriverOverrides,
) -> Result<DriverReport, LllError> {
    let degree = d.min_out_degree().unwrap_or(0);
    check_cd_regular(d, c, degree)?;
    let c_prime = match overrides.c_prime {
        Some(c_prime) => Some(c_prime),
        None if degree >= 2 => default_c_prime(c, degree),
        None => None,
    };
    let cfg = c_prime.map(|c_prime| LllConfig {
        c,
        d: degree,
        c_prime,
        seed: overrides.seed,
        max_resample_rounds: overrides.max_resample_rounds,
    });
    let feasibility = match (&cfg, degree >= 2) {
        (Some(cfg), true) => Some(lll_feasibility(cfg)?),
        _ => None,
    };

    let fallback = match (&feasibility, c_prime) {
        _ if degree < 2 => Some(format!("d = {degree} < 2, so ln d is not positive")),
        (_, None) => Some("no grid value of c' satisfies the inequality".into()),
        (Some(f), _) if f.t <= 1 => Some(format!("t = {} <= 1", f.t)),
        (Some(f), _) if !f.feasible => Some(format!(
            "inequality value {:.3e} is not below 1",
            f.inequality_value
        )),
        _ => None,
    };

    let (certificate, parts) = match (&fallback, &cfg) {
        (None, Some(cfg)) => {
            let cert = partition_lll(d, cfg)?;
            cert.verify(d)?;
            let parts = cert.parts.clone();
            (Some(cert), parts)
        }
        _ => (None, vec![d.vertices().collect()]),
    };
    let stitch = stitch_long_path(d, &parts)?;
    let c_half = c_prime.map(|c_prime| c_prime / 2.0);
    let target = match (c_half, stitch.girth) {
        (Some(c_half), Some(g)) if degree >= 2 => {
            Some(c_half * degree as f64 * g as f64 / (degree as f64).ln())
        }
        _ => None,
    };
    Ok(DriverReport {
        d: degree,
        in_factor: c,
        c_prime,
        c: c_half,
        feasibility,
        fallback,
        t: parts.len(),
        certificate,
        achieved: stitch.path.len(),
        stitch,
        target,
    })
}
