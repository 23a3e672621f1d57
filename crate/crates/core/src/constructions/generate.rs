// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ConstructionError;
use crate::graph::{Digraph, Vertex};

const MAX_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    /// Every out-degree exactly `d`.
    OutRegular,
    /// No 2-cycles and every out-degree at least `d`.
    OrientedMinOutdeg,
    /// Every out-degree exactly `d` and every in-degree at most `C·d`.
    CdRegular,
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenKind::OutRegular => "out_regular",
            GenKind::OrientedMinOutdeg => "oriented_min_outdeg",
            GenKind::CdRegular => "cd_regular",
        })
    }
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "out_regular" => Ok(GenKind::OutRegular),
            "oriented_min_outdeg" => Ok(GenKind::OrientedMinOutdeg),
            "cd_regular" => Ok(GenKind::CdRegular),
            other => Err(format!(
                "unknown kind `{other}` (expected out_regular, oriented_min_outdeg or cd_regular)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    /// Out-degree `d` (or minimum out-degree for the oriented kind).
    pub d: usize,
    /// In-degree factor `C`; only read by [`GenKind::CdRegular`].
    pub c: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, d: usize, seed: u64) -> Self {
        GenSpec {
            kind,
            n,
            d,
            c: 1.0,
            seed,
        }
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = c;
        self
    }

    fn in_cap(&self) -> usize {
        (self.c * self.d as f64).floor() as usize
    }

    fn check(&self) -> Result<(), ConstructionError> {
        let fail = |msg: String| Err(ConstructionError::Infeasible(msg));
        if self.n == 0 {
            return fail("n must be positive".into());
        }
        match self.kind {
            GenKind::OutRegular if self.d >= self.n => fail(format!(
                "out-degree {} needs more than {} vertices",
                self.d, self.n
            )),
            GenKind::OrientedMinOutdeg if 2 * self.d > self.n - 1 => fail(format!(
                "an oriented graph on {} vertices cannot have minimum out-degree {}",
                self.n, self.d
            )),
            GenKind::CdRegular if self.d >= self.n => fail(format!(
                "out-degree {} needs more than {} vertices",
                self.d, self.n
            )),
            GenKind::CdRegular if self.c.is_nan() || self.c < 1.0 => fail(format!(
                "in-degree factor C = {} must be at least 1",
                self.c
            )),
            _ => Ok(()),
        }
    }
}

/// Seeded random digraph of the requested kind.
///
/// Deterministic for a fixed spec. Attempts that cannot satisfy the degree
/// contract are retried from the same random stream a bounded number of
/// times before failing.
pub fn generate(spec: &GenSpec) -> Result<Digraph, ConstructionError> {
    spec.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..MAX_ATTEMPTS {
        let arcs = match spec.kind {
            GenKind::OutRegular => Some(out_regular(spec.n, spec.d, &mut rng)),
            GenKind::OrientedMinOutdeg => oriented(spec.n, spec.d, &mut rng),
            GenKind::CdRegular => cd_regular(spec.n, spec.d, spec.in_cap(), &mut rng),
        };
        if let Some(arcs) = arcs {
            return Ok(Digraph::new(spec.n, arcs).expect("generators emit valid arcs"));
        }
    }
    Err(ConstructionError::GenerationFailed(MAX_ATTEMPTS))
}

fn sample_heads(
    n: usize,
    v: Vertex,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> impl Iterator<Item = Vertex> {
    index::sample(rng, n - 1, d)
        .into_iter()
        .map(move |i| if i >= v { i + 1 } else { i })
}

fn out_regular(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    (0..n)
        .flat_map(|v| {
            sample_heads(n, v, d, rng)
                .map(move |w| (v, w))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn cd_regular(
    n: usize,
    d: usize,
    cap: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<(Vertex, Vertex)>> {
    let mut in_degree = vec![0usize; n];
    let mut arcs = Vec::with_capacity(n * d);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    for v in order {
        let mut heads: Vec<Vertex> = sample_heads(n, v, d, rng).collect();
        // Resample heads that are already saturated.
        for slot in 0..heads.len() {
            if in_degree[heads[slot]] < cap {
                continue;
            }
            let open: Vec<Vertex> = (0..n)
                .filter(|&u| u != v && in_degree[u] < cap && !heads.contains(&u))
                .collect();
            heads[slot] = *open.choose(rng)?;
        }
        for w in heads {
            in_degree[w] += 1;
            arcs.push((v, w));
        }
    }
    Some(arcs)
}

/// Oriented graph with every out-degree at least `d`.
///
/// Vertices are filled in random order from the pairs not yet joined by an
/// arc. When a vertex runs out of free partners, an in-arc from a vertex
/// with spare out-degree (or not yet filled) is reversed.
fn oriented(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(Vertex, Vertex)>> {
    let mut arc = vec![false; n * n];
    let mut out_degree = vec![0usize; n];
    let mut filled = vec![false; n];
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    for v in order {
        let need = d.saturating_sub(out_degree[v]);
        let mut free: Vec<Vertex> = (0..n)
            .filter(|&u| u != v && !arc[v * n + u] && !arc[u * n + v])
            .collect();
        free.shuffle(rng);
        for &u in free.iter().take(need) {
            arc[v * n + u] = true;
            out_degree[v] += 1;
        }
        while out_degree[v] < d {
            let donors: Vec<Vertex> = (0..n)
                .filter(|&u| arc[u * n + v] && (!filled[u] || out_degree[u] > d))
                .collect();
            let u = *donors.choose(rng)?;
            arc[u * n + v] = false;
            out_degree[u] -= 1;
            arc[v * n + u] = true;
            out_degree[v] += 1;
        }
        filled[v] = true;
    }
    if out_degree.iter().any(|&k| k < d) {
        return None;
    }
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if arc[u * n + v] {
                arcs.push((u, v));
            }
        }
    }
    Some(arcs)
}
