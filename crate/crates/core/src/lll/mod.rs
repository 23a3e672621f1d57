// SPDX-License-Identifier: Apache-2.0

//! Balanced vertex partitions with an out-degree floor into every part, built
//! by resampling block permutations, and the long path stitched across them.
//!
//! Logarithms are natural throughout.

mod partition;
mod stitch;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Digraph, Vertex};

pub use partition::{partition_lll, PartitionCertificate};
pub use stitch::{long_path_driver, stitch_long_path, DriverOverrides, DriverReport, StitchResult};

pub const DEFAULT_MAX_RESAMPLE_ROUNDS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LllError {
    #[error("d must be at least 2 so that ln d > 0 (got {0})")]
    DegreeTooSmall(usize),
    #[error("c' must be positive and finite (got {0})")]
    InvalidCPrime(f64),
    #[error("C must be at least 1 (got {0})")]
    InvalidC(f64),
    #[error("number of parts must be at least 1")]
    NoParts,
    #[error("vertex {vertex} has out-degree {degree} < d = {d}")]
    OutDegreeBelow {
        vertex: Vertex,
        degree: usize,
        d: usize,
    },
    #[error("vertex {vertex} has in-degree {degree} > C*d = {cap}")]
    InDegreeAbove {
        vertex: Vertex,
        degree: usize,
        cap: f64,
    },
    #[error("resampling did not converge within {0} rounds")]
    NotConverged(u64),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

/// Parameters of a partition run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LllConfig {
    /// In-degree factor: every in-degree is at most `C·d`.
    #[serde(rename = "C")]
    pub c: f64,
    pub d: usize,
    pub c_prime: f64,
    pub seed: u64,
    pub max_resample_rounds: u64,
}

impl LllConfig {
    pub fn new(c: f64, d: usize, c_prime: f64, seed: u64) -> Self {
        LllConfig {
            c,
            d,
            c_prime,
            seed,
            max_resample_rounds: DEFAULT_MAX_RESAMPLE_ROUNDS,
        }
    }

    pub fn validate(&self) -> Result<(), LllError> {
        if self.d < 2 {
            return Err(LllError::DegreeTooSmall(self.d));
        }
        if !(self.c_prime > 0.0 && self.c_prime.is_finite()) {
            return Err(LllError::InvalidCPrime(self.c_prime));
        }
        if !(self.c >= 1.0 && self.c.is_finite()) {
            return Err(LllError::InvalidC(self.c));
        }
        Ok(())
    }

    /// `t = ⌊c′·d / ln d⌋`.
    pub fn parts(&self) -> usize {
        parts_for(self.d, self.c_prime)
    }

    /// `ln d / (2c′)`.
    pub fn degree_floor(&self) -> f64 {
        (self.d as f64).ln() / (2.0 * self.c_prime)
    }

    /// `⌈ln d / (2c′)⌉`, the integral floor every cross degree must meet.
    pub fn degree_floor_ceil(&self) -> usize {
        self.degree_floor().ceil() as usize
    }
}

fn parts_for(d: usize, c_prime: f64) -> usize {
    (c_prime * d as f64 / (d as f64).ln()).floor() as usize
}

/// A `c′` with `⌊c′·d / ln d⌋ = t`: the midpoint `(t + ½)·ln d / d`.
pub fn c_prime_for_parts(d: usize, t: usize) -> f64 {
    (t as f64 + 0.5) * (d as f64).ln() / d as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Feasibility {
    pub t: usize,
    pub feasible: bool,
    pub inequality_value: f64,
}

/// `2·e^{−d/(12t) + 1}·(C·(dt)² + 1)`, the quantity that must stay below 1.
pub fn inequality_value(c: f64, d: usize, t: usize) -> f64 {
    let (d, t) = (d as f64, t as f64);
    2.0 * (-d / (12.0 * t) + 1.0).exp() * (c * (d * t).powi(2) + 1.0)
}

/// Evaluates `t` and the resampling inequality for `cfg`.
pub fn lll_feasibility(cfg: &LllConfig) -> Result<Feasibility, LllError> {
    cfg.validate()?;
    let t = cfg.parts();
    if t == 0 {
        return Ok(Feasibility {
            t,
            feasible: false,
            inequality_value: f64::INFINITY,
        });
    }
    let value = inequality_value(cfg.c, cfg.d, t);
    Ok(Feasibility {
        t,
        feasible: value < 1.0,
        inequality_value: value,
    })
}

/// Largest `c′ ∈ {2⁻¹⁰, …, 2⁰}` for which the inequality holds with `t ≥ 1`.
pub fn default_c_prime(c: f64, d: usize) -> Option<f64> {
    (0..=10).map(|k| 0.5f64.powi(k)).find(|&c_prime| {
        lll_feasibility(&LllConfig::new(c, d, c_prime, 0)).is_ok_and(|f| f.feasible)
    })
}

/// `|d⁺(v, part) − d⁺(v)/t| ≥ d⁺(v)/(2t)`, in integers:
/// `|2t·d⁺(v, part) − 2d⁺(v)| ≥ d⁺(v)`.
pub fn bad_event_counts(out_degree: usize, in_part: usize, t: usize) -> bool {
    let lhs = (2 * t * in_part).abs_diff(2 * out_degree);
    lhs >= out_degree
}

/// The bad event for `v` and `part` (membership mask over `V(D)`).
pub fn bad_event(d: &Digraph, v: Vertex, part: &[bool], t: usize) -> Result<bool, LllError> {
    if t < 1 {
        return Err(LllError::NoParts);
    }
    let in_part = d.out_degree_into(v, part);
    Ok(bad_event_counts(d.out_degree(v), in_part, t))
}

/// Checks `d⁺(v) ≥ d` and `d⁻(v) ≤ C·d` for every vertex.
pub fn check_cd_regular(d: &Digraph, c: f64, degree: usize) -> Result<(), LllError> {
    let cap = c * degree as f64;
    for v in d.vertices() {
        if d.out_degree(v) < degree {
            return Err(LllError::OutDegreeBelow {
                vertex: v,
                degree: d.out_degree(v),
                d: degree,
            });
        }
        if d.in_degree(v) as f64 > cap {
            return Err(LllError::InDegreeAbove {
                vertex: v,
                degree: d.in_degree(v),
                cap,
            });
        }
    }
    Ok(())
}
