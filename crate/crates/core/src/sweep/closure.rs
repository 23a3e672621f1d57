// SPDX-License-Identifier: Apache-2.0

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{instance_seed, ratio, Row, Suite, SuiteReport, SweepConfig};
use crate::graph::{girth_with, Digraph, Vertex};
use crate::solvers::{longest_path_exact_with, SolverLimits};
use crate::Execution;

/// Arc sets per parallel work item during exhaustive enumeration.
const CHUNK: u64 = 1 << 12;

/// Tallies over the digraphs of one order.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Tally {
    instances: u64,
    /// `ℓ < g − 1`.
    violations: u64,
    /// `ℓ ≥ g`.
    reaches_girth: u64,
    /// `min (ℓ − g)`.
    min_slack: Option<i64>,
    errors: u64,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.violations += other.violations;
        self.reaches_girth += other.reaches_girth;
        self.errors += other.errors;
        self.min_slack = match (self.min_slack, other.min_slack) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }

    fn record(&mut self, d: &Digraph, limits: &SolverLimits) {
        self.instances += 1;
        let Some(g) = girth_with(d, Execution::Sequential).value() else {
            // δ⁺ ≥ 1 forces a cycle.
            self.errors += 1;
            return;
        };
        match longest_path_exact_with(d, limits, Execution::Sequential) {
            Ok(path) => {
                let ell = path.len();
                if ell + 1 < g {
                    self.violations += 1;
                }
                if ell >= g {
                    self.reaches_girth += 1;
                }
                let slack = ell as i64 - g as i64;
                self.min_slack = Some(self.min_slack.map_or(slack, |m| m.min(slack)));
            }
            Err(_) => self.errors += 1,
        }
    }
}

/// The `n(n − 1)` possible arcs, tail-major, so the arcs leaving `u` occupy
/// bits `u(n − 1) .. (u + 1)(n − 1)`.
fn all_arcs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect()
}

fn has_min_outdeg_one(mask: u64, n: usize) -> bool {
    let block = (1u64 << (n - 1)) - 1;
    (0..n).all(|u| (mask >> (u * (n - 1))) & block != 0)
}

fn from_mask(n: usize, arcs: &[(Vertex, Vertex)], mask: u64) -> Digraph {
    let chosen = arcs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &a)| a);
    Digraph::new(n, chosen).expect("distinct non-loop arcs")
}

fn exhaustive(n: usize, cfg: &SweepConfig) -> Tally {
    let arcs = all_arcs(n);
    let total = 1u64 << arcs.len();
    let chunks = total.div_ceil(CHUNK) as usize;
    cfg.exec
        .map_range(0..chunks, |c| {
            let mut tally = Tally::default();
            let start = c as u64 * CHUNK;
            for mask in start..(start + CHUNK).min(total) {
                if has_min_outdeg_one(mask, n) {
                    tally.record(&from_mask(n, &arcs, mask), &cfg.limits);
                }
            }
            tally
        })
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

/// `closure_samples` uniform arc sets with `δ⁺ ≥ 1`, by rejection.
fn sampled(n: usize, cfg: &SweepConfig) -> Tally {
    let arcs = all_arcs(n);
    cfg.exec
        .map_range(0..cfg.closure_samples, |i| {
            let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(cfg.seed ^ n as u64, i));
            let mask = loop {
                let mask = rng.gen::<u64>() & ((1u64 << arcs.len()) - 1);
                if has_min_outdeg_one(mask, n) {
                    break mask;
                }
            };
            let mut tally = Tally::default();
            tally.record(&from_mask(n, &arcs, mask), &cfg.limits);
            tally
        })
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

/// `ℓ ≥ g − 1` over every labelled digraph with `δ⁺ ≥ 1` on `n` vertices,
/// one aggregated row per order. The rate of `ℓ ≥ g` is reported only.
pub(super) fn closure(cfg: &SweepConfig) -> SuiteReport {
    // Arc masks are u64, so n(n − 1) < 64.
    let top = cfg.closure_orders.min(8);
    let mut total = Tally::default();
    let rows: Vec<Row> = (2..=top)
        .map(|n| {
            let exhaustive_order = n <= cfg.closure_max_n;
            let tally = if exhaustive_order {
                exhaustive(n, cfg)
            } else {
                sampled(n, cfg)
            };
            total = total.merge(tally);
            Row::new(format!("closure-n{n}"))
                .col("n", n)
                .col(
                    "mode",
                    if exhaustive_order {
                        "exhaustive"
                    } else {
                        "sampled"
                    },
                )
                .col("instances", tally.instances)
                .col("violations", tally.violations)
                .col("reaches_girth", tally.reaches_girth)
                .col(
                    "reaches_girth_rate",
                    ratio(tally.reaches_girth as usize, tally.instances as usize),
                )
                .opt("min_ell_minus_girth", tally.min_slack)
                .col("errors", tally.errors)
                .check(tally.violations == 0 && tally.errors == 0 && tally.instances > 0)
        })
        .collect();
    SuiteReport {
        suite: Suite::Closure,
        required: rows.len(),
        rows,
        probes: vec![
            ("instances".into(), total.instances.to_string()),
            ("reaches_girth".into(), total.reaches_girth.to_string()),
            (
                "reaches_girth_rate".into(),
                ratio(total.reaches_girth as usize, total.instances as usize),
            ),
        ],
    }
}
