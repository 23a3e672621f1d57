// SPDX-License-Identifier: Apache-2.0

//! Seeded verification suites.
//!
//! Each suite builds its instance corpus from a base seed, checks every
//! instance independently (in parallel under [`Execution::Parallel`]) and
//! returns one [`Row`] per instance in corpus order. Rows carry named
//! columns so they can be written as CSV. Hard failures make
//! a suite fail; probes are reported alongside and never fail it.

mod closure;
mod families;
mod partition;
mod random;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::solvers::SolverLimits;
use crate::Execution;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `D(a, b)` girth and longest path against their closed forms.
    LiftFamily,
    /// Girth-`g` members of the lift family against the conjectured bound.
    GirthFamily,
    /// `ℓ ≥ 1.5δ` on strongly connected oriented graphs.
    OrientedBound,
    /// `ℓ ≥ 2δ(1 − 1/g)` and every other applicable bound, for `g ≥ 3`.
    GirthBound,
    /// Witness construction and claim checkers on the oriented corpus.
    KeyLemma,
    /// `ℓ ≥ g − 1` over every small labelled digraph with `δ⁺ ≥ 1`.
    Closure,
    /// Resampled balanced partitions with a certified degree floor.
    Partition,
    /// Stitched paths across certified partitions.
    Stitch,
    /// Exact solvers against naive exhaustive search.
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::LiftFamily,
        Suite::GirthFamily,
        Suite::OrientedBound,
        Suite::GirthBound,
        Suite::KeyLemma,
        Suite::Closure,
        Suite::Partition,
        Suite::Stitch,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LiftFamily => "lift-family",
            Suite::GirthFamily => "girth-family",
            Suite::OrientedBound => "oriented-bound",
            Suite::GirthBound => "girth-bound",
            Suite::KeyLemma => "key-lemma",
            Suite::Closure => "closure",
            Suite::Partition => "partition",
            Suite::Stitch => "stitch",
            Suite::Oracle => "oracle",
        }
    }

    /// Corpus size used when [`SweepConfig::instances`] is unset.
    pub fn default_instances(self) -> usize {
        match self {
            Suite::OrientedBound | Suite::GirthBound | Suite::KeyLemma => 300,
            Suite::Oracle => 500,
            _ => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!(
                    "unknown suite `{s}` (expected one of: {})",
                    names.join(", ")
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub seed: u64,
    /// Corpus size for the random suites; `None` uses the suite default.
    pub instances: Option<usize>,
    pub limits: SolverLimits,
    /// The closure suite covers every order `2..=closure_orders`.
    pub closure_orders: usize,
    /// Largest `n` enumerated exhaustively by the closure suite; larger
    /// orders are sampled.
    pub closure_max_n: usize,
    /// Arc sets sampled per order above the exhaustive range.
    pub closure_samples: usize,
    /// Out-degrees `d` of the partition and stitch corpora.
    pub degrees: Vec<usize>,
    /// Vertex counts as multiples of `d`.
    pub multipliers: Vec<usize>,
    /// In-degree factor `C`.
    pub in_factor: f64,
    /// Number of parts `t`; fixes `c′ = (t + ½)·ln d / d` unless `c_prime`
    /// is set.
    pub parts: usize,
    pub c_prime: Option<f64>,
    pub max_resample_rounds: u64,
    #[serde(skip)]
    pub exec: Execution,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: 0,
            instances: None,
            limits: SolverLimits::default(),
            closure_orders: 5,
            closure_max_n: 5,
            closure_samples: 10_000,
            degrees: vec![64, 128],
            multipliers: vec![4, 8],
            in_factor: 2.0,
            parts: 2,
            c_prime: None,
            max_resample_rounds: crate::lll::DEFAULT_MAX_RESAMPLE_ROUNDS,
            exec: Execution::default(),
        }
    }
}

impl SweepConfig {
    fn instances_for(&self, suite: Suite) -> usize {
        self.instances.unwrap_or(suite.default_instances())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Pass,
    Fail,
    /// Outside the solver limits; neither passes nor fails.
    Skipped,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Pass => "pass",
            RowStatus::Fail => "fail",
            RowStatus::Skipped => "skipped",
        })
    }
}

/// One checked instance. Rows of a suite share their column names, except
/// that a row whose instance could not be built or solved may stop early and
/// carry an `error` column instead.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub instance_id: String,
    pub status: RowStatus,
    pub columns: Vec<(String, String)>,
}

impl Row {
    fn new(instance_id: impl Into<String>) -> Self {
        Row {
            instance_id: instance_id.into(),
            status: RowStatus::Pass,
            columns: Vec::new(),
        }
    }

    fn col(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.columns.push((name.to_owned(), value.to_string()));
        self
    }

    fn opt<T: fmt::Display>(self, name: &str, value: Option<T>) -> Self {
        let text = value.map_or(String::new(), |v| v.to_string());
        self.col(name, text)
    }

    fn status(mut self, status: RowStatus) -> Self {
        self.status = status;
        self
    }

    fn check(self, ok: bool) -> Self {
        self.status(if ok { RowStatus::Pass } else { RowStatus::Fail })
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.columns
            .iter()
            .find(|(key, _)| key == name)
            .map(|(_, value)| value.as_str())
    }

    /// `instance_id`, `status`, then the suite columns.
    pub fn header(&self) -> Vec<&str> {
        ["instance_id", "status"]
            .into_iter()
            .chain(self.columns.iter().map(|(key, _)| key.as_str()))
            .collect()
    }

    pub fn record(&self) -> Vec<String> {
        [self.instance_id.clone(), self.status.to_string()]
            .into_iter()
            .chain(self.columns.iter().map(|(_, value)| value.clone()))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub rows: Vec<Row>,
    /// Report-only observations, never part of pass/fail.
    pub probes: Vec<(String, String)>,
    /// Minimum number of passing rows for the suite to pass.
    pub required: usize,
}

impl SuiteReport {
    pub fn count(&self, status: RowStatus) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.status == RowStatus::Fail)
    }

    pub fn passed(&self) -> bool {
        self.count(RowStatus::Fail) == 0 && self.count(RowStatus::Pass) >= self.required
    }

    pub fn probe(&self, name: &str) -> Option<&str> {
        self.probes
            .iter()
            .find(|(key, _)| key == name)
            .map(|(_, value)| value.as_str())
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} pass, {} fail, {} skipped, {} required)",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.count(RowStatus::Pass),
            self.count(RowStatus::Fail),
            self.count(RowStatus::Skipped),
            self.required
        )
    }
}

/// Per-instance seed derived from the suite seed.
fn instance_seed(base: u64, index: usize) -> u64 {
    base ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn ratio(numer: usize, denom: usize) -> String {
    if denom == 0 {
        String::new()
    } else {
        format!("{:.4}", numer as f64 / denom as f64)
    }
}

pub fn run(suite: Suite, cfg: &SweepConfig) -> SuiteReport {
    match suite {
        Suite::LiftFamily => families::lift_family(cfg),
        Suite::GirthFamily => families::girth_family(cfg),
        Suite::OrientedBound => random::oriented_bound(cfg),
        Suite::GirthBound => random::girth_bound(cfg),
        Suite::KeyLemma => random::key_lemma(cfg),
        Suite::Closure => closure::closure(cfg),
        Suite::Partition => partition::partition(cfg),
        Suite::Stitch => partition::stitch(cfg),
        Suite::Oracle => random::oracle(cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>(), Ok(suite));
            assert_eq!(
                serde_json::to_string(&suite).unwrap(),
                format!("\"{}\"", suite.name())
            );
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn rows_share_a_header() {
        let row = Row::new("x-1")
            .col("n", 3)
            .opt::<usize>("girth", None)
            .check(false);
        assert_eq!(row.header(), vec!["instance_id", "status", "n", "girth"]);
        assert_eq!(row.record(), vec!["x-1", "fail", "3", ""]);
        assert_eq!(row.get("n"), Some("3"));
    }

    #[test]
    fn instance_seeds_differ() {
        let seeds: std::collections::HashSet<u64> =
            (0..1000).map(|i| instance_seed(7, i)).collect();
        assert_eq!(seeds.len(), 1000);
    }
}
