// SPDX-License-Identifier: Apache-2.0

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{instance_seed, ratio, Row, RowStatus, Suite, SuiteReport, SweepConfig};
use crate::brute;
use crate::constructions::{generate, GenKind, GenSpec};
use crate::graph::{girth_with, Digraph};
use crate::keylemma::{analyze_key_lemma, verify_path_bounds, BoundStatus, ClaimId, Outcome};
use crate::solvers::{longest_path_exact_with, SolverLimits};
use crate::Execution;

const MAX_N: usize = 12;
const GENERATION_ATTEMPTS: usize = 2000;

/// A strongly connected oriented instance: the first strong component with
/// minimum out-degree `requested` of a seeded oriented graph on at most 12
/// vertices.
struct OrientedInstance {
    id: String,
    d: Digraph,
    requested: usize,
}

fn oriented_instance(base: u64, index: usize) -> Option<OrientedInstance> {
    let requested = 1 + index % 3;
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(base, index));
    let n = rng.gen_range(2 * requested + 1..=MAX_N);
    (0..GENERATION_ATTEMPTS).find_map(|_| {
        let spec = GenSpec::new(GenKind::OrientedMinOutdeg, n, requested, rng.gen());
        let d = generate(&spec).ok()?;
        let (component, _) = d.min_outdeg_strong_subgraph(requested)?;
        Some(OrientedInstance {
            id: format!("oriented-{index:04}-n{n}-d{requested}"),
            d: component,
            requested,
        })
    })
}

fn oriented_corpus(cfg: &SweepConfig, suite: Suite) -> Vec<(usize, Option<OrientedInstance>)> {
    let count = cfg.instances_for(suite);
    cfg.exec
        .map_range(0..count, |i| (i, oriented_instance(cfg.seed, i)))
}

fn generation_failure(index: usize) -> Row {
    Row::new(format!("instance-{index:04}"))
        .col("error", "generation failed")
        .status(RowStatus::Fail)
}

/// `ℓ ≥ 1.5δ` on strongly connected oriented graphs, `δ = δ⁺(D)`.
pub(super) fn oriented_bound(cfg: &SweepConfig) -> SuiteReport {
    let corpus = oriented_corpus(cfg, Suite::OrientedBound);
    let rows = cfg.exec.map(&corpus, |(index, instance)| {
        let Some(inst) = instance else {
            return generation_failure(*index);
        };
        let d = &inst.d;
        let delta = d.min_out_degree().unwrap_or(0);
        let row = Row::new(inst.id.clone())
            .col("n", d.vertex_count())
            .col("m", d.arc_count())
            .col("requested_delta", inst.requested)
            .col("delta", delta)
            .opt("girth", girth_with(d, Execution::Sequential).value())
            .col("bound", 1.5 * delta as f64);
        match longest_path_exact_with(d, &cfg.limits, Execution::Sequential) {
            Ok(path) => {
                let ell = path.len();
                row.col("ell", ell)
                    .col("two_delta_path", ell >= 2 * delta)
                    .check(2 * ell >= 3 * delta && d.is_oriented() && d.is_strongly_connected())
            }
            Err(e) => row
                .col("ell", "")
                .col("two_delta_path", e)
                .status(RowStatus::Fail),
        }
    });
    let long = rows
        .iter()
        .filter(|r| r.get("two_delta_path") == Some("true"))
        .count();
    SuiteReport {
        suite: Suite::OrientedBound,
        required: cfg.instances_for(Suite::OrientedBound),
        probes: vec![
            ("two_delta_path".into(), format!("{long}/{}", rows.len())),
            ("two_delta_path_rate".into(), ratio(long, rows.len())),
        ],
        rows,
    }
}

/// Random digraphs with `3 ≤ g < ∞` and `n ≤ 12`: even indices are
/// out-regular graphs with `d ≤ 2`, resampled until they have no 2-cycle;
/// odd indices are oriented graphs with `δ⁺ ≥ d`, `d ≤ 3`. Out-regular graphs
/// with `d = 3` on at most 12 vertices almost never avoid a 2-cycle.
fn girth_instance(base: u64, index: usize) -> Option<(String, Digraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(base, index));
    let (kind, degree, low) = if index.is_multiple_of(2) {
        let degree = 1 + (index / 2) % 2;
        (GenKind::OutRegular, degree, 4 * degree)
    } else {
        let degree = 1 + (index / 2) % 3;
        (GenKind::OrientedMinOutdeg, degree, 2 * degree + 1)
    };
    let n = rng.gen_range(low..=MAX_N);
    (0..GENERATION_ATTEMPTS).find_map(|_| {
        let d = generate(&GenSpec::new(kind, n, degree, rng.gen())).ok()?;
        let g = girth_with(&d, Execution::Sequential).value()?;
        (g >= 3).then(|| (format!("girth-{index:04}-{kind}-n{n}-d{degree}"), d))
    })
}

/// `ℓ ≥ 2δ(1 − 1/g)` and every other applicable proven bound.
pub(super) fn girth_bound(cfg: &SweepConfig) -> SuiteReport {
    let count = cfg.instances_for(Suite::GirthBound);
    let rows = cfg.exec.map_range(0..count, |i| {
        let Some((id, d)) = girth_instance(cfg.seed, i) else {
            return generation_failure(i);
        };
        let row = Row::new(id)
            .col("n", d.vertex_count())
            .col("m", d.arc_count());
        match verify_path_bounds(&d, &cfg.limits) {
            Ok(report) => {
                let g = report.girth.unwrap_or(0);
                let delta = report.delta;
                let violated: Vec<&str> = report.violations().map(|b| b.name.as_str()).collect();
                let girth_path_ok = 2 * delta * (g - 1) <= report.ell * g;
                row.col("delta", delta)
                    .col("girth", g)
                    .col("ell", report.ell)
                    .col("bound", 2.0 * delta as f64 * (1.0 - 1.0 / g as f64))
                    .col("girth_path", status_name(report.status("girth_path")))
                    .col("violated_bounds", violated.join(";"))
                    .opt(
                        "ell_over_g_delta",
                        report
                            .conjecture_probes
                            .ell_over_g_delta
                            .map(|r| format!("{r:.4}")),
                    )
                    .check(g >= 3 && girth_path_ok && violated.is_empty())
            }
            Err(e) => row.col("delta", "").col("error", e).status(RowStatus::Fail),
        }
    });
    let min_ratio = rows
        .iter()
        .filter_map(|r| r.get("ell_over_g_delta")?.parse::<f64>().ok())
        .fold(f64::INFINITY, f64::min);
    SuiteReport {
        suite: Suite::GirthBound,
        required: count,
        probes: vec![("min_ell_over_g_delta".into(), format!("{min_ratio:.4}"))],
        rows,
    }
}

fn status_name(status: Option<BoundStatus>) -> &'static str {
    match status {
        Some(BoundStatus::Satisfied) => "satisfied",
        Some(BoundStatus::Violated) => "violated",
        Some(BoundStatus::NotApplicable) | None => "not_applicable",
    }
}

/// Key-lemma analysis on the oriented corpus: every report is structurally
/// valid, and whenever the working digraph meets the proof hypotheses no
/// claim checker finds a counterwitness.
pub(super) fn key_lemma(cfg: &SweepConfig) -> SuiteReport {
    let corpus = oriented_corpus(cfg, Suite::KeyLemma);
    let rows = cfg.exec.map(&corpus, |(index, instance)| {
        let Some(inst) = instance else {
            return generation_failure(*index);
        };
        let d = &inst.d;
        let delta = d.min_out_degree().unwrap_or(0);
        let row = Row::new(inst.id.clone())
            .col("n", d.vertex_count())
            .col("delta", delta);
        let report = match analyze_key_lemma(d, delta, &cfg.limits) {
            Ok(report) => report,
            Err(e) => return row.col("error", e).status(RowStatus::Fail),
        };
        let claim = |id: ClaimId| {
            report.claim(id).map_or("not_run", |status| {
                if status.holds() {
                    "holds"
                } else if status.is_violated() {
                    "violated"
                } else {
                    "not_applicable"
                }
            })
        };
        let violations = report.invariant_violations();
        let claims_violated = report.claims.iter().any(|c| c.status.is_violated());
        let outcome = match report.outcome {
            Outcome::LongPath => "long_path",
            Outcome::SmallSubgraph => "small_subgraph",
        };
        row.col("ell", report.ell)
            .col("working_ell", report.working_ell)
            .col("outcome", outcome)
            .col("hypotheses_hold", report.hypotheses_hold)
            .col("probe", report.probe.is_some())
            .col("no_two_long_cycles", claim(ClaimId::NoTwoLongCycles))
            .col("outneighbours_on_path", claim(ClaimId::OutNeighboursOnPath))
            .col(
                "predecessors_into_cycle",
                claim(ClaimId::PredecessorsIntoCycle),
            )
            .col("violations", violations.join("; "))
            .check(violations.is_empty() && !(report.hypotheses_hold && claims_violated))
    });
    let count =
        |column: &str, value: &str| rows.iter().filter(|r| r.get(column) == Some(value)).count();
    let probes = vec![
        (
            "small_subgraph".into(),
            count("outcome", "small_subgraph").to_string(),
        ),
        (
            "hypotheses_hold".into(),
            count("hypotheses_hold", "true").to_string(),
        ),
        ("witness_probes".into(), count("probe", "true").to_string()),
        (
            "claim_violations_outside_hypotheses".into(),
            rows.iter()
                .filter(|r| r.get("hypotheses_hold") == Some("false"))
                .filter(|r| r.columns.iter().any(|(_, v)| v == "violated"))
                .count()
                .to_string(),
        ),
    ];
    SuiteReport {
        suite: Suite::KeyLemma,
        required: cfg.instances_for(Suite::KeyLemma),
        rows,
        probes,
    }
}

/// Each ordered pair is an arc with probability `p`.
fn random_digraph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Digraph {
    let arcs: Vec<_> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::new(n, arcs).expect("no loops or duplicates")
}

/// Exact longest path against naive DFS (`n ≤ 6`) and girth against cycle
/// enumeration (`n ≤ 8`), on `G(n, 0.3)` digraphs.
pub(super) fn oracle(cfg: &SweepConfig) -> SuiteReport {
    let count = cfg.instances_for(Suite::Oracle);
    let bb_only = SolverLimits {
        max_dp_vertices: 1,
        ..cfg.limits
    };
    let rows = cfg.exec.map_range(0..2 * count, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(cfg.seed, i));
        if i < count {
            let n = rng.gen_range(1..=6);
            let d = random_digraph(n, 0.3, &mut rng);
            let row = Row::new(format!("path-{i:04}-n{n}"))
                .col("kind", "longest_path")
                .col("n", n);
            let expected = brute::longest_path_length(&d);
            let exact = longest_path_exact_with(&d, &cfg.limits, Execution::Sequential);
            let by_bb = longest_path_exact_with(&d, &bb_only, Execution::Sequential);
            match (exact, by_bb) {
                (Ok(a), Ok(b)) => row
                    .col("exact", a.len())
                    .col("branch_and_bound", b.len())
                    .col("naive", expected)
                    .check(
                        a.len() == expected
                            && b.len() == expected
                            && a.check(&d).is_ok()
                            && b.check(&d).is_ok(),
                    ),
                (Err(e), _) | (_, Err(e)) => row.col("exact", e).status(RowStatus::Fail),
            }
        } else {
            let n = rng.gen_range(1..=8);
            let d = random_digraph(n, 0.3, &mut rng);
            let row = Row::new(format!("girth-{:04}-n{n}", i - count))
                .col("kind", "girth")
                .col("n", n);
            let expected = brute::girth(&d);
            let found = girth_with(&d, Execution::Sequential);
            let witness_ok = found.witness().is_none_or(|w| w.check(&d).is_ok());
            row.opt("exact", found.value())
                .col("branch_and_bound", "")
                .opt("naive", expected)
                .check(found.value() == expected && witness_ok)
        }
    });
    SuiteReport {
        suite: Suite::Oracle,
        required: 2 * count,
        rows,
        probes: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(instances: usize) -> SweepConfig {
        SweepConfig {
            instances: Some(instances),
            ..SweepConfig::default()
        }
    }

    #[test]
    fn oriented_corpus_is_strongly_connected_and_oriented() {
        for i in 0..30 {
            let inst = oriented_instance(3, i).unwrap();
            assert!(inst.d.is_oriented());
            assert!(inst.d.is_strongly_connected());
            assert!(inst.d.min_out_degree().unwrap() >= inst.requested);
            assert!(inst.d.vertex_count() <= MAX_N);
        }
    }

    #[test]
    fn girth_corpus_has_girth_at_least_three() {
        for i in 0..30 {
            let (_, d) = girth_instance(5, i).unwrap_or_else(|| panic!("instance {i}"));
            assert!(girth_with(&d, Execution::Sequential).value().unwrap() >= 3);
        }
    }

    #[test]
    fn small_runs_pass() {
        for suite in [
            Suite::OrientedBound,
            Suite::GirthBound,
            Suite::KeyLemma,
            Suite::Oracle,
        ] {
            let report = super::super::run(suite, &small(20));
            assert!(report.passed(), "{}", report.summary());
        }
    }

    #[test]
    fn parallel_and_sequential_rows_match() {
        let par = SweepConfig {
            exec: Execution::Parallel,
            ..small(24)
        };
        let seq = SweepConfig {
            exec: Execution::Sequential,
            ..small(24)
        };
        assert_eq!(key_lemma(&par), key_lemma(&seq));
        assert_eq!(girth_bound(&par), girth_bound(&seq));
    }
}
