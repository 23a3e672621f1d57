// SPDX-License-Identifier: Apache-2.0

use super::{instance_seed, Row, RowStatus, Suite, SuiteReport, SweepConfig};
use crate::constructions::{generate, GenKind, GenSpec};
use crate::graph::Digraph;
use crate::lll::{
    c_prime_for_parts, lll_feasibility, partition_lll, stitch_long_path, LllConfig,
    PartitionCertificate,
};

/// One `(C, d)`-regular instance per `(d, multiplier)` pair, `n = multiplier·d`.
struct LllInstance {
    id: String,
    seed: u64,
    d: usize,
    graph: Result<Digraph, String>,
}

fn lll_instances(cfg: &SweepConfig) -> Vec<LllInstance> {
    let pairs: Vec<(usize, usize)> = cfg
        .degrees
        .iter()
        .flat_map(|&d| cfg.multipliers.iter().map(move |&m| (d, m)))
        .collect();
    cfg.exec.map(&pairs, |&(d, m)| {
        let index = pairs.iter().position(|&p| p == (d, m)).expect("present");
        let seed = instance_seed(cfg.seed, index);
        let spec = GenSpec::new(GenKind::CdRegular, m * d, d, seed).with_c(cfg.in_factor);
        LllInstance {
            id: format!("cd-d{d}-n{}", m * d),
            seed,
            d,
            graph: generate(&spec).map_err(|e| e.to_string()),
        }
    })
}

fn lll_config(cfg: &SweepConfig, inst: &LllInstance) -> LllConfig {
    let c_prime = cfg
        .c_prime
        .unwrap_or_else(|| c_prime_for_parts(inst.d, cfg.parts));
    LllConfig {
        max_resample_rounds: cfg.max_resample_rounds,
        ..LllConfig::new(cfg.in_factor, inst.d, c_prime, inst.seed)
    }
}

/// Runs the resampler and recounts the certificate.
fn certify(cfg: &SweepConfig, inst: &LllInstance) -> (Row, Option<PartitionCertificate>) {
    let lll = lll_config(cfg, inst);
    let feasibility = lll_feasibility(&lll).ok();
    let row = Row::new(inst.id.clone())
        .col("d", inst.d)
        .col("t", lll.parts())
        .col("c_prime", format!("{:.6}", lll.c_prime))
        .col(
            "inequality_value",
            feasibility.map_or(String::new(), |f| format!("{:.4e}", f.inequality_value)),
        )
        .col("degree_floor", lll.degree_floor_ceil());
    let d = match &inst.graph {
        Ok(d) => d,
        Err(e) => {
            return (
                row.col("n", "").col("error", e).status(RowStatus::Fail),
                None,
            )
        }
    };
    let row = row.col("n", d.vertex_count());
    match partition_lll(d, &lll) {
        Ok(cert) => {
            let verified = cert.verify(d);
            let sizes: Vec<String> = cert.sizes.iter().map(ToString::to_string).collect();
            let row = row
                .col("sizes", sizes.join(" "))
                .col("min_cross_degree", cert.min_cross_degree)
                .col("resample_rounds", cert.resample_rounds_used)
                .col("verified", verified.is_ok());
            (row.check(verified.is_ok()), Some(cert))
        }
        Err(e) => (row.col("error", e).status(RowStatus::Fail), None),
    }
}

/// Resampled partitions of `(C, d)`-regular digraphs, each certificate
/// checked by direct recount.
pub(super) fn partition(cfg: &SweepConfig) -> SuiteReport {
    let instances = lll_instances(cfg);
    let rows = cfg.exec.map(&instances, |inst| certify(cfg, inst).0);
    let margin = rows
        .iter()
        .filter_map(|r| {
            Some(
                r.get("min_cross_degree")?.parse::<i64>().ok()?
                    - r.get("degree_floor")?.parse::<i64>().ok()?,
            )
        })
        .min();
    SuiteReport {
        suite: Suite::Partition,
        required: rows.len(),
        probes: vec![(
            "min_cross_degree_minus_floor".into(),
            margin.map_or(String::new(), |m| m.to_string()),
        )],
        rows,
    }
}

/// Stitched paths over the certified partitions: a valid simple path of
/// length at least `t(g − 1) + t − 1`.
pub(super) fn stitch(cfg: &SweepConfig) -> SuiteReport {
    let instances = lll_instances(cfg);
    let rows = cfg.exec.map(&instances, |inst| {
        let (row, cert) = certify(cfg, inst);
        let (Some(cert), Ok(d)) = (cert, &inst.graph) else {
            return row.status(RowStatus::Fail);
        };
        let certified = row.status == RowStatus::Pass;
        let c_prime = lll_config(cfg, inst).c_prime;
        let row = row.col("c", format!("{:.6}", c_prime / 2.0));
        match stitch_long_path(d, &cert.parts) {
            Ok(result) => {
                let g = result.girth.unwrap_or(0);
                let achieved = result.path.len();
                let scale = inst.d as f64 * g as f64 / (inst.d as f64).ln();
                let valid = result.path.check(d).is_ok();
                row.col("girth", g)
                    .col("floor", result.guaranteed_floor)
                    .col("achieved", achieved)
                    .col("ratio", format!("{:.6}", achieved as f64 / scale))
                    .col("valid", valid)
                    .check(certified && valid && achieved >= result.guaranteed_floor)
            }
            Err(e) => row.col("girth", "").col("error", e).status(RowStatus::Fail),
        }
    });
    let ratios: Vec<f64> = rows
        .iter()
        .filter_map(|r| r.get("ratio")?.parse().ok())
        .collect();
    let c = rows
        .first()
        .and_then(|r| r.get("c"))
        .unwrap_or("")
        .to_owned();
    let range = if ratios.is_empty() {
        String::new()
    } else {
        let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        format!("{lo:.4}..{hi:.4}")
    };
    SuiteReport {
        suite: Suite::Stitch,
        required: rows.len(),
        probes: vec![("ratio".into(), range), ("c".into(), c)],
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SweepConfig {
        SweepConfig {
            degrees: vec![64],
            multipliers: vec![4],
            ..SweepConfig::default()
        }
    }

    #[test]
    fn partition_certificates_verify() {
        let report = partition(&small());
        assert!(report.passed(), "{}", report.summary());
        let row = &report.rows[0];
        assert_eq!(row.get("t"), Some("2"));
        assert_eq!(row.get("sizes"), Some("128 128"));
        let floor: usize = row.get("degree_floor").unwrap().parse().unwrap();
        let min: usize = row.get("min_cross_degree").unwrap().parse().unwrap();
        assert!(min >= floor);
    }

    #[test]
    fn stitched_path_meets_floor() {
        let report = stitch(&small());
        assert!(report.passed(), "{}", report.summary());
        let row = &report.rows[0];
        let floor: usize = row.get("floor").unwrap().parse().unwrap();
        let achieved: usize = row.get("achieved").unwrap().parse().unwrap();
        assert!(achieved >= floor);
    }
}
