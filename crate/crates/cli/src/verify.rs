// SPDX-License-Identifier: Apache-2.0

use std::fs;

use clap::Args;
use girthpath::sweep::{run as run_suite, Suite, SuiteReport, SweepConfig};
use girthpath::{Execution, SolverLimits};
use serde::Deserialize;

use crate::error::CliError;
use crate::manifest::RunManifest;
use crate::output::{emit, with_manifest};

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// lift-family, girth-family, oriented-bound, girth-bound, key-lemma,
    /// closure, partition, stitch or oracle.
    suite: Suite,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Corpus size for the random suites.
    #[arg(long)]
    instances: Option<usize>,
    /// Out-degree of the partition and stitch instances (repeatable).
    #[arg(long)]
    d: Vec<usize>,
    /// Vertex count as a multiple of d (repeatable).
    #[arg(long)]
    multiplier: Vec<usize>,
    /// In-degree factor.
    #[arg(long = "C")]
    c: Option<f64>,
    /// Number of parts t; sets c′ = (t + ½)·ln d / d.
    #[arg(long)]
    parts: Option<usize>,
    /// Explicit c′, overriding --parts.
    #[arg(long)]
    c_prime: Option<f64>,
    #[arg(long)]
    max_resample_rounds: Option<u64>,
    /// JSON file with any of the keys C, d, c_prime, seed,
    /// max_resample_rounds; flags take precedence.
    #[arg(long)]
    config: Option<String>,
    /// Largest n enumerated exhaustively by the closure suite.
    #[arg(long)]
    closure_max_n: Option<usize>,
    /// Per-instance rows as CSV.
    #[arg(long)]
    csv: Option<String>,
    /// Full report with manifest as JSON.
    #[arg(long)]
    json: Option<String>,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(rename = "C")]
    c: Option<f64>,
    d: Option<usize>,
    c_prime: Option<f64>,
    seed: Option<u64>,
    max_resample_rounds: Option<u64>,
}

fn read_config(path: &str) -> Result<ConfigFile, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{path}: {e}")))
}

fn sweep_config(args: &VerifyArgs, limits: SolverLimits) -> Result<SweepConfig, CliError> {
    let file = match &args.config {
        Some(path) => read_config(path)?,
        None => ConfigFile::default(),
    };
    let defaults = SweepConfig::default();
    let degrees = if !args.d.is_empty() {
        args.d.clone()
    } else if let Some(d) = file.d {
        vec![d]
    } else {
        defaults.degrees.clone()
    };
    Ok(SweepConfig {
        seed: if args.seed != 0 {
            args.seed
        } else {
            file.seed.unwrap_or(0)
        },
        instances: args.instances,
        limits,
        closure_max_n: args.closure_max_n.unwrap_or(defaults.closure_max_n),
        degrees,
        multipliers: if args.multiplier.is_empty() {
            defaults.multipliers.clone()
        } else {
            args.multiplier.clone()
        },
        in_factor: args.c.or(file.c).unwrap_or(defaults.in_factor),
        parts: args.parts.unwrap_or(defaults.parts),
        c_prime: args.c_prime.or(file.c_prime),
        max_resample_rounds: args
            .max_resample_rounds
            .or(file.max_resample_rounds)
            .unwrap_or(defaults.max_resample_rounds),
        exec: if args.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        },
        ..defaults
    })
}

/// Header is the union of column names in order of first appearance, so
/// rows that stopped early still line up.
pub fn to_csv(report: &SuiteReport) -> Result<String, CliError> {
    let mut header: Vec<&str> = vec!["instance_id", "status"];
    for row in &report.rows {
        for (key, _) in &row.columns {
            if !header.contains(&key.as_str()) {
                header.push(key);
            }
        }
    }
    let mut writer = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Usage(format!("csv: {e}"));
    writer.write_record(&header).map_err(fail)?;
    for row in &report.rows {
        let status = row.status.to_string();
        let record = header.iter().map(|&name| match name {
            "instance_id" => row.instance_id.as_str(),
            "status" => status.as_str(),
            other => row.get(other).unwrap_or(""),
        });
        writer.write_record(record).map_err(fail)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields is UTF-8"))
}

pub fn run(args: VerifyArgs, limits: SolverLimits) -> Result<(), CliError> {
    let cfg = sweep_config(&args, limits)?;
    let report = run_suite(args.suite, &cfg);
    println!("{}", report.summary());
    for (key, value) in &report.probes {
        println!("  probe {key}: {value}");
    }
    for row in report.failures().take(10) {
        println!("  fail {}: {:?}", row.instance_id, row.columns);
    }
    if let Some(path) = &args.csv {
        emit(Some(path), &to_csv(&report)?)?;
    }
    if let Some(path) = &args.json {
        let manifest = RunManifest::new("verify", Some(cfg.seed))?
            .param("suite", args.suite)
            .param(
                "config",
                serde_json::to_string(&cfg).expect("configs serialize"),
            );
        emit(Some(path), &with_manifest(&report, &manifest))?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Assertion(format!("suite {} failed", args.suite)))
    }
}
