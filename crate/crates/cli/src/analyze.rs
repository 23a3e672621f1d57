// SPDX-License-Identifier: Apache-2.0

use clap::Args;
use girthpath::graph::girth;
use girthpath::io::digest;
use girthpath::keylemma::{
    analyze_key_lemma, bound_table, verify_path_bounds, BoundTable, KeyLemmaReport,
    PathBoundsReport,
};
use girthpath::solvers::longest_path_exact;
use girthpath::{DegreeProfile, Digraph, Girth, PathWitness, SolverLimits};
use serde::Serialize;

use crate::error::CliError;
use crate::manifest::RunManifest;
use crate::output::{emit, read_digraph, with_manifest};

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Edge list or JSON digraph.
    file: String,
    /// δ for the key-lemma analysis; defaults to the minimum out-degree.
    #[arg(long)]
    delta: Option<usize>,
    /// Skip exact longest-path work (bounds, key lemma) on large inputs.
    #[arg(long)]
    skip_exact: bool,
    /// Report destination; stdout when absent.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Debug, Serialize)]
struct AnalysisReport {
    n: usize,
    m: usize,
    oriented: bool,
    strongly_connected: bool,
    degrees: Option<DegreeProfile>,
    girth: Girth,
    bound_table: Option<BoundTable>,
    /// Absent under `--skip-exact`.
    ell: Option<usize>,
    longest_path: Option<PathWitness>,
    path_bounds: Option<PathBoundsReport>,
    key_lemma: Option<KeyLemmaReport>,
    /// Why the key-lemma analysis did not run.
    key_lemma_skipped: Option<String>,
    /// Asserted invariants that failed; the exit code is 1 iff non-empty.
    violations: Vec<String>,
}

pub fn run(args: AnalyzeArgs, limits: &SolverLimits) -> Result<(), CliError> {
    let d = read_digraph(&args.file)?;
    let mut manifest = RunManifest::new("analyze", None)?
        .param("file", &args.file)
        .param("skip_exact", args.skip_exact)
        .digest(digest(&d));
    if let Some(delta) = args.delta {
        manifest = manifest.param("delta", delta);
    }
    let report = analyze(&d, args.delta, args.skip_exact, limits)?;
    emit(args.out.as_deref(), &with_manifest(&report, &manifest))?;
    if report.violations.is_empty() {
        Ok(())
    } else {
        Err(CliError::Assertion(report.violations.join("; ")))
    }
}

fn analyze(
    d: &Digraph,
    delta: Option<usize>,
    skip_exact: bool,
    limits: &SolverLimits,
) -> Result<AnalysisReport, CliError> {
    let degrees = d.degree_profile().ok();
    let min_out = degrees.map_or(0, |p| p.min_out);
    let girth = girth(d);
    let mut violations = Vec::new();
    if let Some(Err(e)) = girth.witness().map(|w| w.check(d)) {
        violations.push(format!("girth witness: {e}"));
    }
    let mut report = AnalysisReport {
        n: d.vertex_count(),
        m: d.arc_count(),
        oriented: d.is_oriented(),
        strongly_connected: d.is_strongly_connected(),
        degrees,
        bound_table: (d.vertex_count() > 0)
            .then(|| bound_table(d.vertex_count(), min_out, girth.value())),
        girth,
        ell: None,
        longest_path: None,
        path_bounds: None,
        key_lemma: None,
        key_lemma_skipped: None,
        violations,
    };
    if skip_exact {
        report.key_lemma_skipped = Some("--skip-exact".into());
        return Ok(report);
    }
    let path = longest_path_exact(d, limits)?;
    if let Err(e) = path.check(d) {
        report.violations.push(format!("longest path witness: {e}"));
    }
    let bounds = verify_path_bounds(d, limits)?;
    report.violations.extend(
        bounds
            .violations()
            .map(|b| format!("bound {} violated", b.name)),
    );
    report.ell = Some(path.len());
    report.longest_path = Some(path);
    report.path_bounds = Some(bounds);

    let delta = delta.unwrap_or(min_out);
    if delta > min_out {
        return Err(CliError::Usage(format!(
            "--delta {delta} exceeds the minimum out-degree {min_out}"
        )));
    }
    let skipped = if !d.is_oriented() {
        Some("input has a 2-cycle".to_owned())
    } else if delta == 0 {
        Some("δ = 0".to_owned())
    } else {
        None
    };
    match skipped {
        Some(reason) => report.key_lemma_skipped = Some(reason),
        None => {
            let lemma = analyze_key_lemma(d, delta, limits)?;
            report.violations.extend(lemma.invariant_violations());
            if lemma.hypotheses_hold {
                for claim in lemma.claims.iter().filter(|c| c.status.is_violated()) {
                    report
                        .violations
                        .push(format!("claim {:?} violated", claim.claim));
                }
            }
            report.key_lemma = Some(lemma);
        }
    }
    Ok(report)
}
