// SPDX-License-Identifier: Apache-2.0

use super::{ratio, Row, RowStatus, Suite, SuiteReport, SweepConfig};
use crate::constructions::{
    build_counterexample, counterexample_path_formula, params_for_girth, CounterexampleParams,
};
use crate::graph::girth;
use crate::solvers::longest_path_exact_with;

const LIFT_MAX_VERTICES: usize = 20;

/// Every `(δ, a, b)` with `δ ≤ 3`, `1 ≤ a ≤ b ≤ 3` and at most 20 vertices:
/// girth `a + b` and `ℓ = δb + a − 1` exactly.
pub(super) fn lift_family(cfg: &SweepConfig) -> SuiteReport {
    let cells: Vec<CounterexampleParams> = (1..=3)
        .flat_map(|delta| (1..=3).flat_map(move |a| (a..=3).map(move |b| (delta, a, b))))
        .filter_map(|(delta, a, b)| CounterexampleParams::new(delta, a, b).ok())
        .filter(|p| p.vertex_count() <= LIFT_MAX_VERTICES)
        .collect();
    let rows = cfg.exec.map(&cells, |&p| {
        let id = format!("lift-d{}-a{}-b{}", p.delta, p.a, p.b);
        let d = build_counterexample(p);
        let g = girth(&d).value();
        let row = Row::new(id)
            .col("delta", p.delta)
            .col("a", p.a)
            .col("b", p.b)
            .col("n", d.vertex_count())
            .opt("girth", g)
            .col("expected_girth", p.predicted_girth());
        match longest_path_exact_with(&d, &cfg.limits, crate::Execution::Sequential) {
            Ok(path) => row
                .col("ell", path.len())
                .col("claimed_ell", p.claimed_longest_path())
                .col("exact_formula_ell", p.exact_longest_path())
                .col("path", join(&path.vertices))
                .check(g == Some(p.predicted_girth()) && path.len() == p.claimed_longest_path()),
            Err(e) => row
                .col("ell", "")
                .col("claimed_ell", p.claimed_longest_path())
                .col("exact_formula_ell", p.exact_longest_path())
                .col("path", e)
                .status(RowStatus::Skipped),
        }
    });
    let probes = family_probes(&rows);
    SuiteReport {
        suite: Suite::LiftFamily,
        required: rows.len(),
        rows,
        probes,
    }
}

/// Lift-family members of girth `g ∈ 4..=8` and `δ ≤ 3` within the solver
/// limits: girth exactly `g` and `ℓ` equal to the closed-form bound, which
/// is below `δ(g − 1)` whenever the closed form says so.
pub(super) fn girth_family(cfg: &SweepConfig) -> SuiteReport {
    let cells: Vec<(usize, usize)> = (4..=8)
        .flat_map(|g| (1..=3).map(move |delta| (g, delta)))
        .collect();
    let rows = cfg.exec.map(&cells, |&(g, delta)| {
        let (p, formula) = params_for_girth(g, delta).expect("g >= 2 and delta >= 1");
        debug_assert_eq!(formula, counterexample_path_formula(g, delta));
        let d = build_counterexample(p);
        let measured_girth = girth(&d).value();
        let scaled = delta * (g - 1);
        let row = Row::new(format!("girth-g{g}-d{delta}"))
            .col("g", g)
            .col("delta", delta)
            .col("a", p.a)
            .col("b", p.b)
            .col("n", d.vertex_count())
            .opt("girth", measured_girth)
            .col("formula_ell", formula)
            .col("exact_formula_ell", p.exact_longest_path())
            .col("girth_scaled_path", scaled);
        match longest_path_exact_with(&d, &cfg.limits, crate::Execution::Sequential) {
            Ok(path) => {
                let ell = path.len();
                let certified = formula >= scaled || ell < scaled;
                row.col("ell", ell)
                    .col("below_girth_scaled_path", ell < scaled)
                    .check(measured_girth == Some(g) && ell == formula && certified)
            }
            Err(_) => row
                .col("ell", "")
                .col("below_girth_scaled_path", "")
                .status(RowStatus::Skipped),
        }
    });
    let mut probes = family_probes(&rows);
    let below = rows
        .iter()
        .filter(|r| r.get("below_girth_scaled_path") == Some("true"))
        .count();
    probes.push((
        "below_girth_scaled_path".into(),
        format!("{below}/{}", rows.len()),
    ));
    SuiteReport {
        suite: Suite::GirthFamily,
        required: rows
            .iter()
            .filter(|r| r.status != RowStatus::Skipped)
            .count()
            .max(1),
        rows,
        probes,
    }
}

/// How many solved rows match the girth, the quoted closed form and the
/// exact closed form.
fn family_probes(rows: &[Row]) -> Vec<(String, String)> {
    let solved: Vec<&Row> = rows
        .iter()
        .filter(|r| r.status != RowStatus::Skipped)
        .collect();
    let matching = |a: &str, b: &str| solved.iter().filter(|r| r.get(a) == r.get(b)).count();
    let total = solved.len();
    let (claimed, exact) = if rows.first().and_then(|r| r.get("claimed_ell")).is_some() {
        (
            matching("ell", "claimed_ell"),
            matching("ell", "exact_formula_ell"),
        )
    } else {
        (
            matching("ell", "formula_ell"),
            matching("ell", "exact_formula_ell"),
        )
    };
    let girth_ok = solved
        .iter()
        .filter(|r| r.get("girth") == r.get("expected_girth").or(r.get("g")))
        .count();
    vec![
        ("girth_matches".into(), format!("{girth_ok}/{total}")),
        (
            "closed_form_ell_matches".into(),
            format!("{claimed}/{total}"),
        ),
        (
            "exact_formula_ell_matches".into(),
            format!("{exact}/{total}"),
        ),
        ("closed_form_match_rate".into(), ratio(claimed, total)),
    ]
}

fn join(vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
