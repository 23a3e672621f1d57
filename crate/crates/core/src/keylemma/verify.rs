// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use super::bounds::{bound_table, BoundTable, Rational};
use crate::graph::{girth, Digraph};
use crate::solvers::{longest_path_exact, SolverError, SolverLimits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    Satisfied,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    /// What the bound constrains: `ell` or `girth`.
    pub quantity: String,
    pub value: Option<f64>,
    pub status: BoundStatus,
}

/// Open-problem probes. Recorded, never asserted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureProbes {
    /// `ℓ ≥ δ(g − 1)`; known to fail in general.
    pub girth_scaled_path_holds: Option<bool>,
    /// `ℓ ≥ 2δ` for oriented inputs.
    pub two_delta_path: Option<bool>,
    /// `ℓ / (g·δ)` for finite `g` and `δ ≥ 1`.
    pub ell_over_g_delta: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathBoundsReport {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub girth: Option<usize>,
    pub ell: usize,
    pub oriented: bool,
    pub bounds: Vec<BoundCheck>,
    pub conjecture_probes: ConjectureProbes,
}

impl PathBoundsReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.bounds
            .iter()
            .filter(|b| b.status == BoundStatus::Violated)
    }

    pub fn status(&self, name: &str) -> Option<BoundStatus> {
        self.bounds
            .iter()
            .find(|b| b.name == name)
            .map(|b| b.status)
    }
}

fn ratio_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn check(
    name: &str,
    quantity: &str,
    value: Option<f64>,
    applicable: bool,
    holds: bool,
) -> BoundCheck {
    BoundCheck {
        name: name.into(),
        quantity: quantity.into(),
        value,
        status: match (applicable, holds) {
            (false, _) => BoundStatus::NotApplicable,
            (true, true) => BoundStatus::Satisfied,
            (true, false) => BoundStatus::Violated,
        },
    }
}

/// Exact `ℓ`, `g` and `δ⁺`, checked against every applicable proven bound.
///
/// Bounds checked, by name:
/// - `girth_path`: `ℓ ≥ 2δ(1 − 1/g)` for `g ≥ 3` (or acyclic);
/// - `oriented_path`: `ℓ ≥ 1.5δ` for oriented graphs;
/// - `girth4_path`: `ℓ ≥ 1.6535δ` for `g ≥ 4` (or acyclic);
/// - `large_girth_path`: `ℓ ≥ (2 − 1/(g − 73))δ` for `g ≥ 74`;
/// - `short_cycle`: `g ≤ ⌈2n/(δ + 1)⌉` for `δ ≥ 1`;
/// - `triangle_threshold`: `g = 3` for oriented graphs with `δ ≥ 0.3465n`.
pub fn verify_path_bounds(
    d: &Digraph,
    limits: &SolverLimits,
) -> Result<PathBoundsReport, SolverError> {
    let ell = longest_path_exact(d, limits)?.len();
    let g = girth(d).value();
    let delta = d.min_out_degree().unwrap_or(0);
    let oriented = d.is_oriented();
    let table: BoundTable = bound_table(d.vertex_count(), delta, g);
    let ell_r = Rational::from_integer(ell as i64);
    let g_at_least = |k: usize| g.is_none_or(|g| g >= k);

    let bounds = vec![
        check(
            "girth_path",
            "ell",
            Some(ratio_f64(table.girth_path)),
            g_at_least(3),
            ell_r >= table.girth_path,
        ),
        check(
            "oriented_path",
            "ell",
            Some(ratio_f64(table.oriented_path)),
            oriented,
            ell_r >= table.oriented_path,
        ),
        check(
            "girth4_path",
            "ell",
            Some(ratio_f64(table.girth4_path)),
            g_at_least(4),
            ell_r >= table.girth4_path,
        ),
        check(
            "large_girth_path",
            "ell",
            table.large_girth_path.map(ratio_f64),
            table.large_girth_path.is_some(),
            table.large_girth_path.is_none_or(|s| ell_r >= s),
        ),
        check(
            "short_cycle",
            "girth",
            Some(table.short_cycle as f64),
            delta >= 1,
            g.is_some_and(|g| g as i64 <= table.short_cycle),
        ),
        check(
            "triangle_threshold",
            "girth",
            Some(ratio_f64(table.triangle_threshold)),
            oriented
                && Rational::from_integer(delta as i64) >= table.triangle_threshold
                && delta >= 1,
            g == Some(3),
        ),
    ];

    let conjecture_probes = ConjectureProbes {
        girth_scaled_path_holds: table.girth_scaled_path.map(|t| ell as i64 >= t),
        two_delta_path: oriented.then_some(ell >= 2 * delta),
        ell_over_g_delta: g
            .filter(|_| delta >= 1)
            .map(|g| ell as f64 / (g * delta) as f64),
    };

    Ok(PathBoundsReport {
        n: d.vertex_count(),
        m: d.arc_count(),
        delta,
        girth: g,
        ell,
        oriented,
        bounds,
        conjecture_probes,
    })
}
