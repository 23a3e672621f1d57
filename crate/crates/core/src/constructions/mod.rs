// SPDX-License-Identifier: Apache-2.0

//! The k-lift operation, the `D(a, b)` counterexample family and random
//! instance generators.

mod generate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Digraph, Vertex};

pub use generate::{generate, GenKind, GenSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("complete digraph needs at least one vertex")]
    EmptyComplete,
    #[error("lift depth k must be at least 1")]
    ZeroLift,
    #[error("vertex {vertex} is out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("vertex {vertex} has out-degree {degree}, but every out-degree must equal {delta}")]
    NotOutRegular {
        vertex: Vertex,
        degree: usize,
        delta: usize,
    },
    #[error("invalid lift parameters: need delta >= 1 and 1 <= a <= b (got delta={delta}, a={a}, b={b})")]
    InvalidParams { delta: usize, a: usize, b: usize },
    #[error("girth must be at least 2 (got {0})")]
    GirthTooSmall(usize),
    #[error("infeasible generator spec: {0}")]
    Infeasible(String),
    #[error("generation failed after {0} attempts")]
    GenerationFailed(usize),
}

/// Complete digraph on `m` vertices: all `m(m-1)` ordered pairs.
pub fn complete_digraph(m: usize) -> Result<Digraph, ConstructionError> {
    if m < 1 {
        return Err(ConstructionError::EmptyComplete);
    }
    let arcs = (0..m)
        .flat_map(|u| (0..m).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    Ok(Digraph::from_valid_arcs(m, arcs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftSpec {
    pub target_vertex: Vertex,
    pub k: usize,
}

/// Replaces the out-arcs of `spec.target_vertex` by a chain of `k` complete
/// bipartite layers.
///
/// Layers `U_1 … U_{k-1}` of `delta` fresh vertices each are appended with
/// consecutive ids; `U_0` is the target and `U_k` its old out-neighbourhood.
/// Requires every out-degree to equal `delta`, and preserves that.
pub fn k_lift(d: &Digraph, spec: LiftSpec, delta: usize) -> Result<Digraph, ConstructionError> {
    if spec.k < 1 {
        return Err(ConstructionError::ZeroLift);
    }
    let n = d.vertex_count();
    let v = spec.target_vertex;
    if v >= n {
        return Err(ConstructionError::VertexOutOfRange {
            vertex: v,
            vertex_count: n,
        });
    }
    if let Some(bad) = d.vertices().find(|&u| d.out_degree(u) != delta) {
        return Err(ConstructionError::NotOutRegular {
            vertex: bad,
            degree: d.out_degree(bad),
            delta,
        });
    }
    let mut arcs: Vec<(Vertex, Vertex)> = d.arcs().filter(|&(u, _)| u != v).collect();
    let mut layers: Vec<Vec<Vertex>> = vec![vec![v]];
    for i in 1..spec.k {
        let start = n + (i - 1) * delta;
        layers.push((start..start + delta).collect());
    }
    layers.push(d.out_neighbours(v).to_vec());
    for pair in layers.windows(2) {
        for &u in &pair[0] {
            arcs.extend(pair[1].iter().map(|&w| (u, w)));
        }
    }
    Ok(Digraph::from_valid_arcs(n + (spec.k - 1) * delta, arcs))
}

/// Parameters of `D(a, b)`: the complete digraph on `delta + 1` vertices with
/// vertex 0 `a`-lifted and every other vertex `b`-lifted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleParams {
    pub delta: usize,
    pub a: usize,
    pub b: usize,
}

impl CounterexampleParams {
    pub fn new(delta: usize, a: usize, b: usize) -> Result<Self, ConstructionError> {
        if delta < 1 || a < 1 || a > b {
            return Err(ConstructionError::InvalidParams { delta, a, b });
        }
        Ok(CounterexampleParams { delta, a, b })
    }

    pub fn vertex_count(&self) -> usize {
        let (delta, a, b) = (self.delta, self.a, self.b);
        delta + 1 + (a - 1) * delta + delta * (b - 1) * delta
    }

    /// Girth of the built digraph: `a + b`.
    pub fn predicted_girth(&self) -> usize {
        self.a + self.b
    }

    /// The closed form `δb + a − 1` usually quoted for this family.
    ///
    /// Exact for `δ = 1` or `b = 1` only; see [`Self::exact_longest_path`].
    pub fn claimed_longest_path(&self) -> usize {
        self.delta * self.b + self.a - 1
    }

    /// Exact longest path of the built digraph.
    ///
    /// `a + b − 1` for `δ = 1`, else `(δ + 1)b + a − 2`. With `δ ≥ 2` every
    /// lift layer has two or more vertices, so a maximum path may start and
    /// end inside the same `b`-lifted chain on disjoint layer vertices: a
    /// partial chain of `b − 1` arcs, full chains through all `δ + 1` hubs
    /// but one, and a second partial chain of `b − 1` arcs.
    pub fn exact_longest_path(&self) -> usize {
        if self.delta == 1 {
            self.a + self.b - 1
        } else {
            (self.delta + 1) * self.b + self.a - 2
        }
    }
}

pub fn build_counterexample(p: CounterexampleParams) -> Digraph {
    let base = complete_digraph(p.delta + 1).expect("delta + 1 >= 1");
    let lifts = std::iter::once(LiftSpec {
        target_vertex: 0,
        k: p.a,
    })
    .chain((1..=p.delta).map(|v| LiftSpec {
        target_vertex: v,
        k: p.b,
    }));
    lifts.fold(base, |d, spec| {
        k_lift(&d, spec, p.delta).expect("lifts preserve out-regularity")
    })
}

/// Closed-form longest-path bound of the counterexample with girth `g`:
/// `(g·δ + g − 2) / 2` for even `g`, `((g + 1)·δ + g − 3) / 2` for odd `g`.
pub fn counterexample_path_formula(g: usize, delta: usize) -> usize {
    if g.is_multiple_of(2) {
        (g * delta + g - 2) / 2
    } else {
        ((g + 1) * delta + g - 3) / 2
    }
}

/// Lift parameters realising girth `g`: `a = b = g/2` for even `g`, and
/// `a = (g−1)/2`, `b = (g+1)/2` for odd `g`. Also returns the claimed
/// longest path `δb + a − 1`, which equals [`counterexample_path_formula`].
pub fn params_for_girth(
    g: usize,
    delta: usize,
) -> Result<(CounterexampleParams, usize), ConstructionError> {
    if g < 2 {
        return Err(ConstructionError::GirthTooSmall(g));
    }
    let (a, b) = if g.is_multiple_of(2) {
        (g / 2, g / 2)
    } else {
        ((g - 1) / 2, g.div_ceil(2))
    };
    let params = CounterexampleParams::new(delta, a, b)?;
    let predicted = params.claimed_longest_path();
    debug_assert_eq!(predicted, counterexample_path_formula(g, delta));
    Ok((params, predicted))
}
