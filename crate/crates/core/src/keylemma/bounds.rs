// SPDX-License-Identifier: Apache-2.0

use num_rational::Ratio;
use serde::{Serialize, Serializer};

pub type Rational = Ratio<i64>;

fn as_f64<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(*r.numer() as f64 / *r.denom() as f64)
}

fn opt_as_f64<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => as_f64(r, s),
        None => s.serialize_none(),
    }
}

/// Closed-form path and cycle bounds for given `n`, `δ` and girth `g`.
///
/// Values are exact rationals; JSON output renders them as floats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTable {
    /// `δ(g − 1)`, the conjectured path length; absent for acyclic `g`.
    pub girth_scaled_path: Option<i64>,
    /// `2δ(1 − 1/g)`, or `2δ` when `g` is infinite.
    #[serde(serialize_with = "as_f64")]
    pub girth_path: Rational,
    /// `1.5δ`, for oriented graphs.
    #[serde(serialize_with = "as_f64")]
    pub oriented_path: Rational,
    /// `1.6535δ`, for girth at least 4.
    #[serde(serialize_with = "as_f64")]
    pub girth4_path: Rational,
    /// `(2 − 1/(g − 73))δ`, defined only for `g ≥ 74`.
    #[serde(serialize_with = "opt_as_f64")]
    pub large_girth_path: Option<Rational>,
    /// `⌈2n/(δ + 1)⌉`, an upper bound on the girth.
    pub short_cycle: i64,
    /// `0.3465n`: oriented graphs with this minimum out-degree have a
    /// directed triangle.
    #[serde(serialize_with = "as_f64")]
    pub triangle_threshold: Rational,
}

/// Evaluates every bound; `girth = None` stands for an acyclic digraph.
pub fn bound_table(n: usize, delta: usize, girth: Option<usize>) -> BoundTable {
    let n = n as i64;
    let delta = delta as i64;
    let girth_path = match girth {
        Some(g) if g > 0 => Rational::new(2 * delta * (g as i64 - 1), g as i64),
        _ => Rational::from_integer(2 * delta),
    };
    let large_girth_path = girth
        .filter(|&g| g >= 74)
        .map(|g| Rational::new(delta * (2 * (g as i64 - 73) - 1), g as i64 - 73));
    BoundTable {
        girth_scaled_path: girth.map(|g| delta * (g as i64 - 1)),
        girth_path,
        oriented_path: Rational::new(3 * delta, 2),
        girth4_path: Rational::new(16535 * delta, 10000),
        large_girth_path,
        short_cycle: (2 * n + delta) / (delta + 1),
        triangle_threshold: Rational::new(3465 * n, 10000),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert_eq!(bound_table(10, 3, None).short_cycle, 5);
        assert_eq!(bound_table(10, 3, None).girth_scaled_path, None);
        assert_eq!(
            bound_table(10, 3, None).girth_path,
            Rational::from_integer(6)
        );
        assert_eq!(
            bound_table(1, 10, Some(5)).girth_path,
            Rational::from_integer(16)
        );
        assert_eq!(bound_table(1, 10, Some(5)).girth_scaled_path, Some(40));
        assert_eq!(
            bound_table(1, 10, Some(3)).oriented_path,
            Rational::from_integer(15)
        );
        assert_eq!(
            bound_table(1, 10000, Some(4)).girth4_path,
            Rational::from_integer(16535)
        );
        assert_eq!(
            bound_table(20000, 1, None).triangle_threshold,
            Rational::from_integer(6930)
        );
    }

    #[test]
    fn large_girth_bound_only_from_74() {
        assert_eq!(bound_table(5, 4, Some(73)).large_girth_path, None);
        assert_eq!(
            bound_table(5, 4, Some(74)).large_girth_path,
            Some(Rational::from_integer(4))
        );
        assert_eq!(
            bound_table(5, 4, Some(75)).large_girth_path,
            Some(Rational::from_integer(6))
        );
    }

    #[test]
    fn short_cycle_is_ceiling() {
        for n in 1..40 {
            for delta in 0..10 {
                let exact = (2.0 * n as f64 / (delta as f64 + 1.0)).ceil() as i64;
                assert_eq!(bound_table(n, delta, None).short_cycle, exact);
            }
        }
    }

    #[test]
    fn serializes_as_numbers() {
        let json = serde_json::to_value(bound_table(10, 3, Some(4))).unwrap();
        assert_eq!(json["oriented_path"], 4.5);
        assert_eq!(json["large_girth_path"], serde_json::Value::Null);
        assert_eq!(json["short_cycle"], 5);
    }
}
