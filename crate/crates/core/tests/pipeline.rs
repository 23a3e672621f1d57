// SPDX-License-Identifier: Apache-2.0

//! End-to-end library flows across modules.

use girthpath::constructions::{
    build_counterexample, generate, CounterexampleParams, GenKind, GenSpec,
};
use girthpath::graph::girth;
use girthpath::io::{digest, parse_any, to_edge_list, to_json};
use girthpath::keylemma::{analyze_key_lemma, verify_path_bounds};
use girthpath::lll::{long_path_driver, DriverOverrides};
use girthpath::solvers::longest_path_exact;
use girthpath::{brute, SolverLimits};

#[test]
fn lift_instance_survives_serialization_and_solves_exactly() {
    let p = CounterexampleParams::new(2, 1, 2).unwrap();
    let d = build_counterexample(p);
    let text = to_edge_list(&d);
    let back = parse_any(&text).unwrap();
    assert_eq!(back, d);
    assert_eq!(parse_any(&to_json(&d)).unwrap(), d);
    assert_eq!(digest(&back), digest(&d));

    let limits = SolverLimits::default();
    let path = longest_path_exact(&d, &limits).unwrap();
    assert_eq!(path.len(), brute::longest_path_length(&d));
    assert_eq!(path.len(), p.exact_longest_path());
    assert_eq!(girth(&d).value(), brute::girth(&d));

    let report = verify_path_bounds(&d, &limits).unwrap();
    assert_eq!(report.violations().count(), 0);
    let lemma = analyze_key_lemma(&d, 2, &limits).unwrap();
    assert!(lemma.invariant_violations().is_empty());
}

#[test]
fn random_oriented_instances_meet_every_bound() {
    let limits = SolverLimits::default();
    for seed in 0..20 {
        let d = generate(&GenSpec::new(GenKind::OrientedMinOutdeg, 9, 2, seed)).unwrap();
        let report = verify_path_bounds(&d, &limits).unwrap();
        assert_eq!(report.violations().count(), 0, "seed {seed}");
        let lemma = analyze_key_lemma(&d, 2, &limits).unwrap();
        assert!(lemma.invariant_violations().is_empty(), "seed {seed}");
    }
}

#[test]
fn driver_falls_back_when_the_inequality_fails() {
    let d = generate(&GenSpec::new(GenKind::CdRegular, 256, 64, 3).with_c(2.0)).unwrap();
    let report = long_path_driver(&d, 2.0, DriverOverrides::default()).unwrap();
    assert!(report.fallback.is_some());
    assert_eq!(report.t, 1);
    assert!(report.stitch.path.check(&d).is_ok());
    assert!(report.achieved >= report.stitch.guaranteed_floor);
}

#[test]
fn driver_reports_feasibility_of_explicit_parts() {
    // t = 2 at d = 128, but the resampling inequality is far from holding.
    let d = generate(&GenSpec::new(GenKind::CdRegular, 512, 128, 5).with_c(2.0)).unwrap();
    let overrides = DriverOverrides {
        c_prime: Some(girthpath::lll::c_prime_for_parts(128, 2)),
        ..DriverOverrides::default()
    };
    let report = long_path_driver(&d, 2.0, overrides).unwrap();
    let feasibility = report.feasibility.unwrap();
    assert_eq!(feasibility.t, 2);
    assert!(!feasibility.feasible);
    assert!(report.fallback.as_deref().unwrap().contains("inequality"));
    assert_eq!(report.t, 1);
    assert!(report.achieved >= report.stitch.guaranteed_floor);
}
