use solvgraph_core::verify::{run_suite, Status, VerifyConfig, SUITES};

#[test]
fn every_suite_passes_on_the_default_configuration() {
    let cfg = VerifyConfig::default();
    for suite in SUITES {
        let report = run_suite(suite, &cfg).unwrap();
        assert!(!report.checks.is_empty(), "{suite}");
        assert!(!report.has_failures(), "{suite}:\n{}", report.render());
        assert!(
            report.checks.iter().any(|c| c.status == Status::Pass),
            "{suite}"
        );
    }
}

#[test]
fn other_seeds_and_single_prime_runs_pass() {
    for (seed, primes) in [(7, vec![3]), (19, vec![5]), (23, vec![3, 5])] {
        let cfg = VerifyConfig {
            seed,
            primes,
            trials: 8,
            ..VerifyConfig::default()
        };
        let report = run_suite("solvabilizer", &cfg).unwrap();
        assert!(!report.has_failures(), "seed {seed}:\n{}", report.render());
    }
}

#[test]
fn graded_closure_mode_also_passes() {
    let cfg = VerifyConfig {
        closure: solvgraph_core::Closure::Graded,
        trials: 6,
        ..VerifyConfig::default()
    };
    let report = run_suite("solvabilizer", &cfg).unwrap();
    assert!(!report.has_failures(), "{}", report.render());
}

#[test]
fn unknown_suite_is_rejected() {
    let err = run_suite("nope", &VerifyConfig::default()).unwrap_err();
    assert!(err.to_string().contains("solvabilizer"));
}

#[test]
fn report_lines_have_five_fields() {
    let report = run_suite("ses", &VerifyConfig::default()).unwrap();
    let text = report.render();
    for line in text.lines().filter(|l| !l.starts_with("summary")) {
        assert_eq!(line.split('\t').count(), 5, "{line}");
    }
    assert!(text.ends_with("info=0\n"));
}
