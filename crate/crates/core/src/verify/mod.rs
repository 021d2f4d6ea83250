//! Theorem-verification harness: each claim is checked on concrete instances
//! and reported as pass, fail (with a witness), skipped-hypothesis or info.

pub mod generator;
pub mod report;
pub mod suites;

pub use generator::{centre, proper_graded_ideals, Instance, InstanceGenerator};
pub use report::{Check, Report, Status, Tally, Witness};
pub use suites::{
    run_all, run_suite, verify_corollary, verify_direct_sum_laws, verify_direct_sum_measure,
    verify_functor_laws, verify_gamma_functor, verify_indicator_product, verify_iso_invariance,
    verify_measure_laws, verify_morphism_laws, verify_pullback, verify_ses,
    verify_solvabilizer_laws, UnknownSuite, VerifyConfig, SUITES,
};
