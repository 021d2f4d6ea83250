//! Solvabilizers, solvable graphs and the solvability measure of
//! finite-dimensional Lie superalgebras over GF(p), p odd.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod field;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod morphism;
pub mod solvabilizer;
pub mod verify;

pub use algebra::{
    validate, validate_structure, Closure, Parity, StructureTable, Subalg, SuperAlgebra,
};
pub use error::{
    AlgebraError, AxiomViolation, EnumerationError, FieldError, GraphError, LinalgError,
    MorphismError,
};
pub use field::{FieldPrime, Vector};
pub use graph::{
    build_graph, compare_direct_sum_measure, components, graphs_isomorphic, measure, GraphKind,
    Measure, MeasureFormulaInputs, Rational, SolvGraph,
};
pub use io::{
    emit_algebra, emit_graph, parse_algebra, parse_algebra_str, GraphFormat, IoError, ParsedAlgebra,
};
pub use linalg::Subspace;
pub use morphism::{
    direct_sum, direct_sum_of, pullback, quotient, DirectSum, Morphism, Pullback, Quotient,
};
pub use solvabilizer::{ElementSet, PairCache, PairOracle, Solver};
pub use verify::{run_all, run_suite, Report, Status, VerifyConfig, Witness, SUITES};
