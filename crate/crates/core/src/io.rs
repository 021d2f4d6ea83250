//! Definition files and graph export.
//!
//! An algebra file is JSON:
//!
//! ```json
//! {
//!   "p": 3,
//!   "dim_even": 1,
//!   "dim_odd": 1,
//!   "basis_names": ["h", "x"],
//!   "brackets": [{ "i": 0, "j": 1, "coeffs": { "1": 1 } }]
//! }
//! ```
//!
//! Only pairs with `i <= j` are stored; `[e_j, e_i]` follows from super
//! skew-symmetry and absent pairs are zero.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{validate_structure, StructureTable, SuperAlgebra};
use crate::error::{AlgebraError, AxiomViolation};
use crate::graph::SolvGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub p: u32,
    pub dim_even: usize,
    pub dim_odd: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, i64>,
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
    #[error("{location}: {source}")]
    Algebra {
        location: String,
        source: AlgebraError,
    },
    #[error("{} identity violation(s): {}", .0.len(), .0.join("; "))]
    Identities(Vec<String>),
}

/// A parsed algebra together with any super Jacobi or cubic-identity failures.
#[derive(Debug, Clone)]
pub struct ParsedAlgebra {
    pub algebra: SuperAlgebra,
    pub violations: Vec<AxiomViolation>,
}

impl ParsedAlgebra {
    /// The algebra, or an error listing every identity violation.
    pub fn into_validated(self) -> Result<SuperAlgebra, IoError> {
        if self.violations.is_empty() {
            Ok(self.algebra)
        } else {
            Err(IoError::Identities(describe_violations(
                &self.algebra,
                &self.violations,
            )))
        }
    }
}

/// Renders violations with basis names in place of indices.
pub fn describe_violations(algebra: &SuperAlgebra, violations: &[AxiomViolation]) -> Vec<String> {
    let name = |i: &usize| algebra.names()[*i].clone();
    violations
        .iter()
        .map(|v| match v {
            AxiomViolation::Jacobi { a, b, c } => format!(
                "super Jacobi identity fails on ({}, {}, {})",
                name(a),
                name(b),
                name(c)
            ),
            AxiomViolation::OddCube { x } => {
                format!("[x,[x,x]] != 0 for odd x = {}", algebra.format_element(x))
            }
            other => other.to_string(),
        })
        .collect()
}

pub fn parse_algebra_str(text: &str) -> Result<ParsedAlgebra, IoError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| IoError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file_to_algebra(&file)
}

pub fn parse_algebra(path: &Path) -> Result<ParsedAlgebra, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_algebra_str(&text)
}

fn invalid(location: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Invalid {
        location: location.into(),
        message: message.into(),
    }
}

pub fn file_to_algebra(file: &AlgebraFile) -> Result<ParsedAlgebra, IoError> {
    let n = file.dim_even + file.dim_odd;
    let mut table = StructureTable::new(file.p, file.dim_even, file.dim_odd);
    table.basis_names = file.basis_names.clone();
    let odd = |i: usize| i >= file.dim_even;
    let mut seen = BTreeMap::new();
    for (r, rec) in file.brackets.iter().enumerate() {
        let at = format!("brackets[{r}]");
        if rec.i >= n || rec.j >= n {
            return Err(invalid(at, format!("index out of range for dimension {n}")));
        }
        if rec.i > rec.j {
            return Err(invalid(at, "only pairs with i <= j may be stored"));
        }
        if let Some(first) = seen.insert((rec.i, rec.j), r) {
            return Err(invalid(at, format!("duplicates brackets[{first}]")));
        }
        let p = i64::from(file.p.max(1));
        if rec.i == rec.j && !odd(rec.i) && rec.coeffs.values().any(|v| v.rem_euclid(p) != 0) {
            return Err(invalid(
                at,
                "bracket of an even basis vector with itself must be zero",
            ));
        }
        for (&k, &value) in &rec.coeffs {
            if k >= n {
                return Err(invalid(
                    format!("{at}.coeffs.{k}"),
                    format!("index out of range for dimension {n}"),
                ));
            }
            if value.rem_euclid(p) != 0 && odd(k) != (odd(rec.i) ^ odd(rec.j)) {
                return Err(invalid(
                    format!("{at}.coeffs.{k}"),
                    "component has the wrong parity",
                ));
            }
        }
        let terms: Vec<(usize, i64)> = rec.coeffs.iter().map(|(&k, &v)| (k, v)).collect();
        table.bracket(rec.i, rec.j, &terms);
    }
    let (algebra, violations) = validate_structure(&table).map_err(|source| IoError::Algebra {
        location: "algebra".to_string(),
        source,
    })?;
    Ok(ParsedAlgebra {
        algebra,
        violations,
    })
}

pub fn algebra_to_file(l: &SuperAlgebra) -> AlgebraFile {
    let n = l.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i..n {
            let coeffs: BTreeMap<usize, i64> = (0..n)
                .filter_map(|k| {
                    let c = l.constant(i, j, k);
                    (c != 0).then_some((k, i64::from(c)))
                })
                .collect();
            if !coeffs.is_empty() {
                brackets.push(BracketRecord { i, j, coeffs });
            }
        }
    }
    AlgebraFile {
        p: l.field().p(),
        dim_even: l.dim_even(),
        dim_odd: l.dim_odd(),
        basis_names: Some(l.names().to_vec()),
        brackets,
    }
}

/// Deterministic JSON with a trailing newline.
pub fn emit_algebra(l: &SuperAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&algebra_to_file(l)).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    EdgeCsv,
}

pub fn emit_graph(g: &SolvGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => emit_dot(g),
        GraphFormat::EdgeCsv => emit_csv(g),
    }
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn emit_dot(g: &SolvGraph) -> String {
    let mut out = format!("graph {} {{\n", g.kind());
    for (i, label) in g.labels().iter().enumerate() {
        let _ = writeln!(out, "  {i} [label=\"{}\"];", escape(label));
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

/// One `u,v` line per edge with `u < v`, sorted; no header.
pub fn emit_csv(g: &SolvGraph) -> String {
    let mut out = String::new();
    for (a, b) in g.edges() {
        let _ = writeln!(out, "{a},{b}");
    }
    out
}
