//! Solvable and non-solvable graphs, the solvability measure and graph isomorphism.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::format_with_names;
use crate::error::GraphError;
use crate::field::Vector;
use crate::solvabilizer::{PairOracle, Solver};

pub type Rational = Ratio<i128>;

/// Default vertex cap for [`graphs_isomorphic`].
pub const DEFAULT_ISO_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Solvable,
    Nonsolvable,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Solvable => "solvable",
            Self::Nonsolvable => "nonsolvable",
        })
    }
}

impl std::str::FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "solvable" => Ok(Self::Solvable),
            "nonsolvable" | "non-solvable" => Ok(Self::Nonsolvable),
            other => Err(format!(
                "unknown graph kind '{other}' (solvable|nonsolvable)"
            )),
        }
    }
}

/// Symmetric adjacency over a fixed, lexicographically sorted vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvGraph {
    kind: GraphKind,
    vertices: Vec<Vector>,
    labels: Vec<String>,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl SolvGraph {
    /// Builds a graph from explicit edges given as vertex-index pairs.
    /// Vertices are sorted first; the edge indices refer to the sorted order.
    pub fn from_edges(
        kind: GraphKind,
        mut vertices: Vec<Vector>,
        labels: Option<Vec<String>>,
        edges: &[(usize, usize)],
    ) -> Self {
        let labels = labels.unwrap_or_else(|| vertices.iter().map(|v| v.to_string()).collect());
        let mut order: Vec<usize> = (0..vertices.len()).collect();
        order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
        let mut position = vec![0; vertices.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let labels = order.iter().map(|&i| labels[i].clone()).collect();
        vertices = order.iter().map(|&i| vertices[i].clone()).collect();
        let mut g = Self::empty(kind, vertices, labels);
        for &(a, b) in edges {
            g.set_edge(position[a], position[b]);
        }
        g
    }

    fn empty(kind: GraphKind, vertices: Vec<Vector>, labels: Vec<String>) -> Self {
        let words = vertices.len().div_ceil(64);
        Self {
            kind,
            rows: vec![0; words * vertices.len()],
            vertices,
            labels,
            words,
            edge_count: 0,
        }
    }

    fn set_edge(&mut self, a: usize, b: usize) {
        if a == b || self.has_edge(a, b) {
            return;
        }
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
        self.rows[b * self.words + a / 64] |= 1 << (a % 64);
        self.edge_count += 1;
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Human-readable vertex names such as `h+2x`.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn index_of(&self, v: &Vector) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn degree(&self, a: usize) -> usize {
        self.row(a).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.rows[a * self.words..(a + 1) * self.words]
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(move |&b| self.has_edge(a, b))
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::with_capacity(self.edge_count);
        for i in 0..n {
            for j in i + 1..n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Same vertices, every non-edge becomes an edge and vice versa.
    pub fn complement(&self) -> SolvGraph {
        let n = self.vertex_count();
        let kind = match self.kind {
            GraphKind::Solvable => GraphKind::Nonsolvable,
            GraphKind::Nonsolvable => GraphKind::Solvable,
        };
        let mut g = Self::empty(kind, self.vertices.clone(), self.labels.clone());
        for i in 0..n {
            for j in i + 1..n {
                if !self.has_edge(i, j) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        (0..n)
            .map(|i| (0..n).map(|j| self.has_edge(i, j)).collect())
            .collect()
    }
}

/// Builds `𝔖(L)` or its complement. Vertices are `L ∖ (sol(L) ∪ {0})`.
pub fn build_graph(solver: &Solver, kind: GraphKind) -> Result<SolvGraph, GraphError> {
    let l = solver.algebra();
    if l.is_solvable(&l.full_space()) {
        return Err(GraphError::SolvableAlgebra);
    }
    let sol = solver.solvabilizer();
    let vertices: Vec<Vector> = solver
        .elements()
        .iter()
        .filter(|v| !v.is_zero() && !sol.contains(v))
        .cloned()
        .collect();
    if vertices.is_empty() {
        return Err(GraphError::EmptyVertexSet);
    }
    let labels = vertices
        .iter()
        .map(|v| format_with_names(l.names(), v))
        .collect();
    let n = vertices.len();
    let upper: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i + 1..n)
                .filter(|&j| solver.pair_solvable(&vertices[i], &vertices[j]))
                .collect()
        })
        .collect();
    let mut g = SolvGraph::empty(GraphKind::Solvable, vertices, labels);
    for (i, row) in upper.iter().enumerate() {
        for &j in row {
            g.set_edge(i, j);
        }
    }
    Ok(match kind {
        GraphKind::Solvable => g,
        GraphKind::Nonsolvable => g.complement(),
    })
}

/// Exact solvability measure, reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Measure(Rational);

impl Measure {
    /// `1 - 2e / (v(v-1))` for `v >= 2`.
    pub fn from_counts(vertices: usize, edges: usize) -> Result<Self, GraphError> {
        if vertices < 2 {
            return Err(GraphError::TooFewVertices(vertices));
        }
        let v = vertices as i128;
        let pairs = v * (v - 1) / 2;
        Ok(Self(Rational::new(pairs - edges as i128, pairs)))
    }

    pub fn from_ratio(value: Rational) -> Self {
        Self(value)
    }

    pub fn value(&self) -> Rational {
        self.0
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn float_view(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (≈ {:.6})", format_ratio(&self.0), self.float_view())
    }
}

pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `ν(L)` of a solvable graph.
pub fn measure(g: &SolvGraph) -> Result<Measure, GraphError> {
    if g.kind() != GraphKind::Solvable {
        return Err(GraphError::WrongKind);
    }
    Measure::from_counts(g.vertex_count(), g.edge_count())
}

/// Number of connected components, by breadth-first search.
pub fn components(g: &SolvGraph) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        queue.push_back(start);
        while let Some(a) = queue.pop_front() {
            for b in g.neighbors(a) {
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
    }
    count
}

/// `I_L(x, y)`.
pub fn indicator<O: PairOracle + ?Sized>(oracle: &O, x: &Vector, y: &Vector) -> u8 {
    oracle.indicator(x, y)
}

/// Exact isomorphism test with a vertex cap.
pub fn graphs_isomorphic(g1: &SolvGraph, g2: &SolvGraph, cap: usize) -> Result<bool, GraphError> {
    Ok(find_isomorphism(g1, g2, cap)?.is_some())
}

/// Returns `map` with `g1.has_edge(a, b) == g2.has_edge(map[a], map[b])`, if one exists.
///
/// Individualization and refinement: both graphs are colored jointly by
/// iterated neighborhood-color multisets, then one vertex of the smallest
/// nontrivial class is pinned and each same-colored partner is tried.
pub fn find_isomorphism(
    g1: &SolvGraph,
    g2: &SolvGraph,
    cap: usize,
) -> Result<Option<Vec<usize>>, GraphError> {
    for g in [g1, g2] {
        if g.vertex_count() > cap {
            return Err(GraphError::CapExceeded {
                cap,
                found: g.vertex_count(),
            });
        }
    }
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let n = g1.vertex_count();
    let union = JointGraph { g1, g2, n };
    let colors = union.refine(vec![0; 2 * n]);
    Ok(union.search(colors))
}

struct JointGraph<'a> {
    g1: &'a SolvGraph,
    g2: &'a SolvGraph,
    n: usize,
}

impl JointGraph<'_> {
    fn neighbors(&self, v: usize) -> Box<dyn Iterator<Item = usize> + '_> {
        if v < self.n {
            Box::new(self.g1.neighbors(v))
        } else {
            Box::new(self.g2.neighbors(v - self.n).map(|w| w + self.n))
        }
    }

    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let mut classes = count_classes(&colors);
        loop {
            let signatures: Vec<(usize, Vec<usize>)> = (0..2 * self.n)
                .map(|v| {
                    let mut around: Vec<usize> = self.neighbors(v).map(|w| colors[w]).collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect();
            let mut ids = BTreeMap::new();
            for s in &signatures {
                let next = ids.len();
                ids.entry(s).or_insert(next);
            }
            colors = signatures.iter().map(|s| ids[s]).collect();
            let next = ids.len();
            if next == classes {
                return colors;
            }
            classes = next;
        }
    }

    fn balanced(&self, colors: &[usize]) -> bool {
        let mut tally = BTreeMap::<usize, isize>::new();
        for (v, &c) in colors.iter().enumerate() {
            *tally.entry(c).or_default() += if v < self.n { 1 } else { -1 };
        }
        tally.values().all(|&t| t == 0)
    }

    fn search(&self, colors: Vec<usize>) -> Option<Vec<usize>> {
        if !self.balanced(&colors) {
            return None;
        }
        let mut class_size = BTreeMap::<usize, usize>::new();
        for &c in &colors[..self.n] {
            *class_size.entry(c).or_default() += 1;
        }
        let target = class_size
            .iter()
            .filter(|(_, &size)| size > 1)
            .min_by_key(|(&c, &size)| (size, c))
            .map(|(&c, _)| c);
        let Some(target) = target else {
            return self.discrete_map(&colors);
        };
        let v = (0..self.n).find(|&v| colors[v] == target)?;
        let fresh = colors.iter().max().map_or(0, |m| m + 1);
        for w in (self.n..2 * self.n).filter(|&w| colors[w] == target) {
            let mut pinned = colors.clone();
            pinned[v] = fresh;
            pinned[w] = fresh;
            if let Some(map) = self.search(self.refine(pinned)) {
                return Some(map);
            }
        }
        None
    }

    fn discrete_map(&self, colors: &[usize]) -> Option<Vec<usize>> {
        let mut by_color = BTreeMap::new();
        for (v, &c) in colors[self.n..2 * self.n].iter().enumerate() {
            by_color.insert(c, v);
        }
        let map: Vec<usize> = (0..self.n).map(|v| by_color[&colors[v]]).collect();
        let ok = (0..self.n).all(|a| {
            (a + 1..self.n).all(|b| self.g1.has_edge(a, b) == self.g2.has_edge(map[a], map[b]))
        });
        ok.then_some(map)
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Quantities feeding the direct-sum measure formula for one summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandData {
    /// `|L ∖ (sol(L) ∪ {0})|`.
    pub a: i128,
    /// `|sol(L)|`.
    pub b: i128,
    /// `1 - ν(L)`.
    pub alpha: Rational,
    /// `|{x ∈ A : ⟨x⟩ solvable}| / a`.
    pub sigma: Rational,
    pub zero_in_sol: bool,
}

impl SummandData {
    pub fn compute(solver: &Solver) -> Result<Self, GraphError> {
        let g = build_graph(solver, GraphKind::Solvable)?;
        let a = g.vertex_count();
        if a < 2 {
            return Err(GraphError::FormulaPreconditions);
        }
        let nu = measure(&g)?;
        let zero = solver.algebra().zero();
        let omega = g
            .vertices()
            .iter()
            .filter(|x| solver.pair_solvable(x, &zero))
            .count();
        let sol = solver.solvabilizer();
        Ok(Self {
            a: a as i128,
            b: sol.len() as i128,
            alpha: Rational::from_integer(1) - nu.value(),
            sigma: Rational::new(omega as i128, a as i128),
            zero_in_sol: sol.contains(&zero),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureFormulaInputs {
    pub first: SummandData,
    pub second: SummandData,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaPrediction {
    pub vertices: i128,
    pub q: Rational,
    /// `None` when the predicted vertex count is below two.
    pub nu: Option<Rational>,
}

impl MeasureFormulaInputs {
    /// Evaluates `|V| = a₁a₂ + a₁b₂ + b₁a₂` and the six-term expansion of `Q`.
    pub fn predict(&self) -> FormulaPrediction {
        let (a1, b1, al1, s1) = unpack(&self.first);
        let (a2, b2, al2, s2) = unpack(&self.second);
        let one = Rational::from_integer(1);
        let half = Rational::new(1, 2);
        let vertices = a1 * a2 + a1 * b2 + b1 * a2;
        let r = Rational::from_integer;
        let q11 = half
            * r(a1 * a2)
            * (al1 * al2 * r((a1 - 1) * (a2 - 1)) + s1 * al2 * r(a2 - 1) + al1 * s2 * r(a1 - 1));
        let q22 = half * r(a1 * b2) * (al1 * r(b2 * (a1 - 1)) + s1 * r(b2 - 1));
        let q33 = half * r(a2 * b1) * (al2 * r(b1 * (a2 - 1)) + s2 * r(b1 - 1));
        let q12 = r(a1 * a2 * b2) * (al1 * r(a1 - 1) + s1);
        let q13 = r(a1 * a2 * b1) * (al2 * r(a2 - 1) + s2);
        let q23 = r(a1 * a2 * b1 * b2);
        let q = q11 + q22 + q33 + q12 + q13 + q23;
        let nu = (vertices >= 2).then(|| one - r(2) * q / r(vertices * (vertices - 1)));
        FormulaPrediction { vertices, q, nu }
    }
}

fn unpack(s: &SummandData) -> (i128, i128, Rational, Rational) {
    (s.a, s.b, s.alpha, s.sigma)
}

/// Predicted against actual `(|V|, |E|, ν)` for `L₁ ⊕ L₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSumMeasureReport {
    pub inputs: MeasureFormulaInputs,
    pub predicted: FormulaPrediction,
    pub actual_vertices: i128,
    pub actual_edges: i128,
    pub actual_nu: Rational,
}

impl DirectSumMeasureReport {
    pub fn vertices_match(&self) -> bool {
        self.predicted.vertices == self.actual_vertices
    }

    pub fn edges_match(&self) -> bool {
        self.predicted.q == Rational::from_integer(self.actual_edges)
    }

    pub fn nu_match(&self) -> bool {
        self.predicted.nu == Some(self.actual_nu)
    }

    /// The vertex formula assumes `0 ∈ sol(L_i)` for both summands.
    pub fn zero_in_both_solvabilizers(&self) -> bool {
        self.inputs.first.zero_in_sol && self.inputs.second.zero_in_sol
    }
}

impl fmt::Display for DirectSumMeasureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |ok: bool| if ok { "match" } else { "mismatch" };
        for (name, s) in [("L1", &self.inputs.first), ("L2", &self.inputs.second)] {
            writeln!(
                f,
                "{name}: a={} b={} alpha={} sigma={} 0_in_sol={}",
                s.a,
                s.b,
                format_ratio(&s.alpha),
                format_ratio(&s.sigma),
                s.zero_in_sol
            )?;
        }
        writeln!(
            f,
            "|V|: predicted {} actual {} ({})",
            self.predicted.vertices,
            self.actual_vertices,
            verdict(self.vertices_match())
        )?;
        writeln!(
            f,
            "|E|: predicted Q={} actual {} ({})",
            format_ratio(&self.predicted.q),
            self.actual_edges,
            verdict(self.edges_match())
        )?;
        let predicted_nu = self
            .predicted
            .nu
            .map_or_else(|| "undefined".to_string(), |r| format_ratio(&r));
        write!(
            f,
            "nu: predicted {} actual {} ({})",
            predicted_nu,
            format_ratio(&self.actual_nu),
            verdict(self.nu_match())
        )
    }
}

/// Evaluates the direct-sum formula for `(L₁, L₂)` and compares it with the
/// brute-force graph of `sum`, which must be a solver for `L₁ ⊕ L₂`.
pub fn compare_direct_sum_measure(
    first: &Solver,
    second: &Solver,
    sum: &Solver,
) -> Result<DirectSumMeasureReport, GraphError> {
    let inputs = MeasureFormulaInputs {
        first: SummandData::compute(first)?,
        second: SummandData::compute(second)?,
    };
    let predicted = inputs.predict();
    let g = build_graph(sum, GraphKind::Solvable)?;
    let actual = measure(&g)?;
    Ok(DirectSumMeasureReport {
        inputs,
        predicted,
        actual_vertices: g.vertex_count() as i128,
        actual_edges: g.edge_count() as i128,
        actual_nu: actual.value(),
    })
}

/// True when `r` lies in `[0, 1]`.
pub fn in_unit_interval(r: &Rational) -> bool {
    *r >= Rational::zero() && *r <= Rational::from_integer(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use std::sync::Arc;

    fn v(c: &[u32]) -> Vector {
        Vector::new(c.to_vec())
    }

    fn e2() -> Solver {
        Solver::new(Arc::new(catalog::e2_unchecked(3)))
    }

    #[test]
    fn e2_graph_shape() {
        let s = e2();
        let g = build_graph(&s, GraphKind::Solvable).unwrap();
        assert_eq!(g.vertex_count(), 26);
        let (h, x, y) = (v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]));
        let (ih, ix, iy) = (
            g.index_of(&h).unwrap(),
            g.index_of(&x).unwrap(),
            g.index_of(&y).unwrap(),
        );
        assert!(g.has_edge(ih, ix));
        assert!(!g.has_edge(ix, iy));
        let c = build_graph(&s, GraphKind::Nonsolvable).unwrap();
        assert!(c.has_edge(ix, iy));
        assert_eq!(g.edge_count() + c.edge_count(), 325);
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn solvable_algebra_has_no_graph() {
        let s = Solver::new(Arc::new(catalog::e1(3)));
        assert_eq!(
            build_graph(&s, GraphKind::Solvable).unwrap_err(),
            GraphError::SolvableAlgebra
        );
    }

    fn synthetic(n: usize, edges: &[(usize, usize)]) -> SolvGraph {
        let vertices = (0..n).map(|i| v(&[i as u32])).collect();
        SolvGraph::from_edges(GraphKind::Solvable, vertices, None, edges)
    }

    fn complete(n: usize) -> SolvGraph {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        synthetic(n, &edges)
    }

    #[test]
    fn measure_extremes() {
        assert_eq!(measure(&complete(5)).unwrap().value(), Rational::zero());
        assert_eq!(
            measure(&synthetic(5, &[])).unwrap().value(),
            Rational::from_integer(1)
        );
        assert_eq!(
            measure(&synthetic(1, &[])).unwrap_err(),
            GraphError::TooFewVertices(1)
        );
        assert_eq!(
            measure(&complete(3).complement()).unwrap_err(),
            GraphError::WrongKind
        );
        let m = Measure::from_counts(26, 55).unwrap();
        assert_eq!((m.numer(), m.denom()), (54, 65));
        assert_eq!(m.to_string(), "54/65 (≈ 0.830769)");
    }

    #[test]
    fn component_counts() {
        assert_eq!(components(&complete(6)), 1);
        assert_eq!(components(&synthetic(7, &[])), 7);
        assert_eq!(components(&synthetic(4, &[(0, 1), (2, 3)])), 2);
    }

    #[test]
    fn isomorphism_basics() {
        let path = synthetic(4, &[(0, 1), (1, 2), (2, 3)]);
        let relabelled = synthetic(4, &[(2, 0), (0, 3), (3, 1)]);
        let star = synthetic(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(graphs_isomorphic(&path, &path, 64).unwrap());
        assert!(graphs_isomorphic(&path, &relabelled, 64).unwrap());
        assert!(!graphs_isomorphic(&path, &star, 64).unwrap());
        assert!(!graphs_isomorphic(&path, &complete(5), 64).unwrap());
        assert!(matches!(
            graphs_isomorphic(&path, &path, 3),
            Err(GraphError::CapExceeded { cap: 3, found: 4 })
        ));
    }

    #[test]
    fn isomorphism_on_regular_graphs() {
        // two 2-regular graphs on 6 vertices: a hexagon and two triangles
        let hexagon = synthetic(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let triangles = synthetic(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!graphs_isomorphic(&hexagon, &triangles, 64).unwrap());
        let shuffled = synthetic(6, &[(3, 0), (0, 5), (5, 1), (1, 4), (4, 2), (2, 3)]);
        let map = find_isomorphism(&hexagon, &shuffled, 64).unwrap().unwrap();
        for (a, b) in hexagon.edges() {
            assert!(shuffled.has_edge(map[a], map[b]));
        }
    }

    #[test]
    fn formula_with_no_solvable_pairs_in_second_summand() {
        let zero = Rational::zero();
        let inputs = MeasureFormulaInputs {
            first: SummandData {
                a: 26,
                b: 1,
                alpha: Rational::new(1, 3),
                sigma: Rational::new(1, 2),
                zero_in_sol: true,
            },
            second: SummandData {
                a: 8,
                b: 0,
                alpha: zero,
                sigma: zero,
                zero_in_sol: false,
            },
        };
        assert_eq!(inputs.predict().nu, Some(Rational::from_integer(1)));
    }

    #[test]
    fn unit_interval() {
        assert!(in_unit_interval(&Rational::new(54, 65)));
        assert!(!in_unit_interval(&Rational::new(-1, 2)));
        assert!(!in_unit_interval(&Rational::new(3, 2)));
    }
}
