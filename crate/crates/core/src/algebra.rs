//! Lie superalgebras given by structure constants over GF(p).
//!
//! Basis convention: indices `0..dim_even` are even, `dim_even..n` are odd.
//! `c[i][j][k]` is the coefficient of `e_k` in `[e_i, e_j]`; the bracket of
//! arbitrary elements is its bilinear extension (all signs live in `c`).

use std::fmt;

use crate::error::{AlgebraError, AxiomViolation, LinalgError};
use crate::field::{FieldPrime, Vector};
use crate::linalg::{check_vector, rref_unchecked, Subspace};

/// Largest odd dimension for which `[x,[x,x]] = 0` is checked by enumeration.
pub const MAX_ODD_DIM_FOR_CUBIC_CHECK: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Unvalidated structure constants, as read from a file or built in code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    pub p: u32,
    pub dim_even: usize,
    pub dim_odd: usize,
    /// Flattened `c[i][j][k]`, index `(i * n + j) * n + k`. Any integers; reduced mod p.
    pub constants: Vec<i64>,
    pub basis_names: Option<Vec<String>>,
}

impl StructureTable {
    pub fn new(p: u32, dim_even: usize, dim_odd: usize) -> Self {
        let n = dim_even + dim_odd;
        Self {
            p,
            dim_even,
            dim_odd,
            constants: vec![0; n * n * n],
            basis_names: None,
        }
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.basis_names = Some(names.into_iter().map(Into::into).collect());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim_even + self.dim_odd
    }

    fn parity_bit(&self, i: usize) -> u8 {
        u8::from(i >= self.dim_even)
    }

    /// Sets one raw constant without touching its skew partner.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: i64) -> &mut Self {
        let n = self.dim();
        self.constants[(i * n + j) * n + k] = value;
        self
    }

    /// Sets `[e_i, e_j] = Σ v e_k` and fills `[e_j, e_i]` by super skew-symmetry.
    pub fn bracket(&mut self, i: usize, j: usize, terms: &[(usize, i64)]) -> &mut Self {
        let sign = if self.parity_bit(i) & self.parity_bit(j) == 1 {
            1
        } else {
            -1
        };
        for &(k, v) in terms {
            self.set(i, j, k, v);
            self.set(j, i, k, sign * v);
        }
        self
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperAlgebra {
    field: FieldPrime,
    dim_even: usize,
    dim_odd: usize,
    constants: Vec<u32>,
    names: Vec<String>,
}

/// How `⟨A⟩` is formed from generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Closure {
    /// Bracket closure of the linear span.
    #[default]
    Plain,
    /// Additionally closed under the even/odd projections.
    Graded,
}

impl std::str::FromStr for Closure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Closure::Plain),
            "graded" => Ok(Closure::Graded),
            other => Err(format!("unknown closure mode '{other}' (plain|graded)")),
        }
    }
}

/// A bracket-closed subspace of some algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subalg {
    pub space: Subspace,
    /// Whether the space is closed under the even/odd projections.
    pub graded: bool,
}

/// Full validation: structure, super Jacobi, and the characteristic-3 cubic identity.
pub fn validate(table: &StructureTable) -> Result<SuperAlgebra, AlgebraError> {
    let (algebra, violations) = validate_structure(table)?;
    if violations.is_empty() {
        Ok(algebra)
    } else {
        Err(AlgebraError::Axioms(violations))
    }
}

/// Checks field, shape, grading and super skew-symmetry (which make the bracket
/// well defined) and returns the remaining identity violations alongside the
/// algebra instead of failing on them.
pub fn validate_structure(
    table: &StructureTable,
) -> Result<(SuperAlgebra, Vec<AxiomViolation>), AlgebraError> {
    let field = FieldPrime::new(table.p)?;
    let n = table.dim();
    if table.constants.len() != n * n * n {
        return Err(AlgebraError::TableShape {
            expected: n * n * n,
            found: table.constants.len(),
        });
    }
    let names = match &table.basis_names {
        Some(names) if names.len() != n => {
            return Err(AlgebraError::BasisNames {
                expected: n,
                found: names.len(),
            })
        }
        Some(names) => names.clone(),
        None => (0..n).map(|i| format!("e{i}")).collect(),
    };
    let algebra = SuperAlgebra {
        field,
        dim_even: table.dim_even,
        dim_odd: table.dim_odd,
        constants: table.constants.iter().map(|&c| field.reduce(c)).collect(),
        names,
    };
    let structural = algebra.structural_violations();
    if !structural.is_empty() {
        return Err(AlgebraError::Axioms(structural));
    }
    let identities = algebra.identity_violations();
    Ok((algebra, identities))
}

impl SuperAlgebra {
    /// Builds from reduced constants without any checks. For constructions that
    /// preserve the axioms by design (sums, quotients, transports).
    pub(crate) fn from_parts(
        field: FieldPrime,
        dim_even: usize,
        dim_odd: usize,
        constants: Vec<u32>,
        names: Vec<String>,
    ) -> Self {
        debug_assert_eq!(constants.len(), (dim_even + dim_odd).pow(3));
        Self {
            field,
            dim_even,
            dim_odd,
            constants,
            names,
        }
    }

    pub fn abelian(field: FieldPrime, dim_even: usize, dim_odd: usize) -> Self {
        let n = dim_even + dim_odd;
        Self::from_parts(
            field,
            dim_even,
            dim_odd,
            vec![0; n * n * n],
            (0..n).map(|i| format!("e{i}")).collect(),
        )
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim_even + self.dim_odd
    }

    pub fn dim_even(&self) -> usize {
        self.dim_even
    }

    pub fn dim_odd(&self) -> usize {
        self.dim_odd
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim());
        self.names = names;
        self
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.dim_even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        let n = self.dim();
        self.constants[(i * n + j) * n + k]
    }

    pub(crate) fn constants(&self) -> &[u32] {
        &self.constants
    }

    pub fn to_table(&self) -> StructureTable {
        StructureTable {
            p: self.field.p(),
            dim_even: self.dim_even,
            dim_odd: self.dim_odd,
            constants: self.constants.iter().map(|&c| c as i64).collect(),
            basis_names: Some(self.names.clone()),
        }
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        let start = (i * n + j) * n;
        Vector(self.constants[start..start + n].to_vec())
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(|&c| c == 0)
    }

    /// `[x, y] = Σ x_i y_j [e_i, e_j]`.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector, LinalgError> {
        check_vector(self.field, self.dim(), x)?;
        check_vector(self.field, self.dim(), y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; n];
        for (i, &xi) in x.0.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.0.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let s = (xi as u64 * yj as u64) % p;
                let base = (i * n + j) * n;
                for (k, a) in acc.iter_mut().enumerate() {
                    let c = self.constants[base + k];
                    if c != 0 {
                        *a += s * c as u64;
                    }
                }
            }
            // keep the accumulator bounded for large n
            for a in acc.iter_mut() {
                *a %= p;
            }
        }
        Vector(acc.into_iter().map(|a| (a % p) as u32).collect())
    }

    pub fn even_part(&self, x: &Vector) -> Vector {
        let mut v = x.clone();
        for c in v.0[self.dim_even..].iter_mut() {
            *c = 0;
        }
        v
    }

    pub fn odd_part(&self, x: &Vector) -> Vector {
        let mut v = x.clone();
        for c in v.0[..self.dim_even].iter_mut() {
            *c = 0;
        }
        v
    }

    pub fn is_homogeneous(&self, x: &Vector) -> bool {
        x.0[..self.dim_even].iter().all(|&c| c == 0) || x.0[self.dim_even..].iter().all(|&c| c == 0)
    }

    pub fn zero(&self) -> Vector {
        Vector::zeros(self.dim())
    }

    pub fn unit(&self, i: usize) -> Vector {
        Vector::unit(self.dim(), i)
    }

    /// Every element of the algebra, lexicographically.
    pub fn elements(&self) -> Vec<Vector> {
        self.field.all_vectors(self.dim())
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    pub fn span(&self, rows: &[Vector]) -> Result<Subspace, LinalgError> {
        Subspace::span(self.field, self.dim(), rows)
    }

    fn structural_violations(&self) -> Vec<AxiomViolation> {
        let n = self.dim();
        let fp = self.field;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let pij = self.parity(i).bit() ^ self.parity(j).bit();
                let odd_pair = self.parity(i).bit() & self.parity(j).bit() == 1;
                for k in 0..n {
                    let c = self.constant(i, j, k);
                    if c != 0 && self.parity(k).bit() != pij {
                        out.push(AxiomViolation::Grading { i, j, k });
                    }
                    if i <= j {
                        let expected = if odd_pair { c } else { fp.neg(c) };
                        if self.constant(j, i, k) != expected {
                            out.push(AxiomViolation::SkewSymmetry { i, j, k });
                        }
                    }
                }
            }
        }
        out
    }

    fn identity_violations(&self) -> Vec<AxiomViolation> {
        let n = self.dim();
        let fp = self.field;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let ab = self.basis_bracket(a, b);
                let sign_odd = self.parity(a).bit() & self.parity(b).bit() == 1;
                for c in 0..n {
                    let lhs = self.bracket_unchecked(&self.unit(a), &self.basis_bracket(b, c));
                    let first = self.bracket_unchecked(&ab, &self.unit(c));
                    let second = self.bracket_unchecked(&self.unit(b), &self.basis_bracket(a, c));
                    let rhs = if sign_odd {
                        fp.sub_vec(&first, &second)
                    } else {
                        fp.add_vec(&first, &second)
                    };
                    if lhs != rhs {
                        out.push(AxiomViolation::Jacobi { a, b, c });
                    }
                }
            }
        }
        if fp.p() == 3 && self.dim_odd > 0 {
            if self.dim_odd > MAX_ODD_DIM_FOR_CUBIC_CHECK {
                out.push(AxiomViolation::OddCubeUnchecked {
                    dim_odd: self.dim_odd,
                });
            } else {
                for odd in fp.all_vectors(self.dim_odd).into_iter().skip(1) {
                    let mut x = vec![0u32; self.dim_even];
                    x.extend_from_slice(odd.coords());
                    let x = Vector(x);
                    let xx = self.bracket_unchecked(&x, &x);
                    if !self.bracket_unchecked(&x, &xx).is_zero() {
                        out.push(AxiomViolation::OddCube { x });
                    }
                }
            }
        }
        out
    }

    /// Super Jacobi and characteristic-3 violations of an already structured algebra.
    pub fn check_identities(&self) -> Vec<AxiomViolation> {
        self.identity_violations()
    }

    /// `span{[s, t] : s ∈ S, t ∈ T}` over basis pairs (both orders).
    pub fn bracket_space(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut rows = Vec::with_capacity(s.dim() * t.dim());
        for a in s.basis() {
            for b in t.basis() {
                let v = self.bracket_unchecked(a, b);
                if !v.is_zero() {
                    rows.push(v);
                }
            }
        }
        rref_unchecked(self.field, self.dim(), rows)
    }

    pub fn is_closed(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|a| {
            s.basis()
                .iter()
                .all(|b| s.contains_unchecked(&self.bracket_unchecked(a, b)))
        })
    }

    pub fn is_graded(&self, s: &Subspace) -> bool {
        self.grading_witness(s).is_none()
    }

    fn grading_witness(&self, s: &Subspace) -> Option<Vector> {
        s.basis()
            .iter()
            .find(|r| !s.contains_unchecked(&self.even_part(r)))
            .cloned()
    }

    fn ideal_witness(&self, s: &Subspace) -> Option<(Vector, usize)> {
        for r in s.basis() {
            for i in 0..self.dim() {
                let u = self.unit(i);
                if !s.contains_unchecked(&self.bracket_unchecked(r, &u))
                    || !s.contains_unchecked(&self.bracket_unchecked(&u, r))
                {
                    return Some((r.clone(), i));
                }
            }
        }
        None
    }

    /// `[S, L] ⊆ S` (and `[L, S] ⊆ S`), graded or not.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.ideal_witness(s).is_none()
    }

    pub fn is_graded_ideal(&self, s: &Subspace) -> bool {
        self.is_graded(s) && self.is_ideal(s)
    }

    /// Error-reporting form of [`SuperAlgebra::is_graded_ideal`].
    pub fn check_graded_ideal(&self, s: &Subspace) -> Result<(), AlgebraError> {
        if s.ambient_dim() != self.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            }
            .into());
        }
        if let Some(witness) = self.grading_witness(s) {
            return Err(AlgebraError::NotGraded { witness });
        }
        if let Some((inside, basis)) = self.ideal_witness(s) {
            return Err(AlgebraError::NotIdeal { inside, basis });
        }
        Ok(())
    }

    /// Smallest subspace containing `gens` closed under the bracket (and, in
    /// graded mode, under the parity projections).
    pub fn generated_subalgebra(
        &self,
        gens: &[Vector],
        closure: Closure,
    ) -> Result<Subalg, LinalgError> {
        for g in gens {
            check_vector(self.field, self.dim(), g)?;
        }
        Ok(self.closure_unchecked(gens.to_vec(), closure))
    }

    pub(crate) fn closure_unchecked(&self, gens: Vec<Vector>, closure: Closure) -> Subalg {
        let mut space = rref_unchecked(self.field, self.dim(), gens);
        loop {
            let mut rows = space.basis().to_vec();
            if closure == Closure::Graded {
                for r in space.basis() {
                    rows.push(self.even_part(r));
                    rows.push(self.odd_part(r));
                }
            }
            for a in space.basis() {
                for b in space.basis() {
                    let v = self.bracket_unchecked(a, b);
                    if !v.is_zero() {
                        rows.push(v);
                    }
                }
            }
            let next = rref_unchecked(self.field, self.dim(), rows);
            if next.dim() == space.dim() {
                break;
            }
            space = next;
        }
        let graded = self.is_graded(&space);
        Subalg { space, graded }
    }

    /// `S^(0) = S, S^(k+1) = [S^(k), S^(k)]`, stopping at zero or at the first repeat.
    pub fn derived_series(&self, s: &Subspace) -> Vec<Subspace> {
        self.series(s, |last| self.bracket_space(last, last))
    }

    /// `S^1 = S, S^(k+1) = [S^k, S]`, stopping at zero or at the first repeat.
    pub fn lower_central_series(&self, s: &Subspace) -> Vec<Subspace> {
        self.series(s, |last| self.bracket_space(last, s))
    }

    fn series(&self, s: &Subspace, step: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
        let mut out = vec![s.clone()];
        loop {
            let last = out.last().unwrap();
            if last.is_zero() {
                break;
            }
            let next = step(last);
            let repeated = &next == last;
            out.push(next);
            if repeated {
                break;
            }
        }
        out
    }

    pub fn is_solvable(&self, s: &Subspace) -> bool {
        self.derived_series(s).last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self, s: &Subspace) -> bool {
        self.lower_central_series(s)
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// Label such as `h+2x`; `0` for the zero vector.
    pub fn format_element(&self, v: &Vector) -> String {
        format_with_names(&self.names, v)
    }
}

pub(crate) fn format_with_names(names: &[String], v: &Vector) -> String {
    let terms: Vec<String> = v
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            if c == 1 {
                names[i].clone()
            } else {
                format!("{c}{}", names[i])
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

impl fmt::Debug for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SuperAlgebra({}|{} over GF({}), basis {:?})",
            self.dim_even,
            self.dim_odd,
            self.field.p(),
            self.names
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn f3() -> FieldPrime {
        FieldPrime::new(3).unwrap()
    }

    fn v(c: &[u32]) -> Vector {
        Vector::new(c.to_vec())
    }

    #[test]
    fn e2_fails_super_jacobi_on_odd_triple() {
        let table = catalog::e2_table(3);
        let err = validate(&table).unwrap_err();
        let AlgebraError::Axioms(violations) = err else {
            panic!("expected axiom violations");
        };
        // [x,[x,y]] = [x,h] = -x but [[x,x],y] - [x,[x,y]] = x
        assert!(violations.contains(&AxiomViolation::Jacobi { a: 1, b: 1, c: 2 }));
        assert!(violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::OddCube { .. })));
        assert!(!violations.iter().any(|v| matches!(
            v,
            AxiomViolation::Grading { .. } | AxiomViolation::SkewSymmetry { .. }
        )));
        // structurally sound, so it can still be loaded for definitional computations
        let (alg, identity) = validate_structure(&table).unwrap();
        assert_eq!(identity, violations);
        assert_eq!(alg.dim(), 3);
    }

    #[test]
    fn even_self_bracket_is_a_skew_violation() {
        let mut t = StructureTable::new(3, 1, 0);
        t.set(0, 0, 0, 1);
        let err = validate(&t).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::Axioms(vec![AxiomViolation::SkewSymmetry { i: 0, j: 0, k: 0 }])
        );
    }

    #[test]
    fn odd_odd_bracket_landing_odd_is_a_grading_violation() {
        let mut t = StructureTable::new(3, 1, 2);
        t.bracket(0, 1, &[(1, 1)])
            .bracket(0, 2, &[(2, -1)])
            .bracket(1, 2, &[(1, 1)]);
        let err = validate(&t).unwrap_err();
        let AlgebraError::Axioms(v) = err else {
            panic!()
        };
        assert!(v.contains(&AxiomViolation::Grading { i: 1, j: 2, k: 1 }));
    }

    #[test]
    fn field_errors_surface() {
        let t = StructureTable::new(2, 1, 0);
        assert!(matches!(validate(&t), Err(AlgebraError::Field(_))));
        let t = StructureTable::new(9, 1, 0);
        assert!(matches!(validate(&t), Err(AlgebraError::Field(_))));
    }

    #[test]
    fn cubic_identity_detected_in_characteristic_three() {
        // (0|1) with [x,x] = x would be a grading error, so use (1|1) with
        // [x,x] = h and [h,x] = x: the cube [x,[x,x]] = [x,h] = -x.
        let mut t = StructureTable::new(3, 1, 1);
        t.bracket(1, 1, &[(0, 1)]).bracket(0, 1, &[(1, 1)]);
        let (_, violations) = validate_structure(&t).unwrap();
        assert!(violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::OddCube { x } if x == &Vector::new(vec![0, 1]))));
    }

    #[test]
    fn brackets_in_e2() {
        let (e2, _) = validate_structure(&catalog::e2_table(3)).unwrap();
        let (h, x, y) = (v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]));
        assert_eq!(e2.bracket(&h, &x).unwrap(), x);
        assert_eq!(e2.bracket(&x, &y).unwrap(), h);
        assert_eq!(e2.bracket(&h, &y).unwrap(), v(&[0, 0, 2]));
        assert!(e2.bracket(&x, &e2.zero()).unwrap().is_zero());
        assert!(e2.bracket(&x, &v(&[1, 0])).is_err());
    }

    #[test]
    fn generated_subalgebras_in_e2() {
        let (e2, _) = validate_structure(&catalog::e2_table(3)).unwrap();
        let (h, x, y) = (v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]));
        let hx = e2
            .generated_subalgebra(&[h.clone(), x.clone()], Closure::Plain)
            .unwrap();
        assert_eq!(hx.space.dim(), 2);
        assert!(hx.graded);
        let xy = e2.generated_subalgebra(&[x, y], Closure::Plain).unwrap();
        assert!(xy.space.is_full());
        let empty = e2.generated_subalgebra(&[], Closure::Plain).unwrap();
        assert!(empty.space.is_zero());
        // [h+x+y, h+x+y] = 2h pulls in all of L
        let single = e2
            .generated_subalgebra(&[v(&[1, 1, 1])], Closure::Plain)
            .unwrap();
        assert!(single.space.is_full());
    }

    #[test]
    fn inhomogeneous_generator_plain_vs_graded() {
        let e1 = catalog::e1(3);
        let g = v(&[1, 1]); // h + x
        let plain = e1
            .generated_subalgebra(std::slice::from_ref(&g), Closure::Plain)
            .unwrap();
        assert_eq!(plain.space.dim(), 1);
        assert!(!plain.graded);
        let graded = e1.generated_subalgebra(&[g], Closure::Graded).unwrap();
        assert!(graded.space.is_full());
        assert!(graded.graded);
    }

    #[test]
    fn derived_series_examples() {
        let (e2, _) = validate_structure(&catalog::e2_table(3)).unwrap();
        let series = e2.derived_series(&e2.full_space());
        assert_eq!(series.len(), 2);
        assert!(series.iter().all(Subspace::is_full));
        assert!(!e2.is_solvable(&e2.full_space()));

        let e1 = catalog::e1(3);
        let series = e1.derived_series(&e1.full_space());
        let dims: Vec<usize> = series.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![2, 1, 0]);
        assert_eq!(series[1], e1.span(&[v(&[0, 1])]).unwrap());
        assert!(e1.is_solvable(&e1.full_space()));

        let ab = SuperAlgebra::abelian(f3(), 2, 1);
        let dims: Vec<usize> = ab
            .derived_series(&ab.full_space())
            .iter()
            .map(Subspace::dim)
            .collect();
        assert_eq!(dims, vec![3, 0]);
        let lc: Vec<usize> = ab
            .lower_central_series(&ab.full_space())
            .iter()
            .map(Subspace::dim)
            .collect();
        assert_eq!(lc, vec![3, 0]);
        assert!(ab.is_solvable(&ab.zero_space()) && ab.is_nilpotent(&ab.zero_space()));
    }

    #[test]
    fn lower_central_series_examples() {
        let e1 = catalog::e1(3);
        let full = e1.full_space();
        let lc = e1.lower_central_series(&full);
        let dims: Vec<usize> = lc.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![2, 1, 1]);
        assert!(!e1.is_nilpotent(&full));
        let h = e1.span(&[v(&[1, 0])]).unwrap();
        let dims: Vec<usize> = e1
            .lower_central_series(&h)
            .iter()
            .map(Subspace::dim)
            .collect();
        assert_eq!(dims, vec![1, 0]);
    }

    #[test]
    fn graded_ideals() {
        let e1 = catalog::e1(3);
        assert!(e1.is_graded_ideal(&e1.span(&[v(&[0, 1])]).unwrap()));
        assert!(e1.is_graded_ideal(&e1.zero_space()));
        assert!(e1.is_graded_ideal(&e1.full_space()));
        let (e2, _) = validate_structure(&catalog::e2_table(3)).unwrap();
        let h = e2.span(&[v(&[1, 0, 0])]).unwrap();
        assert!(!e2.is_graded_ideal(&h));
        assert!(matches!(
            e2.check_graded_ideal(&h),
            Err(AlgebraError::NotIdeal { .. })
        ));
        let mixed = e1.span(&[v(&[1, 1])]).unwrap();
        assert!(matches!(
            e1.check_graded_ideal(&mixed),
            Err(AlgebraError::NotGraded { .. })
        ));
    }

    #[test]
    fn formatting() {
        let (e2, _) = validate_structure(&catalog::e2_table(3)).unwrap();
        assert_eq!(e2.format_element(&v(&[1, 2, 0])), "h+2x");
        assert_eq!(e2.format_element(&v(&[0, 0, 0])), "0");
        assert_eq!(e2.format_element(&v(&[2, 1, 1])), "2h+x+y");
    }
}
