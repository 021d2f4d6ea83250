//! Dense linear algebra over GF(p): reduced row echelon form, subspace
//! membership, sums, intersections and kernels.
//!
//! Every [`Subspace`] is stored in its unique RREF with leading ones, so two
//! subspaces are equal exactly when their stored rows are equal. The same
//! representation is used as a memoization key elsewhere in the crate.

use crate::error::LinalgError;
use crate::field::{FieldPrime, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: FieldPrime,
    ambient_dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

/// Reduced row echelon basis of the span of `rows` inside GF(p)^n.
pub fn rref(field: FieldPrime, n: usize, rows: &[Vector]) -> Result<Subspace, LinalgError> {
    for r in rows {
        check_vector(field, n, r)?;
    }
    Ok(rref_unchecked(field, n, rows.to_vec()))
}

pub(crate) fn check_vector(field: FieldPrime, n: usize, v: &Vector) -> Result<(), LinalgError> {
    if v.len() != n {
        return Err(LinalgError::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    if let Some(&value) = v.coords().iter().find(|&&c| c >= field.p()) {
        return Err(LinalgError::CoordinateOutOfRange {
            value,
            p: field.p(),
        });
    }
    Ok(())
}

pub(crate) fn rref_unchecked(field: FieldPrime, n: usize, mut rows: Vec<Vector>) -> Subspace {
    let pivots = reduce_in_place(field, n, &mut rows);
    rows.truncate(pivots.len());
    Subspace {
        field,
        ambient_dim: n,
        rows,
        pivots,
    }
}

/// Gauss-Jordan elimination restricted to the first `cols` columns.
/// Returns pivot columns; the first `pivots.len()` rows hold the reduced basis.
fn reduce_columns(field: FieldPrime, cols: usize, rows: &mut [Vector]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i].0[c] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = field.inv(rows[r].0[c]);
        if inv != 1 {
            for x in rows[r].0.iter_mut() {
                *x = field.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row.0[c];
            if factor != 0 {
                let s = field.neg(factor);
                for (x, &y) in row.0.iter_mut().zip(&pivot_row.0) {
                    *x = field.add(*x, field.mul(s, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn reduce_in_place(field: FieldPrime, n: usize, rows: &mut [Vector]) -> Vec<usize> {
    reduce_columns(field, n, rows)
}

impl Subspace {
    pub fn zero(field: FieldPrime, n: usize) -> Self {
        Self {
            field,
            ambient_dim: n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldPrime, n: usize) -> Self {
        Self {
            field,
            ambient_dim: n,
            rows: (0..n).map(|i| Vector::unit(n, i)).collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn span(field: FieldPrime, n: usize, rows: &[Vector]) -> Result<Self, LinalgError> {
        rref(field, n, rows)
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch {
                left: self.field.p(),
                right: other.field.p(),
            });
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Coefficients of `v` in the RREF basis, or `None` when `v` is not in the span.
    pub fn coordinates(&self, v: &Vector) -> Result<Option<Vec<u32>>, LinalgError> {
        check_vector(self.field, self.ambient_dim, v)?;
        Ok(self.coordinates_unchecked(v))
    }

    pub(crate) fn coordinates_unchecked(&self, v: &Vector) -> Option<Vec<u32>> {
        let coeffs: Vec<u32> = self.pivots.iter().map(|&c| v.0[c]).collect();
        let mut residual = v.clone();
        for (row, &a) in self.rows.iter().zip(&coeffs) {
            if a != 0 {
                residual = self.field.axpy(&residual, self.field.neg(a), row);
            }
        }
        residual.is_zero().then_some(coeffs)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool, LinalgError> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub(crate) fn contains_unchecked(&self, v: &Vector) -> bool {
        self.coordinates_unchecked(v).is_some()
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coeffs: &[u32]) -> Vector {
        let mut out = Vector::zeros(self.ambient_dim);
        for (row, &a) in self.rows.iter().zip(coeffs) {
            if a != 0 {
                out = self.field.axpy(&out, a, row);
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.compatible(other)?;
        Ok(self.rows.iter().all(|r| other.contains_unchecked(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.compatible(other)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(rref_unchecked(self.field, self.ambient_dim, rows))
    }

    /// `S ∩ T` from the left kernel of the stacked system `[S; -T]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.compatible(other)?;
        let fp = self.field;
        let mut stacked = self.rows.clone();
        stacked.extend(other.rows.iter().map(|r| fp.scale(fp.p() - 1, r)));
        let kernel = left_kernel(fp, self.ambient_dim, &stacked);
        let k = self.rows.len();
        let rows: Vec<Vector> = kernel
            .iter()
            .map(|coeffs| self.combine(&coeffs.0[..k]))
            .collect();
        Ok(rref_unchecked(fp, self.ambient_dim, rows))
    }

    /// All `p^dim` elements, sorted lexicographically.
    pub fn elements(&self) -> Vec<Vector> {
        let d = self.dim();
        let count = (self.field.p() as usize).pow(d as u32);
        let mut out: Vec<Vector> = (0..count)
            .map(|i| self.combine(self.field.vector_at(d, i).coords()))
            .collect();
        out.sort();
        out
    }
}

/// Basis of `{c : Σ c_i rows_i = 0}`, each vector of length `rows.len()`.
pub fn left_kernel(field: FieldPrime, n: usize, rows: &[Vector]) -> Vec<Vector> {
    let m = rows.len();
    let mut aug: Vec<Vector> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut coords = r.0.clone();
            coords.resize(n + m, 0);
            coords[n + i] = 1;
            Vector(coords)
        })
        .collect();
    let pivots = reduce_columns(field, n, &mut aug);
    aug.into_iter()
        .skip(pivots.len())
        .map(|r| Vector(r.0[n..].to_vec()))
        .collect()
}

/// Inverse of a square matrix given by rows, as rows.
pub fn invert(field: FieldPrime, rows: &[Vector]) -> Result<Vec<Vector>, LinalgError> {
    let n = rows.len();
    for r in rows {
        check_vector(field, n, r)?;
    }
    let mut aug: Vec<Vector> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut coords = r.0.clone();
            coords.resize(2 * n, 0);
            coords[n + i] = 1;
            Vector(coords)
        })
        .collect();
    let pivots = reduce_columns(field, n, &mut aug);
    if pivots.len() < n {
        return Err(LinalgError::Singular);
    }
    Ok(aug.into_iter().map(|r| Vector(r.0[n..].to_vec())).collect())
}

/// Row vector times matrix: `Σ v_i rows_i`.
pub fn row_times(field: FieldPrime, v: &Vector, rows: &[Vector], out_dim: usize) -> Vector {
    let mut out = Vector::zeros(out_dim);
    for (&a, r) in v.0.iter().zip(rows) {
        if a != 0 {
            out = field.axpy(&out, a, r);
        }
    }
    out
}

/// Number of subspaces of GF(p)^n (sum of Gaussian binomials), saturating.
pub fn count_subspaces(p: u32, n: usize) -> u128 {
    let q = p as u128;
    (0..=n)
        .map(|k| {
            let mut num = 1u128;
            let mut den = 1u128;
            for i in 0..k {
                num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
                den = den.saturating_mul(q.saturating_pow((i + 1) as u32).saturating_sub(1));
            }
            num / den
        })
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// Every subspace of GF(p)^n, enumerated by pivot pattern and free entries.
pub fn all_subspaces(field: FieldPrime, n: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&c| mask & (1 << c) != 0).collect();
        // free positions: (row r, column c) with c > pivot_r and c not a pivot
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                let pivots = &pivots;
                (pc + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let combos = (field.p() as usize).pow(free.len() as u32);
        for idx in 0..combos {
            let values = field.vector_at(free.len(), idx);
            let mut rows: Vec<Vector> = pivots.iter().map(|&pc| Vector::unit(n, pc)).collect();
            for (&(r, c), &v) in free.iter().zip(values.coords()) {
                rows[r].0[c] = v;
            }
            out.push(Subspace {
                field,
                ambient_dim: n,
                rows,
                pivots: pivots.clone(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f3() -> FieldPrime {
        FieldPrime::new(3).unwrap()
    }

    fn v(c: &[u32]) -> Vector {
        Vector::new(c.to_vec())
    }

    #[test]
    fn identity_rows_are_already_reduced() {
        let rows = vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])];
        let s = rref(f3(), 3, &rows).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(s.basis(), &rows[..]);
    }

    #[test]
    fn zero_rows_give_zero_subspace() {
        let s = rref(f3(), 3, &[v(&[0, 0, 0]), v(&[0, 0, 0])]).unwrap();
        assert_eq!(s.dim(), 0);
        assert!(s.basis().is_empty());
    }

    #[test]
    fn dependent_rows_collapse() {
        let s = rref(f3(), 3, &[v(&[1, 2, 0]), v(&[2, 1, 0])]).unwrap();
        assert_eq!(s.basis(), &[v(&[1, 2, 0])]);
    }

    #[test]
    fn mismatched_lengths_are_rejected() {
        let err = rref(f3(), 3, &[v(&[1, 2, 0]), v(&[1, 0])]).unwrap_err();
        assert_eq!(
            err,
            LinalgError::DimensionMismatch {
                expected: 3,
                found: 2
            }
        );
        let other = Subspace::zero(FieldPrime::new(5).unwrap(), 3);
        assert!(matches!(
            Subspace::zero(f3(), 3).sum(&other),
            Err(LinalgError::FieldMismatch { .. })
        ));
    }

    #[test]
    fn membership() {
        let s = rref(f3(), 3, &[v(&[1, 2, 0])]).unwrap();
        assert!(s.contains(&v(&[0, 0, 0])).unwrap());
        assert!(s.contains(&v(&[2, 1, 0])).unwrap());
        let t = rref(f3(), 3, &[v(&[0, 1, 0])]).unwrap();
        assert!(!t.contains(&v(&[1, 0, 0])).unwrap());
        assert!(t.contains(&v(&[1, 0])).is_err());
    }

    #[test]
    fn sums_and_intersections() {
        let fp = f3();
        let x = rref(fp, 3, &[v(&[1, 0, 0])]).unwrap();
        let y = rref(fp, 3, &[v(&[0, 1, 0])]).unwrap();
        assert_eq!(x.sum(&Subspace::zero(fp, 3)).unwrap(), x);
        assert_eq!(x.intersection(&Subspace::full(fp, 3)).unwrap(), x);
        assert_eq!(x.sum(&y).unwrap().dim(), 2);
        let a = rref(fp, 3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = rref(fp, 3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(a.intersection(&b).unwrap(), y);
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        for (p, n) in [(3u32, 1usize), (3, 2), (3, 3), (5, 3), (3, 4), (5, 4)] {
            let fp = FieldPrime::new(p).unwrap();
            let all = all_subspaces(fp, n);
            assert_eq!(all.len() as u128, count_subspaces(p, n), "p={p} n={n}");
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
            for s in &all {
                assert_eq!(&rref(fp, n, s.basis()).unwrap(), s);
            }
        }
        // 1 + 13 + 13 + 1 subspaces of GF(3)^3
        assert_eq!(count_subspaces(3, 3), 28);
    }

    #[test]
    fn inverse_of_invertible_matrix() {
        let fp = FieldPrime::new(5).unwrap();
        let m = vec![v(&[1, 2]), v(&[3, 4])];
        let inv = invert(fp, &m).unwrap();
        for (i, row) in m.iter().enumerate() {
            let prod = row_times(fp, row, &inv, 2);
            assert_eq!(prod, Vector::unit(2, i));
        }
        assert_eq!(
            invert(fp, &[v(&[1, 2]), v(&[2, 4])]),
            Err(LinalgError::Singular)
        );
    }

    fn vectors(p: u32, n: usize, max_rows: usize) -> impl Strategy<Value = Vec<Vector>> {
        prop::collection::vec(
            prop::collection::vec(0..p, n).prop_map(Vector::new),
            0..=max_rows,
        )
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(rows in vectors(5, 4, 5)) {
            let fp = FieldPrime::new(5).unwrap();
            let s = rref(fp, 4, &rows).unwrap();
            prop_assert_eq!(rref(fp, 4, s.basis()).unwrap(), s);
        }

        #[test]
        fn dimension_formula(a in vectors(3, 4, 3), b in vectors(3, 4, 3)) {
            let fp = f3();
            let s = rref(fp, 4, &a).unwrap();
            let t = rref(fp, 4, &b).unwrap();
            let sum = s.sum(&t).unwrap();
            let meet = s.intersection(&t).unwrap();
            prop_assert_eq!(sum.dim() + meet.dim(), s.dim() + t.dim());
            prop_assert!(meet.is_subspace_of(&s).unwrap());
            prop_assert!(meet.is_subspace_of(&t).unwrap());
        }

        #[test]
        fn membership_agrees_with_coefficient_search(
            p in prop::sample::select(vec![3u32, 5]),
            gens in vectors(5, 3, 3),
            target in prop::collection::vec(0u32..5, 3),
        ) {
            let fp = FieldPrime::new(p).unwrap();
            let gens: Vec<Vector> = gens
                .into_iter()
                .map(|g| Vector::new(g.coords().iter().map(|c| c % p).collect()))
                .collect();
            let target = Vector::new(target.into_iter().map(|c| c % p).collect());
            let s = rref(fp, 3, &gens).unwrap();
            // brute force over every coefficient tuple
            let k = gens.len();
            let brute = (0..(p as usize).pow(k as u32)).any(|i| {
                let coeffs = fp.vector_at(k, i);
                row_times(fp, &coeffs, &gens, 3) == target
            });
            prop_assert_eq!(s.contains(&target).unwrap(), brute);
        }
    }
}
