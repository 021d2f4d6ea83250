//! Homomorphisms and the constructions built from them: direct sums,
//! quotients by graded ideals, induced subalgebras, basis changes and pullbacks.

use std::sync::Arc;

use crate::algebra::{Parity, SuperAlgebra};
use crate::error::{AlgebraError, LinalgError, MorphismError};
use crate::field::Vector;
use crate::linalg::{check_vector, invert, left_kernel, row_times, rref_unchecked, Subspace};

/// A grading- and bracket-preserving linear map, stored as the images of the
/// source basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Arc<SuperAlgebra>,
    target: Arc<SuperAlgebra>,
    images: Vec<Vector>,
    kernel: Subspace,
    rank: usize,
}

impl Morphism {
    pub fn new(
        source: Arc<SuperAlgebra>,
        target: Arc<SuperAlgebra>,
        images: Vec<Vector>,
    ) -> Result<Self, MorphismError> {
        if source.field() != target.field() {
            return Err(AlgebraError::FieldMismatch {
                left: source.field().p(),
                right: target.field().p(),
            }
            .into());
        }
        if images.len() != source.dim() {
            return Err(MorphismError::ImageCount {
                expected: source.dim(),
                found: images.len(),
            });
        }
        for img in &images {
            check_vector(target.field(), target.dim(), img)?;
        }
        for (i, img) in images.iter().enumerate() {
            let part = match source.parity(i) {
                Parity::Even => target.even_part(img),
                Parity::Odd => target.odd_part(img),
            };
            if &part != img {
                return Err(MorphismError::Grading { index: i });
            }
        }
        let m = Self::build(source, target, images);
        let n = m.source.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = m.apply_unchecked(&m.source.basis_bracket(i, j));
                let rhs = m.target.bracket_unchecked(&m.images[i], &m.images[j]);
                if lhs != rhs {
                    return Err(MorphismError::Bracket { i, j });
                }
            }
        }
        Ok(m)
    }

    fn build(source: Arc<SuperAlgebra>, target: Arc<SuperAlgebra>, images: Vec<Vector>) -> Self {
        let fp = source.field();
        let kernel_coeffs = left_kernel(fp, target.dim(), &images);
        let kernel = rref_unchecked(fp, source.dim(), kernel_coeffs);
        let rank = source.dim() - kernel.dim();
        Self {
            source,
            target,
            images,
            kernel,
            rank,
        }
    }

    pub fn identity(algebra: Arc<SuperAlgebra>) -> Self {
        let n = algebra.dim();
        let images = (0..n).map(|i| Vector::unit(n, i)).collect();
        Self::build(algebra.clone(), algebra, images)
    }

    pub fn source(&self) -> &Arc<SuperAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SuperAlgebra> {
        &self.target
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_surjective(&self) -> bool {
        self.rank == self.target.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel.is_zero()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn image(&self) -> Subspace {
        rref_unchecked(self.target.field(), self.target.dim(), self.images.clone())
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, LinalgError> {
        check_vector(self.source.field(), self.source.dim(), v)?;
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &Vector) -> Vector {
        row_times(self.source.field(), v, &self.images, self.target.dim())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Morphism) -> Result<Morphism, MorphismError> {
        if first.target != self.source {
            return Err(MorphismError::NotComposable);
        }
        let images = first
            .images
            .iter()
            .map(|v| self.apply_unchecked(v))
            .collect();
        Ok(Self::build(
            first.source.clone(),
            self.target.clone(),
            images,
        ))
    }
}

/// `L_1 ⊕ ... ⊕ L_m` with its canonical injections and projections.
///
/// Basis order: the even vectors of every summand (in summand order), then the
/// odd vectors of every summand.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub algebra: Arc<SuperAlgebra>,
    pub summands: Vec<Arc<SuperAlgebra>>,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
    /// `index_map[s][i]` = position of summand `s`'s basis vector `i` in the sum.
    index_map: Vec<Vec<usize>>,
}

pub fn direct_sum(left: &SuperAlgebra, right: &SuperAlgebra) -> Result<DirectSum, AlgebraError> {
    direct_sum_of(&[left.clone(), right.clone()])
}

pub fn direct_sum_of(summands: &[SuperAlgebra]) -> Result<DirectSum, AlgebraError> {
    assert!(!summands.is_empty());
    let fp = summands[0].field();
    if let Some(bad) = summands.iter().find(|s| s.field() != fp) {
        return Err(AlgebraError::FieldMismatch {
            left: fp.p(),
            right: bad.field().p(),
        });
    }
    let dim_even: usize = summands.iter().map(SuperAlgebra::dim_even).sum();
    let dim_odd: usize = summands.iter().map(SuperAlgebra::dim_odd).sum();
    let n = dim_even + dim_odd;

    let mut index_map = Vec::with_capacity(summands.len());
    let (mut even_at, mut odd_at) = (0, dim_even);
    for s in summands {
        let mut map = Vec::with_capacity(s.dim());
        for i in 0..s.dim() {
            match s.parity(i) {
                Parity::Even => {
                    map.push(even_at);
                    even_at += 1;
                }
                Parity::Odd => {
                    map.push(odd_at);
                    odd_at += 1;
                }
            }
        }
        index_map.push(map);
    }

    let mut constants = vec![0u32; n * n * n];
    let mut names = vec![String::new(); n];
    let mut all_names: Vec<&String> = summands.iter().flat_map(|s| s.names()).collect();
    all_names.sort();
    let clash = all_names.windows(2).any(|w| w[0] == w[1]);
    for (si, s) in summands.iter().enumerate() {
        let map = &index_map[si];
        for i in 0..s.dim() {
            names[map[i]] = if clash {
                format!("{}{}", s.names()[i], si + 1)
            } else {
                s.names()[i].clone()
            };
            for j in 0..s.dim() {
                for k in 0..s.dim() {
                    constants[(map[i] * n + map[j]) * n + map[k]] = s.constant(i, j, k);
                }
            }
        }
    }
    let algebra = Arc::new(SuperAlgebra::from_parts(
        fp, dim_even, dim_odd, constants, names,
    ));
    let summands: Vec<Arc<SuperAlgebra>> = summands.iter().cloned().map(Arc::new).collect();
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for (si, s) in summands.iter().enumerate() {
        let map = &index_map[si];
        let inj = (0..s.dim()).map(|i| Vector::unit(n, map[i])).collect();
        injections.push(Morphism::build(s.clone(), algebra.clone(), inj));
        let proj = (0..n)
            .map(|g| match map.iter().position(|&m| m == g) {
                Some(i) => Vector::unit(s.dim(), i),
                None => Vector::zeros(s.dim()),
            })
            .collect();
        projections.push(Morphism::build(algebra.clone(), s.clone(), proj));
    }
    Ok(DirectSum {
        algebra,
        summands,
        injections,
        projections,
        index_map,
    })
}

impl DirectSum {
    pub fn split(&self, v: &Vector) -> Vec<Vector> {
        self.index_map
            .iter()
            .map(|map| Vector(map.iter().map(|&g| v.0[g]).collect()))
            .collect()
    }

    pub fn join(&self, parts: &[Vector]) -> Vector {
        let mut out = vec![0u32; self.algebra.dim()];
        for (map, part) in self.index_map.iter().zip(parts) {
            for (i, &g) in map.iter().enumerate() {
                out[g] = part.0[i];
            }
        }
        Vector(out)
    }

    /// Image of a subspace of summand `index` inside the sum.
    pub fn embed_space(&self, index: usize, s: &Subspace) -> Subspace {
        let rows = s
            .basis()
            .iter()
            .map(|r| self.injections[index].apply_unchecked(r))
            .collect();
        rref_unchecked(self.algebra.field(), self.algebra.dim(), rows)
    }
}

/// `L / J` on the lexicographically first graded complement of `J` drawn from
/// the standard basis.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: Arc<SuperAlgebra>,
    pub projection: Morphism,
    /// Standard basis indices of `L` spanning the complement, ascending.
    pub complement: Vec<usize>,
}

pub fn quotient(l: &Arc<SuperAlgebra>, ideal: &Subspace) -> Result<Quotient, AlgebraError> {
    l.check_graded_ideal(ideal)?;
    let fp = l.field();
    let n = l.dim();
    let mut complement = Vec::new();
    let mut span = ideal.clone();
    for i in 0..n {
        let e = Vector::unit(n, i);
        if !span.contains_unchecked(&e) {
            complement.push(i);
            span = span.sum(&rref_unchecked(fp, n, vec![e]))?;
        }
    }
    // change of basis: rows = [ideal basis; complement units]
    let mut basis: Vec<Vector> = ideal.basis().to_vec();
    basis.extend(complement.iter().map(|&i| Vector::unit(n, i)));
    let inverse = invert(fp, &basis)?;
    let k = ideal.dim();
    let q = complement.len();
    let coords = |v: &Vector| -> Vector {
        let w = row_times(fp, v, &inverse, n);
        Vector(w.0[k..].to_vec())
    };
    let dim_even = complement.iter().filter(|&&i| i < l.dim_even()).count();
    let mut constants = vec![0u32; q * q * q];
    for (a, &ia) in complement.iter().enumerate() {
        for (b, &ib) in complement.iter().enumerate() {
            let c = coords(&l.basis_bracket(ia, ib));
            for (kk, &val) in c.0.iter().enumerate() {
                constants[(a * q + b) * q + kk] = val;
            }
        }
    }
    let names = complement.iter().map(|&i| l.names()[i].clone()).collect();
    let algebra = Arc::new(SuperAlgebra::from_parts(
        fp,
        dim_even,
        q - dim_even,
        constants,
        names,
    ));
    let images = (0..n).map(|i| coords(&Vector::unit(n, i))).collect();
    let projection = Morphism::build(l.clone(), algebra.clone(), images);
    Ok(Quotient {
        algebra,
        projection,
        complement,
    })
}

/// A graded bracket-closed subspace as an algebra in its own right, on the
/// (homogeneous) RREF basis, with the inclusion morphism.
pub fn induced_subalgebra(
    l: &Arc<SuperAlgebra>,
    s: &Subspace,
) -> Result<(Arc<SuperAlgebra>, Morphism), AlgebraError> {
    if !l.is_graded(s) {
        let witness = s
            .basis()
            .iter()
            .find(|r| !s.contains_unchecked(&l.even_part(r)))
            .cloned()
            .unwrap_or_else(|| l.zero());
        return Err(AlgebraError::NotGraded { witness });
    }
    if !l.is_closed(s) {
        return Err(AlgebraError::NotSubalgebra);
    }
    let fp = l.field();
    let d = s.dim();
    // even indices precede odd ones, so the RREF basis lists even rows first
    let dim_even = s
        .basis()
        .iter()
        .filter(|r| r.leading_index().unwrap() < l.dim_even())
        .count();
    let mut constants = vec![0u32; d * d * d];
    for (a, ra) in s.basis().iter().enumerate() {
        for (b, rb) in s.basis().iter().enumerate() {
            let coords = s
                .coordinates_unchecked(&l.bracket_unchecked(ra, rb))
                .expect("closed subspace");
            for (k, &val) in coords.iter().enumerate() {
                constants[(a * d + b) * d + k] = val;
            }
        }
    }
    let names = s.basis().iter().map(|r| l.format_element(r)).collect();
    let algebra = Arc::new(SuperAlgebra::from_parts(
        fp,
        dim_even,
        d - dim_even,
        constants,
        names,
    ));
    let inclusion = Morphism::build(algebra.clone(), l.clone(), s.basis().to_vec());
    Ok((algebra, inclusion))
}

/// Transports the bracket along an invertible graded linear map `g`:
/// `[u, v]' = g[g⁻¹u, g⁻¹v]`. Returns the new algebra and `g` as an isomorphism.
pub fn transport(
    l: &Arc<SuperAlgebra>,
    images: Vec<Vector>,
) -> Result<(Arc<SuperAlgebra>, Morphism), MorphismError> {
    let fp = l.field();
    let n = l.dim();
    if images.len() != n {
        return Err(MorphismError::ImageCount {
            expected: n,
            found: images.len(),
        });
    }
    for (i, img) in images.iter().enumerate() {
        check_vector(fp, n, img)?;
        let part = match l.parity(i) {
            Parity::Even => l.even_part(img),
            Parity::Odd => l.odd_part(img),
        };
        if &part != img {
            return Err(MorphismError::Grading { index: i });
        }
    }
    let inverse = invert(fp, &images)?;
    let apply = |v: &Vector| row_times(fp, v, &images, n);
    let mut constants = vec![0u32; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let br = l.bracket_unchecked(&inverse[i], &inverse[j]);
            let img = apply(&br);
            for (k, &val) in img.0.iter().enumerate() {
                constants[(i * n + j) * n + k] = val;
            }
        }
    }
    let target = Arc::new(SuperAlgebra::from_parts(
        fp,
        l.dim_even(),
        l.dim_odd(),
        constants,
        l.names().to_vec(),
    ));
    let iso = Morphism::new(l.clone(), target.clone(), images)?;
    Ok((target, iso))
}

/// `P = L ×_M N ⊆ L ⊕ N` with its two projections.
#[derive(Debug, Clone)]
pub struct Pullback {
    pub algebra: Arc<SuperAlgebra>,
    pub sum: DirectSum,
    /// `P` as a subspace of `L ⊕ N`.
    pub space: Subspace,
    pub inclusion: Morphism,
    pub to_left: Morphism,
    pub to_right: Morphism,
}

pub fn pullback(f: &Morphism, g: &Morphism) -> Result<Pullback, MorphismError> {
    if f.target != g.target {
        return Err(MorphismError::TargetMismatch);
    }
    if !f.is_surjective() || !g.is_surjective() {
        return Err(MorphismError::NotSurjective);
    }
    let sum = direct_sum(&f.source, &g.source)?;
    let fp = sum.algebra.field();
    let m = f.target.dim();
    // (x, y) ↦ f(x) - g(y)
    let rows: Vec<Vector> = (0..sum.algebra.dim())
        .map(|idx| {
            let parts = sum.split(&Vector::unit(sum.algebra.dim(), idx));
            let fx = f.apply_unchecked(&parts[0]);
            let gy = g.apply_unchecked(&parts[1]);
            fp.sub_vec(&fx, &gy)
        })
        .collect();
    let kernel = left_kernel(fp, m, &rows);
    let space = rref_unchecked(fp, sum.algebra.dim(), kernel);
    let (algebra, inclusion) = induced_subalgebra(&sum.algebra, &space)?;
    let to_left = sum.projections[0].after(&inclusion)?;
    let to_right = sum.projections[1].after(&inclusion)?;
    Ok(Pullback {
        algebra,
        sum,
        space,
        inclusion,
        to_left,
        to_right,
    })
}

impl Pullback {
    /// The unique mediating map `k ↦ (u(k), v(k))` for a commuting cone.
    pub fn mediating(
        &self,
        u: &Morphism,
        v: &Morphism,
        f: &Morphism,
        g: &Morphism,
    ) -> Result<Morphism, MorphismError> {
        if u.source != v.source || u.target != f.source || v.target != g.source {
            return Err(MorphismError::NotComposable);
        }
        if f.after(u)?.images != g.after(v)?.images {
            return Err(MorphismError::ConeNotCommuting);
        }
        let images = (0..u.source.dim())
            .map(|i| {
                let pair = self.sum.join(&[u.images[i].clone(), v.images[i].clone()]);
                Vector(
                    self.space
                        .coordinates_unchecked(&pair)
                        .expect("cone lands in the pullback"),
                )
            })
            .collect();
        Morphism::new(u.source.clone(), self.algebra.clone(), images)
    }
}

/// `f ⊕ g : L₁ ⊕ L₂ → M₁ ⊕ M₂`, acting summand-wise. Returns the map with
/// both sums.
pub fn sum_of_morphisms(
    f: &Morphism,
    g: &Morphism,
) -> Result<(DirectSum, DirectSum, Morphism), MorphismError> {
    let source = direct_sum(&f.source, &g.source)?;
    let target = direct_sum(&f.target, &g.target)?;
    let n = source.algebra.dim();
    let images = (0..n)
        .map(|i| {
            let parts = source.split(&Vector::unit(n, i));
            target.join(&[f.apply_unchecked(&parts[0]), g.apply_unchecked(&parts[1])])
        })
        .collect();
    let map = Morphism::new(source.algebra.clone(), target.algebra.clone(), images)?;
    Ok((source, target, map))
}
