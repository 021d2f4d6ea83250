//! Solvabilizers and nilpotentizers by exhaustive enumeration.
//!
//! Everything reduces to one question: is `⟨x, z⟩` solvable? Since `⟨x, z⟩` is
//! the closure of `span{x, z}`, answers are memoized per canonical (RREF)
//! span, so `p^(2n)` pair queries cost one closure per subspace of dimension
//! at most two.

use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use rayon::prelude::*;

use crate::algebra::{Closure, Subalg, SuperAlgebra};
use crate::error::EnumerationError;
use crate::field::Vector;
use crate::linalg::{all_subspaces, rref_unchecked, Subspace};

/// Subspace enumeration is limited to GF(p)^n with `n <= 4` and `p <= 5`.
pub const MAX_ENUMERATION_DIM: usize = 4;
pub const MAX_ENUMERATION_PRIME: u32 = 5;

/// A set of elements, kept sorted lexicographically and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ElementSet {
    members: Vec<Vector>,
}

impl ElementSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Takes members already in sorted order with no repeats.
    pub(crate) fn from_sorted(members: Vec<Vector>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { members }
    }

    pub fn members(&self) -> &[Vector] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.members.binary_search(v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vector> {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|v| other.contains(v))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        Self::from_sorted(
            self.members
                .iter()
                .filter(|v| other.contains(v))
                .cloned()
                .collect(),
        )
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.members.iter().chain(&other.members).cloned().collect()
    }

    /// First member of `self` missing from `other`.
    pub fn first_missing_from(&self, other: &ElementSet) -> Option<&Vector> {
        self.members.iter().find(|v| !other.contains(v))
    }
}

impl FromIterator<Vector> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Vector>>(iter: I) -> Self {
        let mut members: Vec<Vector> = iter.into_iter().collect();
        members.sort();
        members.dedup();
        Self { members }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Vector;
    type IntoIter = std::slice::Iter<'a, Vector>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Memo of pair answers keyed by the RREF of `span{x, z}`.
///
/// Concurrent inserts of the same key always carry the same value, so
/// overwrites are harmless.
#[derive(Debug, Default)]
pub struct PairCache {
    map: DashMap<Subspace, bool>,
}

impl PairCache {
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get_or_compute(&self, key: Subspace, compute: impl FnOnce(&Subspace) -> bool) -> bool {
        if let Some(hit) = self.map.get(&key) {
            return *hit;
        }
        let value = compute(&key);
        self.map.insert(key, value);
        value
    }
}

/// Source of pair answers. [`Solver`] is the real one; the trait exists so the
/// verification harness can be exercised against other oracles.
pub trait PairOracle: Sync {
    fn algebra(&self) -> &SuperAlgebra;

    /// Every element of the algebra, lexicographically.
    fn elements(&self) -> &[Vector];

    /// Is `⟨x, z⟩` solvable?
    fn pair_solvable(&self, x: &Vector, z: &Vector) -> bool;

    /// Is `⟨x, z⟩` nilpotent?
    fn pair_nilpotent(&self, x: &Vector, z: &Vector) -> bool;

    /// `I_L(x, y)`.
    fn indicator(&self, x: &Vector, y: &Vector) -> u8 {
        u8::from(self.pair_solvable(x, y))
    }

    /// `sol_L(z)`.
    fn solvabilizer_of(&self, z: &Vector) -> ElementSet {
        self.solvabilizer_within(self.elements(), z)
    }

    /// `sol_A(z)` for `A` given as a sorted slice.
    fn solvabilizer_within(&self, a: &[Vector], z: &Vector) -> ElementSet {
        ElementSet::from_sorted(
            a.par_iter()
                .filter(|x| self.pair_solvable(x, z))
                .cloned()
                .collect(),
        )
    }

    /// `sol_A(B)`, with `sol_∅(B) = ∅` and `sol_A(∅) = {x ∈ A : ⟨x⟩ solvable}`.
    /// Nonempty `B` is handled as `∩_{z ∈ B} sol_A(z)`.
    fn solvabilizer_rel(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        if a.is_empty() {
            return ElementSet::empty();
        }
        if b.is_empty() {
            let zero = self.algebra().zero();
            return self.solvabilizer_within(a.members(), &zero);
        }
        let mut acc = a.clone();
        for z in b {
            acc = self.solvabilizer_within(acc.members(), z);
            if acc.is_empty() {
                break;
            }
        }
        acc
    }

    /// `sol(L)` by the direct double loop, stopping at the first witness per candidate.
    fn solvabilizer(&self) -> ElementSet {
        let all = self.elements();
        ElementSet::from_sorted(
            all.par_iter()
                .filter(|x| all.iter().all(|z| self.pair_solvable(x, z)))
                .cloned()
                .collect(),
        )
    }

    /// `sol(L)` as `∩_{z ∈ L} sol_L(z)`.
    fn solvabilizer_by_intersection(&self) -> ElementSet {
        let mut acc = ElementSet::from_sorted(self.elements().to_vec());
        for z in self.elements() {
            let next = self.solvabilizer_of(z);
            acc = acc.intersection(&next);
        }
        acc
    }

    /// `nil_L(z)`.
    fn nilpotentizer_of(&self, z: &Vector) -> ElementSet {
        ElementSet::from_sorted(
            self.elements()
                .par_iter()
                .filter(|x| self.pair_nilpotent(x, z))
                .cloned()
                .collect(),
        )
    }

    /// `nil(L)`.
    fn nilpotentizer(&self) -> ElementSet {
        let all = self.elements();
        ElementSet::from_sorted(
            all.par_iter()
                .filter(|x| all.iter().all(|z| self.pair_nilpotent(x, z)))
                .cloned()
                .collect(),
        )
    }
}

/// Memoizing pair oracle for one algebra.
#[derive(Debug)]
pub struct Solver {
    algebra: Arc<SuperAlgebra>,
    closure: Closure,
    solvable: PairCache,
    nilpotent: PairCache,
    elements: OnceLock<Vec<Vector>>,
}

impl Solver {
    pub fn new(algebra: Arc<SuperAlgebra>) -> Self {
        Self::with_closure(algebra, Closure::Plain)
    }

    pub fn with_closure(algebra: Arc<SuperAlgebra>, closure: Closure) -> Self {
        Self {
            algebra,
            closure,
            solvable: PairCache::default(),
            nilpotent: PairCache::default(),
            elements: OnceLock::new(),
        }
    }

    pub fn shared_algebra(&self) -> &Arc<SuperAlgebra> {
        &self.algebra
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    pub fn cache(&self) -> &PairCache {
        &self.solvable
    }

    fn span_key(&self, x: &Vector, z: &Vector) -> Subspace {
        rref_unchecked(
            self.algebra.field(),
            self.algebra.dim(),
            vec![x.clone(), z.clone()],
        )
    }

    /// `⟨gens⟩` under this solver's closure mode.
    pub fn generate(&self, gens: Vec<Vector>) -> Subalg {
        self.algebra.closure_unchecked(gens, self.closure)
    }

    /// Is the subalgebra generated by `span` solvable? `span` need not be closed.
    pub fn span_solvable(&self, span: &Subspace) -> bool {
        let closed = self.generate(span.basis().to_vec());
        self.algebra.is_solvable(&closed.space)
    }

    /// Every solvable subalgebra not properly contained in another, sorted by
    /// decreasing dimension. In graded mode only graded subalgebras count.
    pub fn maximal_solvable_subalgebras(
        &self,
        containing: Option<&Vector>,
    ) -> Result<Vec<Subalg>, EnumerationError> {
        let l = &self.algebra;
        let p = l.field().p();
        if l.dim() > MAX_ENUMERATION_DIM || p > MAX_ENUMERATION_PRIME {
            return Err(EnumerationError::TooLarge {
                n: l.dim(),
                p,
                max_n: MAX_ENUMERATION_DIM,
                max_p: MAX_ENUMERATION_PRIME,
            });
        }
        let solvable: Vec<Subspace> = all_subspaces(l.field(), l.dim())
            .into_par_iter()
            .filter(|s| {
                l.is_closed(s)
                    && (self.closure == Closure::Plain || l.is_graded(s))
                    && l.is_solvable(s)
            })
            .collect();
        let mut maximal: Vec<Subspace> = solvable
            .iter()
            .filter(|s| {
                !solvable
                    .iter()
                    .any(|t| t.dim() > s.dim() && s.is_subspace_of(t).unwrap_or(false))
            })
            .filter(|s| containing.is_none_or(|z| s.contains_unchecked(z)))
            .cloned()
            .collect();
        maximal.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.cmp(b)));
        Ok(maximal
            .into_iter()
            .map(|space| {
                let graded = l.is_graded(&space);
                Subalg { space, graded }
            })
            .collect())
    }
}

impl PairOracle for Solver {
    fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    fn elements(&self) -> &[Vector] {
        self.elements.get_or_init(|| self.algebra.elements())
    }

    fn pair_solvable(&self, x: &Vector, z: &Vector) -> bool {
        let key = self.span_key(x, z);
        self.solvable
            .get_or_compute(key, |span| self.span_solvable(span))
    }

    fn pair_nilpotent(&self, x: &Vector, z: &Vector) -> bool {
        let key = self.span_key(x, z);
        self.nilpotent.get_or_compute(key, |span| {
            let closed = self.generate(span.basis().to_vec());
            self.algebra.is_nilpotent(&closed.space)
        })
    }
}
