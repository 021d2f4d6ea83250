use thiserror::Error;

use crate::field::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not prime")]
    NotPrime(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("coordinate {value} out of range for GF({p})")]
    CoordinateOutOfRange { value: u32, p: u32 },
    #[error("matrix is singular")]
    Singular,
}

/// One failed Lie superalgebra axiom, with the basis indices or vector that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `c[i][j][k] != 0` although `|k| != |i| + |j|`.
    Grading { i: usize, j: usize, k: usize },
    /// `c[j][i][k] != -(-1)^{|i||j|} c[i][j][k]`.
    SkewSymmetry { i: usize, j: usize, k: usize },
    /// Super Jacobi identity fails on the basis triple `(a, b, c)`.
    Jacobi { a: usize, b: usize, c: usize },
    /// `[x,[x,x]] != 0` for this odd vector (characteristic 3 only).
    OddCube { x: Vector },
    /// The odd part is too large to check the cubic identity by enumeration.
    OddCubeUnchecked { dim_odd: usize },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Grading { i, j, k } => {
                write!(
                    f,
                    "grading: [e{i},e{j}] has a component on e{k} of the wrong parity"
                )
            }
            Self::SkewSymmetry { i, j, k } => {
                write!(
                    f,
                    "super skew-symmetry: [e{j},e{i}] and [e{i},e{j}] disagree on e{k}"
                )
            }
            Self::Jacobi { a, b, c } => {
                write!(f, "super Jacobi identity fails on (e{a}, e{b}, e{c})")
            }
            Self::OddCube { x } => write!(f, "[x,[x,x]] != 0 for odd x = {x:?}"),
            Self::OddCubeUnchecked { dim_odd } => write!(
                f,
                "unvalidated axiom: [x,[x,x]] = 0 not checked, odd dimension {dim_odd} exceeds 8"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("structure table has {found} constants, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("{} axiom violation(s); first: {}", .0.len(), .0[0])]
    Axioms(Vec<AxiomViolation>),
    #[error("basis_names has {found} entries, expected {expected}")]
    BasisNames { expected: usize, found: usize },
    #[error("subspace is not graded: {witness:?} has a homogeneous component outside it")]
    NotGraded { witness: Vector },
    #[error("subspace is not an ideal: [{inside:?}, e{basis}] leaves it")]
    NotIdeal { inside: Vector, basis: usize },
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("algebras are over different fields: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("expected {expected} images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("image of basis vector e{index} is not homogeneous of the same parity")]
    Grading { index: usize },
    #[error("bracket not preserved on (e{i}, e{j})")]
    Bracket { i: usize, j: usize },
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("morphism is not surjective")]
    NotSurjective,
    #[error("morphism is not injective")]
    NotInjective,
    #[error("morphisms do not share a target")]
    TargetMismatch,
    #[error("sequence is not exact: image of the first map differs from the kernel of the second")]
    NotExact,
    #[error("cone does not commute: f∘u != g∘v")]
    ConeNotCommuting,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("enumeration too large: n = {n}, p = {p} (limit n <= {max_n}, p <= {max_p})")]
    TooLarge {
        n: usize,
        p: u32,
        max_n: usize,
        max_p: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph undefined for solvable algebra")]
    SolvableAlgebra,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("measure needs at least two vertices, found {0}")]
    TooFewVertices(usize),
    #[error("measure is only defined on the solvable graph")]
    WrongKind,
    #[error("isomorphism search capped at {cap} vertices, graph has {found}")]
    CapExceeded { cap: usize, found: usize },
    #[error("direct-sum measure formula needs non-solvable summands with at least two vertices")]
    FormulaPreconditions,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
