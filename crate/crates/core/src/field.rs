//! Prime fields GF(p) for odd p and coordinate vectors over them.

use std::fmt;

use crate::error::FieldError;

/// An odd prime `p`, the characteristic of the ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldPrime {
    p: u32,
}

impl FieldPrime {
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if p == 2 {
            return Err(FieldError::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in GF({})", self.p);
        // Fermat: a^(p-2)
        let mut base = a as u64 % self.p as u64;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            exp >>= 1;
        }
        acc as u32
    }

    pub fn zero_vector(self, n: usize) -> Vector {
        Vector::zeros(n)
    }

    /// `a + s·b`, coordinatewise.
    pub fn axpy(self, a: &Vector, s: u32, b: &Vector) -> Vector {
        debug_assert_eq!(a.len(), b.len());
        Vector(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| self.add(x, self.mul(s, y)))
                .collect(),
        )
    }

    pub fn add_vec(self, a: &Vector, b: &Vector) -> Vector {
        self.axpy(a, 1, b)
    }

    pub fn sub_vec(self, a: &Vector, b: &Vector) -> Vector {
        self.axpy(a, self.p - 1, b)
    }

    pub fn scale(self, s: u32, a: &Vector) -> Vector {
        Vector(a.0.iter().map(|&x| self.mul(s, x)).collect())
    }

    /// Number of vectors in GF(p)^n, if it fits in a `usize`.
    pub fn space_size(self, n: usize) -> Option<usize> {
        (self.p as usize).checked_pow(n as u32)
    }

    /// Position of `v` in the lexicographic enumeration of GF(p)^n.
    pub fn index_of(self, v: &Vector) -> usize {
        v.0.iter()
            .fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    /// Inverse of [`FieldPrime::index_of`].
    pub fn vector_at(self, n: usize, mut index: usize) -> Vector {
        let mut coords = vec![0u32; n];
        for slot in coords.iter_mut().rev() {
            *slot = (index % self.p as usize) as u32;
            index /= self.p as usize;
        }
        Vector(coords)
    }

    /// Every vector of GF(p)^n in lexicographic order.
    pub fn all_vectors(self, n: usize) -> Vec<Vector> {
        let size = self
            .space_size(n)
            .expect("ambient space too large to enumerate");
        (0..size).map(|i| self.vector_at(n, i)).collect()
    }
}

impl fmt::Display for FieldPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Coordinates of an element in a fixed basis. Entries are residues in `[0, p)`.
///
/// The derived ordering is lexicographic on coordinates, which is the vertex
/// and element ordering used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(pub(crate) Vec<u32>);

impl Vector {
    pub fn new(coords: Vec<u32>) -> Self {
        Self(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    /// Reduces arbitrary integers into canonical residues.
    pub fn from_ints(fp: FieldPrime, coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| fp.reduce(c)).collect())
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|&c| c != 0)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
