//! Seeded stream of valid algebras: catalog seeds transformed by graded
//! basis changes, direct sums and quotients by graded ideals.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::SuperAlgebra;
use crate::catalog;
use crate::field::{FieldPrime, Vector};
use crate::linalg::{invert, Subspace};
use crate::morphism::{direct_sum, quotient, transport, Morphism};

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub algebra: Arc<SuperAlgebra>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Seed {
    E1,
    Sl2,
    Gl2Split,
    Heis12,
    OddSq11,
    Abelian(usize, usize),
}

const SEEDS: &[Seed] = &[
    Seed::E1,
    Seed::Sl2,
    Seed::Gl2Split,
    Seed::Heis12,
    Seed::OddSq11,
    Seed::Abelian(1, 0),
    Seed::Abelian(0, 1),
    Seed::Abelian(1, 1),
];

impl Seed {
    fn dim(self) -> usize {
        match self {
            Seed::E1 | Seed::OddSq11 => 2,
            Seed::Sl2 | Seed::Heis12 => 3,
            Seed::Gl2Split => 4,
            Seed::Abelian(a, b) => a + b,
        }
    }

    fn build(self, p: u32) -> (String, SuperAlgebra) {
        let a = match self {
            Seed::E1 => catalog::e1(p),
            Seed::Sl2 => catalog::sl2(p),
            Seed::Gl2Split => catalog::gl2split(p),
            Seed::Heis12 => catalog::heis12(p),
            Seed::OddSq11 => catalog::oddsq11(p),
            Seed::Abelian(e, o) => {
                let names: Vec<String> = (0..e)
                    .map(|i| format!("a{i}"))
                    .chain((0..o).map(|i| format!("b{i}")))
                    .collect();
                SuperAlgebra::abelian(FieldPrime::new(p).expect("odd prime"), e, o)
                    .with_names(names)
            }
        };
        let name = match self {
            Seed::E1 => format!("E1@{p}"),
            Seed::Sl2 => format!("sl2@{p}"),
            Seed::Gl2Split => format!("gl2split@{p}"),
            Seed::Heis12 => format!("heis12@{p}"),
            Seed::OddSq11 => format!("oddsq11@{p}"),
            Seed::Abelian(e, o) => format!("ab({e}|{o})@{p}"),
        };
        (name, a)
    }
}

/// Deterministic per seed: the same seed and bounds give the same stream.
#[derive(Debug, Clone)]
pub struct InstanceGenerator {
    primes: Vec<u32>,
    max_dim: usize,
    rng: ChaCha8Rng,
    emitted: usize,
}

impl InstanceGenerator {
    pub fn new(seed: u64, primes: &[u32], max_dim: usize) -> Self {
        assert!(!primes.is_empty());
        Self {
            primes: primes.to_vec(),
            max_dim: max_dim.max(2),
            rng: ChaCha8Rng::seed_from_u64(seed),
            emitted: 0,
        }
    }

    pub fn take(&mut self, count: usize) -> Vec<Instance> {
        (0..count).map(|_| self.next_instance()).collect()
    }

    pub fn next_instance(&mut self) -> Instance {
        let p = *self.primes.choose(&mut self.rng).expect("nonempty");
        let seeds: Vec<Seed> = SEEDS
            .iter()
            .copied()
            .filter(|s| s.dim() <= self.max_dim)
            .collect();
        let first = *seeds.choose(&mut self.rng).expect("a seed fits");
        let (mut name, mut algebra) = first.build(p);
        let mut algebra_arc;
        match self.rng.gen_range(0..3) {
            0 => {
                let room = self.max_dim - first.dim();
                let partners: Vec<Seed> =
                    seeds.iter().copied().filter(|s| s.dim() <= room).collect();
                if let Some(&second) = partners.choose(&mut self.rng) {
                    let (n2, a2) = second.build(p);
                    algebra = direct_sum(&algebra, &a2)
                        .expect("same field")
                        .algebra
                        .as_ref()
                        .clone();
                    name = format!("{name}+{n2}");
                }
                algebra_arc = Arc::new(algebra);
            }
            1 => {
                algebra_arc = Arc::new(algebra);
                let ideals = proper_graded_ideals(&algebra_arc);
                if let Some(j) = ideals.choose(&mut self.rng) {
                    let q = quotient(&algebra_arc, j).expect("graded ideal");
                    name = format!("{name}/{}", describe_span(&algebra_arc, j));
                    algebra_arc = q.algebra;
                }
            }
            _ => algebra_arc = Arc::new(algebra),
        }
        let (changed, _) = self.basis_change(&algebra_arc);
        self.emitted += 1;
        Instance {
            name: format!("gen{}:{name}~", self.emitted),
            algebra: changed,
        }
    }

    /// A random invertible graded change of basis, as an isomorphism onto the
    /// transported algebra.
    pub fn basis_change(&mut self, l: &Arc<SuperAlgebra>) -> (Arc<SuperAlgebra>, Morphism) {
        let images = random_graded_invertible(&mut self.rng, l);
        transport(l, images).expect("invertible graded map")
    }
}

fn random_graded_invertible(rng: &mut ChaCha8Rng, l: &SuperAlgebra) -> Vec<Vector> {
    let fp = l.field();
    let n = l.dim();
    let block = |rng: &mut ChaCha8Rng, d: usize| -> Vec<Vec<u32>> {
        loop {
            let m: Vec<Vector> = (0..d)
                .map(|_| Vector::new((0..d).map(|_| rng.gen_range(0..fp.p())).collect()))
                .collect();
            if d == 0 || invert(fp, &m).is_ok() {
                return m.into_iter().map(|v| v.coords().to_vec()).collect();
            }
        }
    };
    let even = block(rng, l.dim_even());
    let odd = block(rng, l.dim_odd());
    let d0 = l.dim_even();
    let mut images = Vec::with_capacity(n);
    for row in even {
        let mut v = vec![0; n];
        v[..d0].copy_from_slice(&row);
        images.push(Vector::new(v));
    }
    for row in odd {
        let mut v = vec![0; n];
        v[d0..].copy_from_slice(&row);
        images.push(Vector::new(v));
    }
    images
}

/// Nonzero proper graded ideals drawn from the derived and lower central
/// series and the centre, deduplicated and sorted.
pub fn proper_graded_ideals(l: &Arc<SuperAlgebra>) -> Vec<Subspace> {
    let mut out: Vec<Subspace> = Vec::new();
    let full = l.full_space();
    out.extend(l.derived_series(&full));
    out.extend(l.lower_central_series(&full));
    out.push(centre(l));
    out.retain(|s| !s.is_zero() && !s.is_full() && l.is_graded_ideal(s));
    out.sort();
    out.dedup();
    out
}

/// `{z : [z, e_i] = 0 for all i}`.
pub fn centre(l: &SuperAlgebra) -> Subspace {
    let n = l.dim();
    let fp = l.field();
    // z ↦ ([z, e_0], ..., [z, e_{n-1}]) is linear; its left kernel is the centre
    let rows: Vec<Vector> = (0..n)
        .map(|i| {
            let coords = (0..n)
                .flat_map(|j| l.basis_bracket(i, j).coords().to_vec())
                .collect();
            Vector::new(coords)
        })
        .collect();
    let kernel = crate::linalg::left_kernel(fp, n * n, &rows);
    Subspace::span(fp, n, &kernel).expect("kernel vectors have length n")
}

fn describe_span(l: &SuperAlgebra, s: &Subspace) -> String {
    let parts: Vec<String> = s.basis().iter().map(|r| l.format_element(r)).collect();
    format!("<{}>", parts.join(","))
}
