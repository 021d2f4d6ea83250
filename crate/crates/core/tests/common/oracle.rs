//! Brute-force reference implementation for tests. Everything here works on
//! explicit element sets: spans are enumerated, closures iterate until the set
//! stops growing and solvability runs the derived series on sets. No row
//! reduction, no caching, nothing shared with the library beyond plain data.
#![allow(dead_code, clippy::type_complexity, clippy::needless_range_loop)]

use std::collections::BTreeSet;

pub type Elem = Vec<u32>;
pub type Set = BTreeSet<Elem>;

#[derive(Debug, Clone)]
pub struct Alg {
    pub p: u32,
    pub n: usize,
    pub d0: usize,
    // c[i][j][k]
    c: Vec<Vec<Vec<u32>>>,
}

impl Alg {
    /// `brackets` lists `[e_i, e_j]` for `i <= j`; the rest follows from
    /// `[e_j, e_i] = -(-1)^{|i||j|} [e_i, e_j]`.
    pub fn new(p: u32, d0: usize, d1: usize, brackets: &[(usize, usize, &[(usize, i64)])]) -> Self {
        let n = d0 + d1;
        let mut c = vec![vec![vec![0u32; n]; n]; n];
        let red = |v: i64| v.rem_euclid(i64::from(p)) as u32;
        for &(i, j, terms) in brackets {
            let both_odd = i >= d0 && j >= d0;
            for &(k, v) in terms {
                c[i][j][k] = red(v);
                c[j][i][k] = if both_odd { red(v) } else { red(-v) };
            }
        }
        Self { p, n, d0, c }
    }

    /// Reads constants off a flattened `c[(i*n + j)*n + k]` table.
    pub fn from_flat(p: u32, d0: usize, d1: usize, flat: &[i64]) -> Self {
        let n = d0 + d1;
        let mut c = vec![vec![vec![0u32; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[i][j][k] = flat[(i * n + j) * n + k].rem_euclid(i64::from(p)) as u32;
                }
            }
        }
        Self { p, n, d0, c }
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.n]
    }

    pub fn bracket(&self, x: &[u32], y: &[u32]) -> Elem {
        let mut r = vec![0u64; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if x[i] == 0 || y[j] == 0 {
                    continue;
                }
                for k in 0..self.n {
                    r[k] += u64::from(x[i]) * u64::from(y[j]) * u64::from(self.c[i][j][k]);
                }
            }
        }
        r.into_iter()
            .map(|v| (v % u64::from(self.p)) as u32)
            .collect()
    }

    /// All vectors, lexicographic (first coordinate most significant).
    pub fn elements(&self) -> Vec<Elem> {
        let mut out = vec![vec![]];
        for _ in 0..self.n {
            out = out
                .into_iter()
                .flat_map(|prefix: Elem| {
                    (0..self.p).map(move |a| {
                        let mut v = prefix.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        out
    }

    pub fn span(&self, gens: &[Elem]) -> Set {
        let mut s: Set = [self.zero()].into_iter().collect();
        for g in gens {
            let mut next = Set::new();
            for v in &s {
                for a in 0..self.p {
                    next.insert((0..self.n).map(|k| (v[k] + a * g[k]) % self.p).collect());
                }
            }
            s = next;
        }
        s
    }

    /// A spanning list of `s`, picked greedily in sorted order.
    fn basis_of(&self, s: &Set) -> Vec<Elem> {
        let mut basis = Vec::new();
        let mut covered = self.span(&[]);
        for v in s {
            if !covered.contains(v) {
                basis.push(v.clone());
                covered = self.span(&basis);
            }
        }
        basis
    }

    pub fn closure(&self, gens: &[Elem]) -> Set {
        let mut s = self.span(gens);
        loop {
            let b = self.basis_of(&s);
            let mut gens = b.clone();
            for u in &b {
                for v in &b {
                    gens.push(self.bracket(u, v));
                }
            }
            let next = self.span(&gens);
            if next == s {
                return s;
            }
            s = next;
        }
    }

    fn bracket_set(&self, s: &Set, t: &Set) -> Set {
        let (bs, bt) = (self.basis_of(s), self.basis_of(t));
        let gens: Vec<Elem> = bs
            .iter()
            .flat_map(|u| bt.iter().map(move |v| (u, v)))
            .map(|(u, v)| self.bracket(u, v))
            .collect();
        self.span(&gens)
    }

    pub fn solvable(&self, s: &Set) -> bool {
        let mut cur = s.clone();
        loop {
            if cur.len() == 1 {
                return true;
            }
            let next = self.bracket_set(&cur, &cur);
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    pub fn nilpotent(&self, s: &Set) -> bool {
        let mut cur = s.clone();
        loop {
            if cur.len() == 1 {
                return true;
            }
            let next = self.bracket_set(&cur, s);
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    pub fn pair_solvable(&self, x: &Elem, y: &Elem) -> bool {
        self.solvable(&self.closure(&[x.clone(), y.clone()]))
    }

    pub fn pair_nilpotent(&self, x: &Elem, y: &Elem) -> bool {
        self.nilpotent(&self.closure(&[x.clone(), y.clone()]))
    }

    pub fn sol_of(&self, z: &Elem) -> Vec<Elem> {
        self.elements()
            .into_iter()
            .filter(|x| self.pair_solvable(x, z))
            .collect()
    }

    pub fn nil_of(&self, z: &Elem) -> Vec<Elem> {
        self.elements()
            .into_iter()
            .filter(|x| self.pair_nilpotent(x, z))
            .collect()
    }

    /// Computes the full pair table once; `sol` and the graph read from it.
    pub fn pair_table(&self) -> PairTable {
        let elems = self.elements();
        let m = elems.len();
        let mut table = vec![vec![false; m]; m];
        for a in 0..m {
            for b in a..m {
                let s = self.pair_solvable(&elems[a], &elems[b]);
                table[a][b] = s;
                table[b][a] = s;
            }
        }
        PairTable { elems, table }
    }
}

pub struct PairTable {
    pub elems: Vec<Elem>,
    pub table: Vec<Vec<bool>>,
}

impl PairTable {
    pub fn sol(&self) -> Vec<Elem> {
        (0..self.elems.len())
            .filter(|&a| self.table[a].iter().all(|&s| s))
            .map(|a| self.elems[a].clone())
            .collect()
    }

    /// Vertices (lexicographic) and solvable edges `(i, j)` with `i < j`.
    pub fn solvable_graph(&self) -> (Vec<Elem>, Vec<(usize, usize)>) {
        self.graph(true)
    }

    pub fn nonsolvable_graph(&self) -> (Vec<Elem>, Vec<(usize, usize)>) {
        self.graph(false)
    }

    fn graph(&self, solvable: bool) -> (Vec<Elem>, Vec<(usize, usize)>) {
        let sol: Set = self.sol().into_iter().collect();
        let idx: Vec<usize> = (0..self.elems.len())
            .filter(|&a| !sol.contains(&self.elems[a]) && self.elems[a].iter().any(|&c| c != 0))
            .collect();
        let mut edges = Vec::new();
        for (i, &a) in idx.iter().enumerate() {
            for (j, &b) in idx.iter().enumerate().skip(i + 1) {
                if self.table[a][b] == solvable {
                    edges.push((i, j));
                }
            }
        }
        (idx.iter().map(|&a| self.elems[a].clone()).collect(), edges)
    }
}

pub fn e1(p: u32) -> Alg {
    Alg::new(p, 1, 1, &[(0, 1, &[(1, 1)])])
}

pub fn e2() -> Alg {
    Alg::new(
        3,
        1,
        2,
        &[(0, 1, &[(1, 1)]), (0, 2, &[(2, -1)]), (1, 2, &[(0, 1)])],
    )
}

pub fn sl2(p: u32) -> Alg {
    Alg::new(
        p,
        3,
        0,
        &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
    )
}

pub fn gl2split(p: u32) -> Alg {
    Alg::new(
        p,
        4,
        0,
        &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
    )
}

/// Exact `1 - 2|E| / (|V|(|V|-1))` as a reduced `(num, den)`.
pub fn nu(vertices: usize, edges: usize) -> (i128, i128) {
    let v = vertices as i128;
    let den = v * (v - 1);
    let num = den - 2 * edges as i128;
    let g = gcd(num, den);
    (num / g, den / g)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}
