use std::sync::Arc;

use proptest::prelude::*;
use solvgraph_core::io::{emit_algebra, parse_algebra_str};
use solvgraph_core::solvabilizer::PairOracle;
use solvgraph_core::verify::{Instance, InstanceGenerator};
use solvgraph_core::{
    build_graph, direct_sum, measure, Closure, FieldPrime, GraphKind, Solver, Subspace,
    SuperAlgebra, Vector,
};

fn instance(seed: u64, max_dim: usize) -> Instance {
    InstanceGenerator::new(seed, &[3, 5], max_dim).next_instance()
}

fn vector(l: &SuperAlgebra, raw: &[u32]) -> Vector {
    let p = l.field().p();
    Vector::new((0..l.dim()).map(|i| raw[i % raw.len()] % p).collect())
}

fn raw() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..5, 6)
}

fn generate(l: &SuperAlgebra, gens: &[Vector], mode: Closure) -> Subspace {
    l.generated_subalgebra(gens, mode).unwrap().space
}

fn within(a: &Subspace, b: &Subspace) -> bool {
    a.is_subspace_of(b).unwrap()
}

/// Strictly decreasing, ending at zero or with one repeated term.
fn stops_at_zero_or_repeat(series: &[Subspace]) -> bool {
    let last = series.len() - 1;
    let strict = series[..last]
        .windows(2)
        .all(|w| within(&w[1], &w[0]) && w[1] != w[0]);
    let tail = last == 0
        || series[last].is_zero() && series[last - 1] != series[last]
        || series[last] == series[last - 1];
    strict && tail && series[..last].iter().all(|s| !s.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn generated_subalgebra_is_a_closure(seed in 0u64..10_000, a in raw(), b in raw(), c in raw(), graded in any::<bool>()) {
        let l = instance(seed, 4).algebra;
        let mode = if graded { Closure::Graded } else { Closure::Plain };
        let (x, y, z) = (vector(&l, &a), vector(&l, &b), vector(&l, &c));
        let small = generate(&l, &[x.clone(), y.clone()], mode);
        let big = generate(&l, &[x.clone(), y.clone(), z], mode);
        prop_assert!(within(&l.span(&[x, y]).unwrap(), &small));
        prop_assert!(l.is_closed(&small));
        prop_assert_eq!(generate(&l, small.basis(), mode), small.clone());
        prop_assert!(within(&small, &big));
        if graded {
            prop_assert!(l.is_graded(&small));
        }
    }

    #[test]
    fn pair_answers_depend_only_on_the_span(seed in 0u64..10_000, a in raw(), b in raw(), m in prop::array::uniform4(0u32..5)) {
        let l = instance(seed, 4).algebra;
        let fp = l.field();
        let (x, z) = (vector(&l, &a), vector(&l, &b));
        let [p, q, r, s] = m.map(|v| v % fp.p());
        prop_assume!(fp.sub(fp.mul(p, s), fp.mul(q, r)) != 0);
        let u = fp.add_vec(&fp.scale(p, &x), &fp.scale(q, &z));
        let v = fp.add_vec(&fp.scale(r, &x), &fp.scale(s, &z));
        let solver = Solver::new(l.clone());
        prop_assert_eq!(solver.pair_solvable(&x, &z), solver.pair_solvable(&u, &v));
        prop_assert_eq!(solver.pair_nilpotent(&x, &z), solver.pair_nilpotent(&u, &v));
        prop_assert_eq!(solver.pair_solvable(&x, &z), solver.pair_solvable(&z, &x));
        // nilpotent implies solvable
        prop_assert!(!solver.pair_nilpotent(&x, &z) || solver.pair_solvable(&x, &z));
    }

    #[test]
    fn series_are_descending_and_nested(seed in 0u64..10_000) {
        let l = instance(seed, 4).algebra;
        let full = l.full_space();
        let derived = l.derived_series(&full);
        let lower = l.lower_central_series(&full);
        prop_assert_eq!(&derived[0], &full);
        prop_assert_eq!(&lower[0], &full);
        for series in [&derived, &lower] {
            prop_assert!(stops_at_zero_or_repeat(series));
        }
        for d in &derived {
            prop_assert!(l.is_ideal(d));
        }
        // L^(k) ⊆ L^(k+1) in lower central numbering
        for (k, d) in derived.iter().enumerate() {
            let idx = k.min(lower.len() - 1);
            prop_assert!(within(d, &lower[idx]));
        }
        prop_assert!(!l.is_nilpotent(&full) || l.is_solvable(&full));
    }

    #[test]
    fn derived_series_of_a_sum_is_componentwise(s1 in 0u64..10_000, s2 in 0u64..10_000) {
        let a = InstanceGenerator::new(s1, &[3], 2).next_instance().algebra;
        let b = InstanceGenerator::new(s2, &[3], 2).next_instance().algebra;
        let ds = direct_sum(&a, &b).unwrap();
        let dims = |l: &SuperAlgebra| -> Vec<usize> {
            l.derived_series(&l.full_space()).iter().map(Subspace::dim).collect()
        };
        let (da, db, dsum) = (dims(&a), dims(&b), dims(&ds.algebra));
        let at = |v: &Vec<usize>, k: usize| v[k.min(v.len() - 1)];
        let len = da.len().max(db.len());
        let expected: Vec<usize> = (0..len).map(|k| at(&da, k) + at(&db, k)).collect();
        prop_assert_eq!(dsum, expected);
    }

    #[test]
    fn definition_files_round_trip(seed in 0u64..10_000) {
        let l = instance(seed, 4).algebra;
        let parsed = parse_algebra_str(&emit_algebra(&l)).unwrap();
        prop_assert!(parsed.violations.is_empty());
        prop_assert_eq!(&parsed.algebra, l.as_ref());
    }

    #[test]
    fn pointwise_solvabilizer_laws(seed in 0u64..10_000, a in raw()) {
        let l = instance(seed, 3).algebra;
        let solver = Solver::new(l.clone());
        let z = vector(&l, &a);
        let sol_z = solver.solvabilizer_of(&z);
        prop_assert!(solver.nilpotentizer_of(&z).is_subset(&sol_z));
        prop_assert!(solver.solvabilizer().is_subset(&sol_z));
        let z_closure = generate(&l, std::slice::from_ref(&z), Closure::Plain);
        prop_assert_eq!(sol_z.contains(&z), l.is_solvable(&z_closure));
        let fp = l.field();
        for x in sol_z.iter() {
            for s in 1..fp.p() {
                prop_assert!(sol_z.contains(&fp.scale(s, x)));
            }
        }
    }

    #[test]
    fn measure_is_in_the_unit_interval(seed in 0u64..10_000) {
        let l = instance(seed, 3).algebra;
        prop_assume!(!l.is_solvable(&l.full_space()));
        let solver = Solver::new(Arc::clone(&l));
        let g = build_graph(&solver, GraphKind::Solvable).unwrap();
        let ng = build_graph(&solver, GraphKind::Nonsolvable).unwrap();
        prop_assert_eq!(g.vertex_count(), ng.vertex_count());
        let n = g.vertex_count();
        prop_assert_eq!(g.edge_count() + ng.edge_count(), n * (n - 1) / 2);
        if let Ok(nu) = measure(&g) {
            prop_assert!(nu.numer() >= 0 && nu.numer() <= nu.denom());
        }
    }

    #[test]
    fn subspace_form_is_canonical(rows in prop::collection::vec(prop::collection::vec(0u32..3, 4), 0..5), mix in prop::collection::vec(0u32..3, 5)) {
        let fp = FieldPrime::new(3).unwrap();
        let rows: Vec<Vector> = rows.into_iter().map(Vector::new).collect();
        let s = Subspace::span(fp, 4, &rows).unwrap();
        let mut extended = rows.clone();
        extended.reverse();
        let combo = rows.iter().zip(&mix).fold(fp.zero_vector(4), |acc, (r, &c)| fp.axpy(&acc, c, r));
        extended.push(combo);
        prop_assert_eq!(&Subspace::span(fp, 4, &extended).unwrap(), &s);
        prop_assert_eq!(s.elements().len(), 3usize.pow(s.dim() as u32));
        for r in &rows {
            prop_assert!(s.contains(r).unwrap());
        }
    }
}
