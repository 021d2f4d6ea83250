//! Built-in algebras and morphisms, addressable by name.
//!
//! `E1` is the two-dimensional solvable example `[h,x] = x`, `E2` the
//! three-dimensional `[h,x] = x, [h,y] = -y, [x,y] = h` with odd `x, y`.
//! `E2` satisfies grading and super skew-symmetry but not the super Jacobi
//! identity (`(x, x, y)` gives `-x = x`), so it is exposed as a bracket algebra
//! with its identity violations recorded rather than as a validated entry.

use std::sync::Arc;

use crate::algebra::{validate, validate_structure, StructureTable, SuperAlgebra};
use crate::error::AxiomViolation;
use crate::field::Vector;
use crate::morphism::Morphism;

#[derive(Debug, Clone)]
pub enum CatalogObject {
    Algebra(Arc<SuperAlgebra>),
    Morphism(Morphism),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub provenance: &'static str,
    pub object: CatalogObject,
    /// Identity violations of the underlying table (empty for validated entries).
    pub identity_violations: Vec<AxiomViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown catalog entry '{0}'")]
pub struct UnknownEntry(pub String);

pub fn e1_table(p: u32) -> StructureTable {
    let mut t = StructureTable::new(p, 1, 1).with_names(["h", "x"]);
    t.bracket(0, 1, &[(1, 1)]);
    t
}

pub fn e2_table(p: u32) -> StructureTable {
    let mut t = StructureTable::new(p, 1, 2).with_names(["h", "x", "y"]);
    t.bracket(0, 1, &[(1, 1)])
        .bracket(0, 2, &[(2, -1)])
        .bracket(1, 2, &[(0, 1)]);
    t
}

/// `sl(2)` on `h, e, f`: `[h,e] = 2e, [h,f] = -2f, [e,f] = h`.
pub fn sl2_table(p: u32) -> StructureTable {
    let mut t = StructureTable::new(p, 3, 0).with_names(["h", "e", "f"]);
    t.bracket(0, 1, &[(1, 2)])
        .bracket(0, 2, &[(2, -2)])
        .bracket(1, 2, &[(0, 1)]);
    t
}

/// `sl(2) ⊕ span{c}` with `c` central and even.
pub fn gl2split_table(p: u32) -> StructureTable {
    let mut t = StructureTable::new(p, 4, 0).with_names(["h", "e", "f", "c"]);
    t.bracket(0, 1, &[(1, 2)])
        .bracket(0, 2, &[(2, -2)])
        .bracket(1, 2, &[(0, 1)]);
    t
}

/// Super Heisenberg `(1|2)`: `[x,y] = z`, `z` central.
pub fn heis12_table(p: u32) -> StructureTable {
    let mut t = StructureTable::new(p, 1, 2).with_names(["z", "x", "y"]);
    t.bracket(1, 2, &[(0, 1)]);
    t
}

/// `(1|1)` with `[x,x] = z`.
pub fn oddsq11_table(p: u32) -> StructureTable {
    let mut t = StructureTable::new(p, 1, 1).with_names(["z", "x"]);
    t.bracket(1, 1, &[(0, 1)]);
    t
}

fn checked(table: StructureTable) -> SuperAlgebra {
    validate(&table).expect("catalog table validates")
}

pub fn e1(p: u32) -> SuperAlgebra {
    checked(e1_table(p))
}

/// `E2` loaded through the structural checks only.
pub fn e2_unchecked(p: u32) -> SuperAlgebra {
    validate_structure(&e2_table(p))
        .expect("E2 is graded and super skew-symmetric")
        .0
}

pub fn sl2(p: u32) -> SuperAlgebra {
    checked(sl2_table(p))
}

pub fn gl2split(p: u32) -> SuperAlgebra {
    checked(gl2split_table(p))
}

pub fn heis12(p: u32) -> SuperAlgebra {
    checked(heis12_table(p))
}

pub fn oddsq11(p: u32) -> SuperAlgebra {
    checked(oddsq11_table(p))
}

fn v(c: &[u32]) -> Vector {
    Vector::new(c.to_vec())
}

/// `gl2split → sl2`, killing `c`.
pub fn gl2split_projection(p: u32) -> Morphism {
    let src = Arc::new(gl2split(p));
    let dst = Arc::new(sl2(p));
    let images = vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]), v(&[0, 0, 0])];
    Morphism::new(src, dst, images).expect("projection is a homomorphism")
}

/// Chevalley involution of `sl2`: `h ↦ -h, e ↦ f, f ↦ e`.
pub fn sl2_swap(p: u32) -> Morphism {
    let s = Arc::new(sl2(p));
    let minus_one = p - 1;
    let images = vec![v(&[minus_one, 0, 0]), v(&[0, 0, 1]), v(&[0, 1, 0])];
    Morphism::new(s.clone(), s, images).expect("Chevalley involution is an automorphism")
}

/// Automorphism `ψ` of `E2` over GF(3): `h ↦ 2h, x ↦ y, y ↦ 2x`.
pub fn e2_psi() -> Morphism {
    let e2 = Arc::new(e2_unchecked(3));
    let images = vec![v(&[2, 0, 0]), v(&[0, 0, 1]), v(&[0, 2, 0])];
    Morphism::new(e2.clone(), e2, images).expect("psi preserves brackets")
}

const ALGEBRA_NAMES: &[&str] = &[
    "E1@3",
    "E1@5",
    "E2@3",
    "sl2@3",
    "sl2@5",
    "gl2split@3",
    "gl2split@5",
    "heis12@3",
    "oddsq11@3",
];

const MORPHISM_NAMES: &[&str] = &[
    "gl2split->sl2@3",
    "gl2split->sl2@5",
    "sl2.swap@3",
    "sl2.swap@5",
    "E2.psi@3",
];

pub fn names() -> Vec<&'static str> {
    ALGEBRA_NAMES
        .iter()
        .chain(MORPHISM_NAMES)
        .copied()
        .collect()
}

pub fn algebra_names() -> &'static [&'static str] {
    ALGEBRA_NAMES
}

pub fn morphism_names() -> &'static [&'static str] {
    MORPHISM_NAMES
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry, UnknownEntry> {
    let (base, p) = name
        .rsplit_once('@')
        .and_then(|(b, p)| p.parse::<u32>().ok().map(|p| (b, p)))
        .ok_or_else(|| UnknownEntry(name.to_string()))?;
    let name = names()
        .into_iter()
        .find(|n| *n == name)
        .ok_or_else(|| UnknownEntry(name.to_string()))?;
    let alg = |a: SuperAlgebra| CatalogObject::Algebra(Arc::new(a));
    let (provenance, object, identity_violations) = match base {
        "E1" => (
            "[h,x] = x with h even, x odd; two-dimensional solvable example",
            alg(e1(p)),
            vec![],
        ),
        "E2" => {
            let (a, violations) = validate_structure(&e2_table(p)).expect("structural");
            (
                "[h,x] = x, [h,y] = -y, [x,y] = h with x, y odd; fails super Jacobi on (x, x, y)",
                alg(a),
                violations,
            )
        }
        "sl2" => (
            "sl(2) with [h,e] = 2e, [h,f] = -2f, [e,f] = h",
            alg(sl2(p)),
            vec![],
        ),
        "gl2split" => ("sl(2) plus a central even c", alg(gl2split(p)), vec![]),
        "heis12" => (
            "super Heisenberg: [x,y] = z, z central",
            alg(heis12(p)),
            vec![],
        ),
        "oddsq11" => ("(1|1) with [x,x] = z", alg(oddsq11(p)), vec![]),
        "gl2split->sl2" => (
            "projection killing the centre c",
            CatalogObject::Morphism(gl2split_projection(p)),
            vec![],
        ),
        "sl2.swap" => (
            "Chevalley involution h -> -h, e <-> f",
            CatalogObject::Morphism(sl2_swap(p)),
            vec![],
        ),
        "E2.psi" => (
            "automorphism h -> 2h, x -> y, y -> 2x",
            CatalogObject::Morphism(e2_psi()),
            vec![],
        ),
        _ => return Err(UnknownEntry(name.to_string())),
    };
    Ok(CatalogEntry {
        name,
        provenance,
        object,
        identity_violations,
    })
}

/// Convenience accessor for algebra entries.
pub fn algebra(name: &str) -> Result<Arc<SuperAlgebra>, UnknownEntry> {
    match catalog_get(name)?.object {
        CatalogObject::Algebra(a) => Ok(a),
        CatalogObject::Morphism(_) => Err(UnknownEntry(name.to_string())),
    }
}

pub fn morphism(name: &str) -> Result<Morphism, UnknownEntry> {
    match catalog_get(name)?.object {
        CatalogObject::Morphism(m) => Ok(m),
        CatalogObject::Algebra(_) => Err(UnknownEntry(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_resolves() {
        for name in names() {
            let entry = catalog_get(name).unwrap();
            assert_eq!(entry.name, name);
            if name.starts_with("E2@") {
                assert!(!entry.identity_violations.is_empty());
            } else {
                assert!(entry.identity_violations.is_empty(), "{name}");
            }
        }
        assert!(catalog_get("E7@3").is_err());
        assert!(catalog_get("E1").is_err());
        assert!(catalog_get("E1@7").is_err());
    }

    #[test]
    fn named_examples() {
        let e1 = algebra("E1@3").unwrap();
        assert_eq!((e1.field().p(), e1.dim_even(), e1.dim_odd()), (3, 1, 1));
        assert!(e1.is_solvable(&e1.full_space()));
        let e2 = algebra("E2@3").unwrap();
        assert_eq!((e2.dim_even(), e2.dim_odd()), (1, 2));
        assert!(!e2.is_solvable(&e2.full_space()));
        let proj = morphism("gl2split->sl2@3").unwrap();
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel().dim(), 1);
    }
}
