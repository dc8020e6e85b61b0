//! Desk-scale instance families for the theorem sweeps: subalgebras of
//! direct products of small canonical algebras, filtered by class
//! membership and deduplicated up to isomorphism. Products and subalgebras
//! preserve the equational classes, which makes this a practical stand-in
//! for "every algebra of the class" at these sizes.

use crate::algebra::{find_isomorphism, FiniteAlgebra, OpTable};
use crate::classes::{classify, AlgebraClass};
use crate::matrices::{named_matrix, tables};

/// Chain lattice `0 < 1 < ... < n-1` with signature `{and, or, one}`.
pub fn chain_lattice(n: usize) -> FiniteAlgebra {
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut and_t = vec![0; n * n];
    let mut or_t = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            and_t[x * n + y] = x.min(y);
            or_t[x * n + y] = x.max(y);
        }
    }
    FiniteAlgebra::new(
        format!("chain{}", n),
        labels,
        vec![
            ("and".into(), OpTable::Binary(and_t)),
            ("or".into(), OpTable::Binary(or_t)),
            ("one".into(), OpTable::Const(n - 1)),
        ],
    )
    .expect("static tables")
}

/// The four-element lattice with incomparable middle elements `a`, `b`
/// (the 2x2 grid), signature `{and, or, one}`. This is the factor used to
/// exhibit non-full twist subalgebras.
pub fn remark_lattice() -> FiniteAlgebra {
    // order: 0 < a, b < 1 with a, b incomparable; ids 0=0, 1=a, 2=b, 3=1
    let and_t = vec![
        0, 0, 0, 0, //
        0, 1, 0, 1, //
        0, 0, 2, 2, //
        0, 1, 2, 3,
    ];
    let or_t = vec![
        0, 1, 2, 3, //
        1, 1, 3, 3, //
        2, 3, 2, 3, //
        3, 3, 3, 3,
    ];
    FiniteAlgebra::new(
        "grid4",
        vec!["0".into(), "a".into(), "b".into(), "1".into()],
        vec![
            ("and".into(), OpTable::Binary(and_t)),
            ("or".into(), OpTable::Binary(or_t)),
            ("one".into(), OpTable::Const(3)),
        ],
    )
    .expect("static tables")
}

/// Two-element De Morgan algebra (= two-element Boolean algebra without
/// implication), signature `{and, or, neg, zero, one}`.
pub fn de_morgan_2() -> FiniteAlgebra {
    tables::boolean_2()
        .reduct(&["and", "or", "neg", "zero", "one"])
        .expect("static signature")
        .with_name("DM2")
}

/// Three-element Kleene chain with the middle element a negation fixpoint.
pub fn kleene_3() -> FiniteAlgebra {
    named_matrix("DF3")
        .expect("built-in")
        .algebra()
        .reduct(&["and", "or", "neg"])
        .expect("static signature")
        .with_constants(&[("zero", "0"), ("one", "1")])
        .expect("labels exist")
        .with_name("K3")
}

/// The four-element De Morgan algebra with two negation fixpoints.
pub fn belnap_4() -> FiniteAlgebra {
    named_matrix("DFg4")
        .expect("built-in")
        .algebra()
        .reduct(&["and", "or", "neg"])
        .expect("static signature")
        .with_constants(&[("zero", "0"), ("one", "1")])
        .expect("labels exist")
        .with_name("Belnap4")
}

fn trivial(ops: &[(&str, usize)]) -> FiniteAlgebra {
    let tables = ops
        .iter()
        .map(|&(name, arity)| {
            let t = match arity {
                0 => OpTable::Const(0),
                1 => OpTable::Unary(vec![0]),
                _ => OpTable::Binary(vec![0]),
            };
            (name.to_string(), t)
        })
        .collect();
    FiniteAlgebra::new("trivial", vec!["*".into()], tables).expect("static tables")
}

/// All subalgebras of the seeds' direct powers (up to the given power) with
/// at most `max_size` elements, in the seeds' signature, filtered by
/// `class` and deduplicated up to isomorphism.
fn generate(
    seeds: &[FiniteAlgebra],
    power: usize,
    max_size: usize,
    class: AlgebraClass,
) -> Vec<FiniteAlgebra> {
    let mut parents: Vec<FiniteAlgebra> = Vec::new();
    for seed in seeds {
        let mut acc = seed.clone();
        parents.push(acc.clone());
        for _ in 1..power {
            acc = acc.direct_product(seed).expect("same signature");
            if acc.size() <= 64 {
                parents.push(acc.clone());
            }
        }
    }
    let mut out: Vec<FiniteAlgebra> = Vec::new();
    let mut push_unique = |a: FiniteAlgebra| {
        let duplicate = out
            .iter()
            .any(|b| find_isomorphism(b, &a).ok().flatten().is_some());
        if !duplicate {
            out.push(a);
        }
    };
    for parent in &parents {
        for mask in parent.all_subuniverses().expect("small carriers") {
            if mask.count_ones() as usize > max_size {
                continue;
            }
            let (sub, _) = parent.subalgebra(mask, format!("{}@{:x}", parent.name(), mask)).unwrap();
            if classify(&sub, class).map(|r| r.holds).unwrap_or(false) {
                push_unique(sub);
            }
        }
    }
    out.sort_by_key(|a| a.size());
    out
}

/// Upper-bounded distributive lattices with at most `max_size` elements
/// (DF-twist factors): chains and grids.
pub fn upper_bounded_distributive_lattices(max_size: usize) -> Vec<FiniteAlgebra> {
    // {one} is a subuniverse, so the trivial lattice arises by itself
    let out = generate(
        &[chain_lattice(2)],
        3,
        max_size,
        AlgebraClass::UpperBoundedDistributiveLattice,
    );
    dedup_iso(out)
}

/// Bounded distributive lattices (DFg-twist factors).
pub fn bounded_distributive_lattices(max_size: usize) -> Vec<FiniteAlgebra> {
    let l2 = chain_lattice(2).with_constants(&[("zero", "0")]).unwrap();
    let mut out = generate(&[l2], 3, max_size, AlgebraClass::BoundedDistributiveLattice);
    out.insert(0, trivial(&[("and", 2), ("or", 2), ("zero", 0), ("one", 0)]));
    dedup_iso(out)
}

/// Generalized Boolean algebras `{and, or, imp, one}` (CN/F-twist factors).
pub fn generalized_boolean_algebras(max_size: usize) -> Vec<FiniteAlgebra> {
    let b2 = tables::boolean_2().reduct(&["and", "or", "imp", "one"]).unwrap();
    let out = generate(&[b2], 3, max_size, AlgebraClass::GeneralizedBoolean);
    dedup_iso(out)
}

/// Boolean algebras `{and, or, imp, zero, one}` (g-twist factors).
pub fn boolean_algebras(max_size: usize) -> Vec<FiniteAlgebra> {
    let b2 = tables::boolean_2().reduct(&["and", "or", "imp", "zero", "one"]).unwrap();
    let mut out = generate(&[b2], 3, max_size, AlgebraClass::Boolean);
    out.insert(
        0,
        trivial(&[("and", 2), ("or", 2), ("imp", 2), ("zero", 0), ("one", 0)]),
    );
    dedup_iso(out)
}

/// Boolean algebras carrying their negation (f-twist factors).
pub fn boolean_algebras_with_negation(max_size: usize) -> Vec<FiniteAlgebra> {
    let mut out = generate(&[tables::boolean_2()], 3, max_size, AlgebraClass::Boolean);
    out.insert(
        0,
        trivial(&[("and", 2), ("or", 2), ("imp", 2), ("neg", 1), ("zero", 0), ("one", 0)]),
    );
    dedup_iso(out)
}

/// De Morgan algebras `{and, or, neg, zero, one}` (DFf/Ff-twist factors):
/// Boolean-like, Kleene chains and the bi-centered four-element one.
pub fn de_morgan_algebras(max_size: usize) -> Vec<FiniteAlgebra> {
    let mut out = generate(&[kleene_3(), belnap_4()], 2, max_size, AlgebraClass::DeMorganAlgebra);
    out.insert(0, trivial(&[("and", 2), ("or", 2), ("neg", 1), ("zero", 0), ("one", 0)]));
    dedup_iso(out)
}

fn dedup_iso(algebras: Vec<FiniteAlgebra>) -> Vec<FiniteAlgebra> {
    let mut out: Vec<FiniteAlgebra> = Vec::new();
    for a in algebras {
        if !out.iter().any(|b| find_isomorphism(b, &a).ok().flatten().is_some()) {
            out.push(a);
        }
    }
    out.sort_by_key(FiniteAlgebra::size);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_family_contains_the_five_shapes() {
        let fam = upper_bounded_distributive_lattices(4);
        let sizes: Vec<usize> = fam.iter().map(FiniteAlgebra::size).collect();
        // trivial, 2-chain, 3-chain, 4-chain, grid
        assert_eq!(sizes, vec![1, 2, 3, 4, 4]);
    }

    #[test]
    fn gba_family_has_no_three_element_member() {
        let fam = generalized_boolean_algebras(4);
        assert!(fam.iter().all(|a| a.size() != 3));
        assert!(fam.iter().any(|a| a.size() == 2));
        assert!(fam.iter().any(|a| a.size() == 4));
    }

    #[test]
    fn de_morgan_family_contains_the_bicentered_one() {
        let fam = de_morgan_algebras(4);
        let bicentered = fam.iter().filter(|a| {
            let t = match a.table("neg").unwrap() {
                OpTable::Unary(t) => t.clone(),
                _ => unreachable!(),
            };
            (0..a.size()).filter(|&x| t[x] == x).count() == 2
        });
        assert_eq!(bicentered.count(), 1);
        // chains with and without fixpoints
        assert!(fam.iter().any(|a| a.size() == 3));
        let sizes: Vec<usize> = fam.iter().map(FiniteAlgebra::size).collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 4).count(), 3, "{sizes:?}");
    }

    #[test]
    fn boolean_powers_give_sizes_up_to_eight() {
        let fam = generalized_boolean_algebras(8);
        assert!(fam.iter().any(|a| a.size() == 8));
    }
}
