//! Property tests for Eichler transvections and the orbit criterion.

use lattika_core::eichler::{apply_transvection, orbit_invariant, same_orbit, OrbitExplorer, Transvection};
use lattika_core::{parse_lattice_expr, BigInt, Error, Lattice, LatticeVector, NotApplicable};
use proptest::prelude::*;

fn l3() -> Lattice {
    parse_lattice_expr("U+U+[-2]").unwrap()
}

fn vector(rank: usize, b: i64) -> impl Strategy<Value = LatticeVector> {
    proptest::collection::vec(-b..=b, rank).prop_map(|c| LatticeVector::from_i64s(&c))
}

/// A transvection on `U⊕U⊕[−2]`. The isotropic vector is
/// `(pr, qs, ps, −qr, 0)`, and the shift is made orthogonal to it by
/// `a' = (e,b)·a − (e,a)·b`.
fn transvection() -> impl Strategy<Value = Transvection> {
    ((-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3), vector(5, 3), vector(5, 3))
        .prop_filter_map("zero isotropic vector", |((p, q, r, s), a, b)| {
            let l = l3();
            let e = LatticeVector::from_i64s(&[p * r, q * s, p * s, -q * r, 0]);
            if e.is_zero() {
                return None;
            }
            let a = &a.scale(&l.pair(&e, &b).unwrap()) - &b.scale(&l.pair(&e, &a).unwrap());
            Transvection::new(&l, e, a).ok()
        })
}

proptest! {
    #[test]
    fn transvections_are_isometries(t in transvection(), x in vector(5, 9), y in vector(5, 9)) {
        let l = l3();
        let tx = apply_transvection(&l, &t, &x).unwrap();
        let ty = apply_transvection(&l, &t, &y).unwrap();
        prop_assert_eq!(l.pair(&tx, &ty).unwrap(), l.pair(&x, &y).unwrap());
        prop_assert_eq!(apply_transvection(&l, &t.inverse(), &tx).unwrap(), x.clone());
        if !x.is_zero() {
            prop_assert_eq!(orbit_invariant(&l, &tx).unwrap(), orbit_invariant(&l, &x).unwrap());
            prop_assert!(same_orbit(&l, &x, &tx).unwrap());
        }
    }

    #[test]
    fn shift_is_defined_modulo_e(t in transvection(), k in -4i64..=4, x in vector(5, 9)) {
        let l = l3();
        let shifted = &t.shift().clone() + &t.isotropic().scale(&BigInt::from(k));
        let t2 = Transvection::new(&l, t.isotropic().clone(), shifted).unwrap();
        prop_assert_eq!(apply_transvection(&l, &t, &x).unwrap(), apply_transvection(&l, &t2, &x).unwrap());
    }

    #[test]
    fn same_orbit_is_an_equivalence(u in vector(5, 2), v in vector(5, 2), w in vector(5, 2)) {
        prop_assume!(!u.is_zero() && !v.is_zero() && !w.is_zero());
        let l = l3();
        let s = |a: &LatticeVector, b: &LatticeVector| same_orbit(&l, a, b).unwrap();
        prop_assert!(s(&u, &u));
        prop_assert_eq!(s(&u, &v), s(&v, &u));
        if s(&u, &v) && s(&v, &w) {
            prop_assert!(s(&u, &w));
        }
        // on primitive vectors the verdict is the equality of invariants
        if u.is_primitive() && v.is_primitive() {
            let (iu, iv) = (orbit_invariant(&l, &u).unwrap(), orbit_invariant(&l, &v).unwrap());
            prop_assert_eq!(s(&u, &v), iu.square == iv.square && iu.divisibility == iv.divisibility);
        }
    }
}

#[test]
fn explorer_never_leaves_an_orbit() {
    let l = l3();
    let explorer = OrbitExplorer::new(&l).unwrap();
    for start in [[1, 0, 0, 0, 1], [1, 1, 0, 0, 0], [0, 0, 0, 0, 1], [2, 1, 0, 1, 1]] {
        let start = LatticeVector::from_i64s(&start);
        let inv = orbit_invariant(&l, &start).unwrap();
        let reached = explorer.explore(&start, 3, 3);
        assert!(reached.len() > 1);
        for v in reached.keys() {
            assert_eq!(orbit_invariant(&l, v).unwrap(), inv, "{v}");
        }
    }
}

#[test]
fn criterion_hypotheses() {
    let u = LatticeVector::from_i64s(&[1, 1, 0, 0, 0, 0, 0, 0]);
    let og6 = parse_lattice_expr("U+U+U+[-2]+[-2]").unwrap();
    assert_eq!(
        same_orbit(&og6, &u, &u),
        Err(Error::CriterionNotApplicable(NotApplicable::NonCyclicDiscriminant))
    );
    let l = parse_lattice_expr("U+[-2]").unwrap();
    let u = LatticeVector::from_i64s(&[1, 1, 0]);
    assert_eq!(
        same_orbit(&l, &u, &u),
        Err(Error::CriterionNotApplicable(NotApplicable::InsufficientHyperbolicPlanes { certified: 1 }))
    );
    // a twisted plane is not certified
    let l = parse_lattice_expr("U+U(1)+U(2)").unwrap();
    assert_eq!(l.known_u_summands(), 2);
    let odd = parse_lattice_expr("U+U+[1]").unwrap();
    let u = LatticeVector::from_i64s(&[1, 1, 0, 0, 0]);
    assert_eq!(same_orbit(&odd, &u, &u), Err(Error::CriterionNotApplicable(NotApplicable::NotEven)));
}

#[test]
fn content_separates_orbits() {
    let l = l3();
    let u = LatticeVector::from_i64s(&[2, 2, 0, 0, 0]);
    let v = LatticeVector::from_i64s(&[1, 4, 0, 0, 0]);
    // equal squares, different content
    assert_eq!(l.square(&u).unwrap(), l.square(&v).unwrap());
    assert!(!same_orbit(&l, &u, &v).unwrap());
    assert!(same_orbit(&l, &u, &LatticeVector::from_i64s(&[0, 0, 2, 2, 0])).unwrap());
    // both of square −2, divisibilities 2 and 1
    let sigma = LatticeVector::from_i64s(&[0, 0, 0, 0, 1]);
    assert!(!same_orbit(&l, &sigma, &LatticeVector::from_i64s(&[1, -1, 0, 0, 0])).unwrap());
}
