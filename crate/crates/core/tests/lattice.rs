//! Property tests for lattice constructions, divisibility and the
//! expression language.

use lattika_core::expr::{Atom, LatticeExpr, Term};
use lattika_core::{parse_lattice_expr, BigInt, Lattice, LatticeVector};
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;

fn atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        4 => Just(Atom::Hyperbolic),
        1 => Just(Atom::E8),
        2 => Just(Atom::A1),
        4 => (-12i64..=12).prop_filter("non-degenerate", |n| *n != 0).prop_map(|n| Atom::RankOne(n.into())),
    ]
}

fn term() -> impl Strategy<Value = Term> {
    (atom(), proptest::option::of((-4i64..=4).prop_filter("non-zero", |n| *n != 0))).prop_map(|(atom, t)| Term {
        atom,
        twist: t.map(BigInt::from),
    })
}

fn expr() -> impl Strategy<Value = LatticeExpr> {
    proptest::collection::vec(term(), 1..4).prop_map(|terms| LatticeExpr { terms })
}

// Small even lattices: sums of U, A1 and even rank-one pieces.
fn even_lattice() -> impl Strategy<Value = Lattice> {
    proptest::collection::vec(
        prop_oneof![
            Just(Lattice::hyperbolic_plane()),
            Just(Lattice::a1()),
            (-6i64..=6)
                .prop_filter("non-zero", |n| *n != 0)
                .prop_map(|n| Lattice::rank_one(2 * n).unwrap()),
        ],
        1..4,
    )
    .prop_map(|parts| parts.iter().fold(Lattice::zero(), |acc, p| acc.direct_sum(p)))
}

fn with_vectors(n: usize) -> impl Strategy<Value = (Lattice, Vec<LatticeVector>)> {
    even_lattice().prop_flat_map(move |l| {
        let r = l.rank();
        let v = proptest::collection::vec(proptest::collection::vec(-9i64..=9, r), n)
            .prop_map(|vs| vs.iter().map(|c| LatticeVector::from_i64s(c)).collect::<Vec<_>>());
        (Just(l), v)
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(LatticeExpr::parse(&text).unwrap(), e);
    }

    #[test]
    fn spacing_does_not_matter(e in expr()) {
        // a space before every punctuation mark, never inside `E8` or a number
        let spaced: String = e
            .to_string()
            .chars()
            .flat_map(|c| if c.is_ascii_alphanumeric() { vec![c] } else { vec![' ', c, ' '] })
            .collect();
        prop_assert_eq!(LatticeExpr::parse(&spaced).unwrap(), e);
    }

    #[test]
    fn evaluation_matches_direct_sum(e in expr()) {
        let l = e.to_lattice().unwrap();
        let ranks: usize = e.terms.iter().map(|t| match t.atom {
            Atom::Hyperbolic => 2,
            Atom::E8 => 8,
            _ => 1,
        }).sum();
        prop_assert_eq!(l.rank(), ranks);
        let dets: BigInt = e.terms.iter().map(|t| LatticeExpr { terms: vec![t.clone()] }.to_lattice().unwrap().det()).product();
        prop_assert_eq!(l.det(), dets);
    }

    #[test]
    fn direct_sum_laws(a in even_lattice(), b in even_lattice(), c in even_lattice()) {
        let ab = a.direct_sum(&b);
        prop_assert_eq!(ab.direct_sum(&c).gram().clone(), a.direct_sum(&b.direct_sum(&c)).gram().clone());
        prop_assert_eq!(ab.det(), a.det() * b.det());
        let (sa, sb) = (a.signature(), b.signature());
        prop_assert_eq!(ab.signature(), (sa.0 + sb.0, sa.1 + sb.1));
        prop_assert_eq!(ab.rank(), a.rank() + b.rank());
        prop_assert!(ab.is_even());
        // swapping summands only permutes the basis
        let ba = b.direct_sum(&a);
        prop_assert_eq!(ba.det(), ab.det());
        prop_assert_eq!(ba.signature(), ab.signature());
    }

    #[test]
    fn twist_scales_pairings((l, vs) in with_vectors(2), n in (-5i64..=5).prop_filter("non-zero", |n| *n != 0)) {
        let t = l.twist(n).unwrap();
        let n = BigInt::from(n);
        prop_assert_eq!(t.pair(&vs[0], &vs[1]).unwrap(), &n * l.pair(&vs[0], &vs[1]).unwrap());
        let (p, q) = l.signature();
        prop_assert_eq!(t.signature(), if n.is_negative() { (q, p) } else { (p, q) });
        prop_assert_eq!(t.det(), l.det() * num_traits::pow(n, l.rank()));
    }

    #[test]
    fn divisibility_laws((l, vs) in with_vectors(2), k in (-6i64..=6).prop_filter("non-zero", |k| *k != 0)) {
        let (v, w) = (&vs[0], &vs[1]);
        prop_assume!(!v.is_zero());
        let d = l.divisibility(v).unwrap();
        prop_assert!(d.is_positive());
        prop_assert!(l.square(v).unwrap().is_multiple_of(&d));
        prop_assert!(l.pair(v, w).unwrap().is_multiple_of(&d));
        let k = BigInt::from(k);
        prop_assert_eq!(l.divisibility(&v.scale(&k)).unwrap(), k.abs() * &d);
        // on a unimodular lattice primitive vectors have divisibility one
        if l.is_unimodular() && v.is_primitive() {
            prop_assert_eq!(d, BigInt::from(1));
        }
    }

    #[test]
    fn pairing_is_symmetric_and_bilinear((l, vs) in with_vectors(3)) {
        let (u, v, w) = (&vs[0], &vs[1], &vs[2]);
        prop_assert_eq!(l.pair(u, v).unwrap(), l.pair(v, u).unwrap());
        prop_assert_eq!(l.pair(&(u + v), w).unwrap(), l.pair(u, w).unwrap() + l.pair(v, w).unwrap());
        prop_assert!(l.square(u).unwrap().is_even());
    }

    #[test]
    fn vector_text_round_trip(c in proptest::collection::vec(any::<i64>(), 1..8)) {
        let v = LatticeVector::from_i64s(&c);
        prop_assert_eq!(v.to_string().parse::<LatticeVector>().unwrap(), v);
    }

    #[test]
    fn parse_errors_point_inside_the_input(s in "[U0-9+\\[\\]()E8A1 -]{0,12}") {
        if let Err(e) = LatticeExpr::parse(&s) {
            prop_assert!(e.offset <= s.len());
            prop_assert!(!e.expected.is_empty());
        }
    }
}

#[test]
fn unimodular_pieces() {
    assert!(parse_lattice_expr("U+E8(-1)+E8(-1)").unwrap().is_unimodular());
    assert_eq!(parse_lattice_expr("U+U+U+E8(-1)+E8(-1)").unwrap().signature(), (3, 19));
}
