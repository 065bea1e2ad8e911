//! Property tests for the algebraic and geometric invariants.

mod common;

use std::cmp::Ordering;

use common::simplex_context;
use proptest::prelude::*;
use sgb_core::linalg::RationalMatrix;
use sgb_core::macaulay::row_echelon;
use sgb_core::rational::{format_rational, parse_rational, rat};
use sgb_core::ring::{dehomogenize, monomial_multiply};
use sgb_core::{
    cone_membership, default_order, mixed_volume, normalize_translations, weighted_minkowski_lattice_points,
    IntegerPolytope, LatticePoint, LaurentPolynomial, Monomial, MultiDegree, Rational,
};

fn point() -> impl Strategy<Value = LatticePoint> {
    (0i64..=3, 0i64..=3).prop_map(|(a, b)| LatticePoint::new(vec![a, b]))
}

fn polytope() -> impl Strategy<Value = IntegerPolytope> {
    prop::collection::vec(point(), 1..=4).prop_map(|v| IntegerPolytope::new(v).unwrap())
}

fn coefficient() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5)
        .prop_filter("non-zero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| rat(n, d))
}

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((point(), coefficient()), 2..=4)
        .prop_map(LaurentPolynomial::from_terms)
        .prop_filter("at least two terms", |p| p.len() >= 2)
}

fn degree(len: usize, max: u32) -> impl Strategy<Value = MultiDegree> {
    prop::collection::vec(0..=max, len).prop_map(MultiDegree::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn lattice_counts_are_monotone(p in polytope(), q in polytope(), d in degree(2, 2), bump in degree(2, 1)) {
        let family = normalize_translations(vec![p, q]).unwrap();
        let small = weighted_minkowski_lattice_points(&family, &d).unwrap();
        let large = weighted_minkowski_lattice_points(&family, &d.add(&bump)).unwrap();
        prop_assert!(small.len() <= large.len());
        for a in &small {
            prop_assert!(large.contains(a));
        }
    }

    #[test]
    fn unit_degree_contains_generators(p in polytope(), q in polytope()) {
        let family = normalize_translations(vec![p, q]).unwrap();
        for i in 0..2 {
            let pts = weighted_minkowski_lattice_points(&family, &MultiDegree::unit(2, i)).unwrap();
            for g in family.polytope(i).generators() {
                prop_assert!(pts.contains(g));
            }
        }
    }

    #[test]
    fn mixed_volume_is_symmetric(p in polytope(), q in polytope()) {
        let a = mixed_volume(&[p.clone(), q.clone()]).unwrap();
        let b = mixed_volume(&[q, p]).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn mixed_volume_is_translation_invariant(p in polytope(), q in polytope(), s in point()) {
        let a = mixed_volume(&[p.clone(), q.clone()]).unwrap();
        let b = mixed_volume(&[p.translated(&s), q]).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn order_is_multiplicative(p in polytope(), a in point(), b in point(), c in point()) {
        let family = normalize_translations(vec![IntegerPolytope::standard_simplex(2), p]).unwrap();
        let order = default_order(&family).unwrap();
        let lhs = order.compare_exponents(&a, &b);
        prop_assert_eq!(lhs, order.compare_exponents(&(&a + &c), &(&b + &c)));
        prop_assert_eq!(lhs == Ordering::Equal, a == b);
        for g in family.cone_generators().generators().iter().filter(|g| !g.is_zero()) {
            prop_assert_eq!(order.compare_exponents(&(&a + g), &a), Ordering::Greater);
        }
    }

    #[test]
    fn dehomogenization_is_multiplicative(f in laurent(), g in laurent()) {
        let ctx = simplex_context(&[f.clone(), g]);
        let generator = &ctx.generators()[0];
        let d = MultiDegree::new(vec![1, 0, 1]);
        for alpha in weighted_minkowski_lattice_points(ctx.family(), &d).unwrap() {
            let m = Monomial::new(alpha.clone(), d.clone());
            let lhs = dehomogenize(&monomial_multiply(&m, generator));
            let rhs = LaurentPolynomial::from_terms([(alpha, Rational::from_integer(1.into()))]).mul(&dehomogenize(generator));
            prop_assert_eq!(lhs, rhs);
        }
        // χ(F_1) is f shifted by its translation
        let t = ctx.family().translation(1).clone();
        prop_assert_eq!(dehomogenize(generator), f.shifted(&-&t));
    }

    #[test]
    fn rref_is_idempotent_and_order_free(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=5), seed in any::<u64>()) {
        let to_q = |r: &Vec<i64>| r.iter().map(|&v| rat(v, 1)).collect::<Vec<_>>();
        let m = RationalMatrix::from_rows(rows.iter().map(to_q).collect(), 4);
        let e = m.rref();
        let again = RationalMatrix::from_rows(e.rows.clone(), 4).rref();
        prop_assert_eq!(&again.rows, &e.rows);
        let mut shuffled = rows.clone();
        let k = (seed as usize) % shuffled.len();
        shuffled.rotate_left(k);
        shuffled.reverse();
        let other = RationalMatrix::from_rows(shuffled.iter().map(to_q).collect(), 4).rref();
        prop_assert_eq!(other.rows, e.rows);
    }

    #[test]
    fn memoization_is_invisible(f in laurent(), g in laurent(), d in degree(3, 2)) {
        let system = [f, g];
        let mut warm = simplex_context(&system);
        for w in [[0, 1, 1], [1, 1, 1], [0, 2, 1]] {
            warm.reduce_macaulay(2, &MultiDegree::new(w.to_vec())).unwrap();
        }
        let a = warm.reduce_macaulay(2, &d).unwrap();
        let mut cold = simplex_context(&system);
        let b = cold.reduce_macaulay(2, &d).unwrap();
        prop_assert_eq!(&*a, &*b);
    }

    #[test]
    fn reduced_rows_span_the_full_matrix(f in laurent(), g in laurent(), d in degree(3, 2)) {
        let mut ctx = simplex_context(&[f, g]);
        let reduced = ctx.reduce_macaulay(2, &d).unwrap().to_matrix();
        let full = row_echelon(&ctx.macaulay_full(2, &d).unwrap()).to_matrix();
        let mut stacked = reduced.to_rows();
        stacked.extend(full.to_rows());
        let width = reduced.ncols();
        prop_assert_eq!(RationalMatrix::from_rows(stacked, width).rank(), full.nrows());
        prop_assert_eq!(reduced.nrows(), full.nrows());
    }

    #[test]
    fn cone_contains_sums_of_generators(p in polytope(), k in 0i64..4, l in 0i64..4) {
        let gens = p.generators();
        let s = &gens[0].scaled(k) + &gens[gens.len() - 1].scaled(l);
        prop_assert!(cone_membership(&s, &p).unwrap());
    }

    #[test]
    fn rationals_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let q = rat(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
}
