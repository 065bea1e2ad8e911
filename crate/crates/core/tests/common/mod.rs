#![allow(dead_code)]

pub mod buchberger;
pub mod corpus;
pub mod geometry;

use sgb_core::rational::int;
use sgb_core::ring::homogenize;
use sgb_core::{
    default_order, newton_polytope, normalize_translations, IntegerPolytope, LatticePoint, LaurentPolynomial,
    SystemContext,
};

pub fn pt(v: &[i64]) -> LatticePoint {
    LatticePoint::new(v.to_vec())
}

pub fn laurent(terms: &[(&[i64], i64)]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(terms.iter().map(|(a, c)| (pt(a), int(*c))))
}

/// `F_1..F_n` over `(Δ_0 simplex, NP(f_1), ..., NP(f_n))`, `F_i` of degree `e_i`.
pub fn simplex_context(system: &[LaurentPolynomial]) -> SystemContext {
    let n = system.len();
    let mut polytopes = vec![IntegerPolytope::standard_simplex(n)];
    polytopes.extend(system.iter().map(|p| newton_polytope(p.support().cloned()).unwrap()));
    let family = normalize_translations(polytopes).unwrap();
    let order = default_order(&family).unwrap();
    let gens = system
        .iter()
        .enumerate()
        .map(|(i, p)| homogenize(p, i + 1, &family, &order).unwrap())
        .collect();
    SystemContext::new(family, order, gens).unwrap()
}

pub fn to_oracle(p: &LaurentPolynomial) -> buchberger::Poly {
    buchberger::Poly::new(p.terms().map(|(a, c)| {
        let e = a.coords().iter().map(|&v| u32::try_from(v).expect("non-negative exponent")).collect();
        (e, c.clone())
    }))
}

pub fn from_oracle(p: &buchberger::Poly) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(
        p.0.iter().map(|(e, c)| (LatticePoint::new(e.iter().map(|&v| v as i64).collect()), c.clone())),
    )
}

pub fn planar(points: &[LatticePoint]) -> Vec<(i64, i64)> {
    points.iter().map(|p| (p[0], p[1])).collect()
}
