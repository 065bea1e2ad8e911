//! Lattice polytopes given by generators.
//!
//! Polytopes are never converted to an inequality description. Every
//! geometric question (membership in a weighted Minkowski sum, membership in
//! a cone) is answered exactly by a rational LP over the generators.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp::{lp_feasible, LpProblem, Relation};
use crate::rational::Rational;
use crate::ring::MultiDegree;

/// An exponent vector in `Z^n`.
///
/// The derived `Ord` is the lexicographic order on coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        LatticePoint(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        LatticePoint(self.0.iter().map(|c| c * k).collect())
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &LatticePoint) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePoint {
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

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(v: [i64; N]) -> Self {
        LatticePoint(v.to_vec())
    }
}

impl Index<usize> for LatticePoint {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticePoint(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticePoint(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }
}

/// Convex hull of finitely many lattice points. Generators are stored
/// sorted and deduplicated; they need not all be vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerPolytope {
    dim: usize,
    generators: Vec<LatticePoint>,
}

impl IntegerPolytope {
    pub fn new(generators: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut generators: Vec<LatticePoint> = generators.into_iter().collect();
        let Some(first) = generators.first() else {
            return Err(Error::EmptyPolytope);
        };
        let dim = first.dim();
        for g in &generators {
            g.check_dim(dim)?;
        }
        generators.sort();
        generators.dedup();
        Ok(IntegerPolytope { dim, generators })
    }

    /// `conv{0, e_1, ..., e_n}`.
    pub fn standard_simplex(dim: usize) -> Self {
        let mut generators = vec![LatticePoint::zero(dim)];
        generators.extend((0..dim).map(|i| LatticePoint::unit(dim, i)));
        IntegerPolytope::new(generators).expect("non-empty")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    /// Lexicographically smallest generator. Always a vertex.
    pub fn lex_min(&self) -> &LatticePoint {
        &self.generators[0]
    }

    pub fn translated(&self, shift: &LatticePoint) -> Self {
        IntegerPolytope {
            dim: self.dim,
            generators: self.generators.iter().map(|g| g + shift).collect(),
        }
    }

    pub fn contains(&self, p: &LatticePoint) -> Result<bool> {
        weighted_sum_contains(&[(self, 1)], p)
    }

    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        weighted_sum_lattice_points(&[(self, 1)])
    }
}

/// Newton polytope of a support set.
pub fn newton_polytope(support: impl IntoIterator<Item = LatticePoint>) -> Result<IntegerPolytope> {
    IntegerPolytope::new(support).map_err(|e| match e {
        Error::EmptyPolytope => Error::EmptyPolynomial,
        other => other,
    })
}

/// Polytopes `Δ_0, ..., Δ_r` translated so that the origin is a vertex of
/// each of them, together with the translation that was removed from each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeFamily {
    dim: usize,
    polytopes: Vec<IntegerPolytope>,
    translations: Vec<LatticePoint>,
}

impl PolytopeFamily {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of polytopes, `r + 1`.
    pub fn len(&self) -> usize {
        self.polytopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polytopes.is_empty()
    }

    pub fn polytopes(&self) -> &[IntegerPolytope] {
        &self.polytopes
    }

    pub fn polytope(&self, i: usize) -> &IntegerPolytope {
        &self.polytopes[i]
    }

    /// The lattice point subtracted from the original `i`-th polytope.
    pub fn translation(&self, i: usize) -> &LatticePoint {
        &self.translations[i]
    }

    pub fn translations(&self) -> &[LatticePoint] {
        &self.translations
    }

    /// Generators of the cone spanned by the Minkowski sum of the family.
    /// Since the origin lies in every polytope, this cone is spanned by the
    /// union of all generators.
    pub fn cone_generators(&self) -> IntegerPolytope {
        IntegerPolytope::new(
            self.polytopes
                .iter()
                .flat_map(|p| p.generators().iter().cloned()),
        )
        .expect("family polytopes are non-empty")
    }

    /// `Σ d_i t_i` where `t_i` are the removed translations.
    pub fn weighted_translation(&self, d: &MultiDegree) -> LatticePoint {
        let mut acc = LatticePoint::zero(self.dim);
        for (t, &w) in self.translations.iter().zip(d.iter()) {
            if w > 0 {
                acc = &acc + &t.scaled(w as i64);
            }
        }
        acc
    }

    fn terms<'a>(&'a self, d: &MultiDegree) -> Result<Vec<(&'a IntegerPolytope, u32)>> {
        if d.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: d.len(),
            });
        }
        Ok(self
            .polytopes
            .iter()
            .zip(d.iter())
            .filter(|(_, &w)| w > 0)
            .map(|(p, &w)| (p, w))
            .collect())
    }
}

/// Translates every polytope by minus its lexicographically minimal
/// generator. Lex-min is additive under Minkowski sums, so the origin is a
/// vertex of every polytope and of every weighted sum of them.
pub fn normalize_translations(polytopes: Vec<IntegerPolytope>) -> Result<PolytopeFamily> {
    let Some(first) = polytopes.first() else {
        return Err(Error::EmptyPolytope);
    };
    let dim = first.dim();
    let mut translated = Vec::with_capacity(polytopes.len());
    let mut translations = Vec::with_capacity(polytopes.len());
    for p in &polytopes {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        let t = p.lex_min().clone();
        translated.push(p.translated(&-&t));
        translations.push(t);
    }
    Ok(PolytopeFamily {
        dim,
        polytopes: translated,
        translations,
    })
}

fn to_rational(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn bounding_box(terms: &[(&IntegerPolytope, u32)], dim: usize) -> (Vec<i64>, Vec<i64>) {
    let mut lo = vec![0i64; dim];
    let mut hi = vec![0i64; dim];
    for (p, w) in terms {
        let w = *w as i64;
        for k in 0..dim {
            let min = p.generators().iter().map(|g| g[k]).min().expect("non-empty");
            let max = p.generators().iter().map(|g| g[k]).max().expect("non-empty");
            lo[k] += w * min;
            hi[k] += w * max;
        }
    }
    (lo, hi)
}

/// Membership of `p` in `Σ w_i P_i`: feasibility of
/// `p = Σ_ij μ_ij v_ij`, `Σ_j μ_ij = w_i`, `μ >= 0`.
pub(crate) fn weighted_sum_contains(terms: &[(&IntegerPolytope, u32)], p: &LatticePoint) -> Result<bool> {
    let dim = p.dim();
    for (poly, _) in terms {
        p.check_dim(poly.dim())?;
    }
    if terms.is_empty() {
        return Ok(p.is_zero());
    }
    let (lo, hi) = bounding_box(terms, dim);
    if (0..dim).any(|k| p[k] < lo[k] || p[k] > hi[k]) {
        return Ok(false);
    }
    // A single generator sum hitting p exactly settles it without an LP.
    if terms.iter().all(|(poly, _)| poly.generators().len() == 1) {
        return Ok(true);
    }

    let num_vars: usize = terms.iter().map(|(poly, _)| poly.generators().len()).sum();
    let mut lp = LpProblem::new(num_vars);
    for k in 0..dim {
        let coeffs: Vec<Rational> = terms
            .iter()
            .flat_map(|(poly, _)| poly.generators().iter().map(move |g| to_rational(g[k])))
            .collect();
        lp.constrain(coeffs, Relation::Eq, to_rational(p[k]));
    }
    let mut offset = 0;
    for (poly, w) in terms {
        let len = poly.generators().len();
        let mut coeffs = vec![Rational::zero(); num_vars];
        for c in coeffs.iter_mut().skip(offset).take(len) {
            *c = Rational::one();
        }
        lp.constrain(coeffs, Relation::Eq, to_rational(*w as i64));
        offset += len;
    }
    Ok(lp_feasible(&lp)?.is_feasible())
}

/// Lattice points of `Σ w_i P_i`, in descending lexicographic order.
pub(crate) fn weighted_sum_lattice_points(terms: &[(&IntegerPolytope, u32)]) -> Vec<LatticePoint> {
    let Some((first, _)) = terms.first() else {
        return Vec::new();
    };
    let dim = first.dim();
    let (lo, hi) = bounding_box(terms, dim);
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let p = LatticePoint::new(cur.clone());
        if weighted_sum_contains(terms, &p).expect("dimensions agree") {
            out.push(p);
        }
        // odometer over the box, last coordinate fastest
        let mut k = dim;
        loop {
            if k == 0 {
                out.sort_by(|a, b| b.cmp(a));
                return out;
            }
            k -= 1;
            if cur[k] < hi[k] {
                cur[k] += 1;
                for c in cur.iter_mut().skip(k + 1).zip(lo.iter().skip(k + 1)) {
                    *c.0 = *c.1;
                }
                break;
            }
        }
    }
}

/// Is `p` in `Σ d_i Δ_i`?
pub fn point_in_weighted_sum(p: &LatticePoint, family: &PolytopeFamily, d: &MultiDegree) -> Result<bool> {
    p.check_dim(family.dim())?;
    let terms = family.terms(d)?;
    if terms.is_empty() {
        return Ok(p.is_zero());
    }
    weighted_sum_contains(&terms, p)
}

/// All lattice points of `Σ d_i Δ_i`, in descending lexicographic order.
/// The length of the result is `P(d)`.
pub fn weighted_minkowski_lattice_points(family: &PolytopeFamily, d: &MultiDegree) -> Result<Vec<LatticePoint>> {
    let terms = family.terms(d)?;
    if terms.is_empty() {
        return Ok(vec![LatticePoint::zero(family.dim())]);
    }
    Ok(weighted_sum_lattice_points(&terms))
}

/// Mixed volume of `n` polytopes in `R^n` as the alternating sum of lattice
/// point counts over all sub-sums:
/// `(-1)^n + Σ_{∅≠I} (-1)^{n-|I|} #((Σ_{i∈I} P_i) ∩ Z^n)`.
pub fn mixed_volume(polytopes: &[IntegerPolytope]) -> Result<u64> {
    let Some(first) = polytopes.first() else {
        return Err(Error::PolytopeCount {
            expected: 0,
            found: 0,
        });
    };
    let n = first.dim();
    if polytopes.len() != n {
        return Err(Error::PolytopeCount {
            expected: n,
            found: polytopes.len(),
        });
    }
    for p in polytopes {
        if p.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.dim(),
            });
        }
    }
    let sign = |k: usize| if (n - k).is_multiple_of(2) { 1i64 } else { -1i64 };
    let mut total = sign(0);
    for mask in 1u32..(1u32 << n) {
        let terms: Vec<(&IntegerPolytope, u32)> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| (&polytopes[i], 1))
            .collect();
        let count = weighted_sum_lattice_points(&terms).len() as i64;
        total += sign(terms.len()) * count;
    }
    Ok(u64::try_from(total).expect("mixed volume is non-negative"))
}

/// Is `p` a non-negative rational combination of the generators?
/// For the cone of a polytope containing the origin this decides monomial
/// divisibility: `x^a | x^b` iff `b - a` lies in the cone.
pub fn cone_membership(p: &LatticePoint, polytope: &IntegerPolytope) -> Result<bool> {
    p.check_dim(polytope.dim())?;
    if p.is_zero() {
        return Ok(true);
    }
    let gens: Vec<&LatticePoint> = polytope.generators().iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(false);
    }
    let mut lp = LpProblem::new(gens.len());
    for k in 0..p.dim() {
        lp.constrain(
            gens.iter().map(|g| to_rational(g[k])).collect(),
            Relation::Eq,
            to_rational(p[k]),
        );
    }
    Ok(lp_feasible(&lp)?.is_feasible())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &[i64]) -> LatticePoint {
        LatticePoint::new(v.to_vec())
    }

    fn poly(points: &[&[i64]]) -> IntegerPolytope {
        IntegerPolytope::new(points.iter().map(|p| pt(p))).unwrap()
    }

    fn unit_square() -> IntegerPolytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    #[test]
    fn newton_polytope_keeps_generators() {
        let p = newton_polytope(vec![pt(&[1, 1]), pt(&[0, 0])]).unwrap();
        assert_eq!(p.generators(), &[pt(&[0, 0]), pt(&[1, 1])]);
        let simplex = newton_polytope(vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])]).unwrap();
        assert_eq!(simplex, IntegerPolytope::standard_simplex(2));
        assert_eq!(newton_polytope(Vec::new()), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn newton_polytope_of_full_conic_is_doubled_simplex() {
        let support: Vec<LatticePoint> = [[2, 0], [1, 1], [0, 2], [1, 0], [0, 1], [0, 0]]
            .into_iter()
            .map(LatticePoint::from)
            .collect();
        let p = newton_polytope(support).unwrap();
        let family = normalize_translations(vec![IntegerPolytope::standard_simplex(2)]).unwrap();
        let doubled = weighted_minkowski_lattice_points(&family, &MultiDegree::new(vec![2])).unwrap();
        let mut ours = p.lattice_points();
        ours.sort();
        let mut expected = doubled;
        expected.sort();
        assert_eq!(ours, expected);
    }

    #[test]
    fn normalize_shifts_by_lex_min() {
        let f = normalize_translations(vec![poly(&[&[1, 0], &[2, 0]])]).unwrap();
        assert_eq!(f.polytope(0).generators(), &[pt(&[0, 0]), pt(&[1, 0])]);
        assert_eq!(f.translation(0), &pt(&[1, 0]));

        let s = IntegerPolytope::standard_simplex(2);
        let f = normalize_translations(vec![s.clone(), s.clone()]).unwrap();
        assert_eq!(f.polytopes(), &[s.clone(), s]);
        assert!(f.translations().iter().all(|t| t.is_zero()));

        let f = normalize_translations(vec![poly(&[&[2, 0], &[0, 2]])]).unwrap();
        assert_eq!(f.translation(0), &pt(&[0, 2]));
        assert_eq!(f.polytope(0).generators(), &[pt(&[0, 0]), pt(&[2, -2])]);
        // the origin is a vertex: it is not in the hull of the other generator
        let others = poly(&[&[2, -2]]);
        assert!(!others.contains(&pt(&[0, 0])).unwrap());
    }

    #[test]
    fn normalize_rejects_mixed_dimensions() {
        let r = normalize_translations(vec![poly(&[&[0, 0]]), poly(&[&[0, 0, 0]])]);
        assert_eq!(
            r,
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn weighted_sum_membership() {
        let f = normalize_translations(vec![unit_square(), unit_square()]).unwrap();
        assert!(point_in_weighted_sum(&pt(&[0, 0]), &f, &MultiDegree::new(vec![0, 0])).unwrap());
        assert!(point_in_weighted_sum(&pt(&[1, 1]), &f, &MultiDegree::new(vec![1, 0])).unwrap());
        assert!(!point_in_weighted_sum(&pt(&[3, 0]), &f, &MultiDegree::new(vec![1, 1])).unwrap());
        assert!(point_in_weighted_sum(&pt(&[2, 0]), &f, &MultiDegree::new(vec![1, 1])).unwrap());
        assert!(point_in_weighted_sum(&pt(&[1]), &f, &MultiDegree::new(vec![1, 1])).is_err());
        assert!(point_in_weighted_sum(&pt(&[1, 1]), &f, &MultiDegree::new(vec![1])).is_err());
    }

    #[test]
    fn simplex_dilates_have_binomial_counts() {
        let f = normalize_translations(vec![IntegerPolytope::standard_simplex(2)]).unwrap();
        let count = |k| {
            weighted_minkowski_lattice_points(&f, &MultiDegree::new(vec![k]))
                .unwrap()
                .len()
        };
        assert_eq!(count(0), 1);
        assert_eq!(count(1), 3);
        assert_eq!(count(2), 6);
        assert_eq!(count(4), 15);
    }

    #[test]
    fn pentagon_has_eleven_points() {
        let s = IntegerPolytope::standard_simplex(2);
        let seg = poly(&[&[0, 0], &[1, 1]]);
        let f = normalize_translations(vec![s.clone(), seg, s]).unwrap();
        let pts = weighted_minkowski_lattice_points(&f, &MultiDegree::new(vec![1, 1, 1])).unwrap();
        assert_eq!(pts.len(), 11);
        assert!(pts.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn mixed_volumes_from_lattice_counts() {
        let s = IntegerPolytope::standard_simplex(2);
        assert_eq!(mixed_volume(&[unit_square(), unit_square()]).unwrap(), 2);
        assert_eq!(mixed_volume(&[s.clone(), s.clone()]).unwrap(), 1);
        assert_eq!(mixed_volume(&[poly(&[&[0, 0], &[1, 1]]), s.clone()]).unwrap(), 2);
        assert_eq!(
            mixed_volume(std::slice::from_ref(&s)),
            Err(Error::PolytopeCount {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn cone_queries() {
        let s = IntegerPolytope::standard_simplex(2);
        assert!(cone_membership(&pt(&[0, 0]), &s).unwrap());
        assert!(cone_membership(&pt(&[3, 1]), &s).unwrap());
        assert!(!cone_membership(&pt(&[-1, 0]), &s).unwrap());
        // cone of {(1,1),(1,0)} is 0 <= y <= x, which misses (1,-1)
        let wedge = poly(&[&[0, 0], &[1, 1], &[1, 0]]);
        assert!(!cone_membership(&pt(&[1, -1]), &wedge).unwrap());
        assert!(cone_membership(&pt(&[2, 1]), &wedge).unwrap());
        assert!(cone_membership(&pt(&[1]), &wedge).is_err());
    }
}
