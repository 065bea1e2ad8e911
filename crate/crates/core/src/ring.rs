//! Monomials and polynomials of `K[Z^n]`, `K[S_Δ]` and the multigraded
//! algebra `K[S_Δ^h]`.
//!
//! A monomial of `K[S_Δ^h]` is a pair `(α, d)` with `α ∈ (Σ d_i Δ_i) ∩ Z^n`.
//! Dehomogenization forgets `d`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::polytope::{point_in_weighted_sum, LatticePoint, PolytopeFamily};
use crate::rational::{format_rational, Rational};

/// A multidegree in `N^{r+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree(Vec<u32>);

impl MultiDegree {
    pub fn new(d: Vec<u32>) -> Self {
        MultiDegree(d)
    }

    pub fn zero(len: usize) -> Self {
        MultiDegree(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut d = vec![0; len];
        d[i] = 1;
        MultiDegree(d)
    }

    /// `Σ_i e_i`.
    pub fn ones(len: usize) -> Self {
        MultiDegree(vec![1; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &u32> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&v| v as u64).sum()
    }

    /// Componentwise `self >= other`.
    pub fn ge(&self, other: &MultiDegree) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    /// `self - other` when it stays in `N^{r+1}`.
    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        if self.0.len() != other.0.len() {
            return None;
        }
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiDegree)
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        debug_assert_eq!(self.len(), other.len());
        MultiDegree(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for MultiDegree {
    fn from(d: Vec<u32>) -> Self {
        MultiDegree(d)
    }
}

/// Monomial `x^(α, d)` of `K[S_Δ^h]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub alpha: LatticePoint,
    pub degree: MultiDegree,
}

impl Monomial {
    pub fn new(alpha: LatticePoint, degree: MultiDegree) -> Self {
        Monomial { alpha, degree }
    }

    /// `x^(0, d)`.
    pub fn unit_of_degree(dim: usize, degree: MultiDegree) -> Self {
        Monomial {
            alpha: LatticePoint::zero(dim),
            degree,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            alpha: &self.alpha + &other.alpha,
            degree: self.degree.add(&other.degree),
        }
    }

    /// Checks `α ∈ Σ d_i Δ_i`.
    pub fn is_valid_in(&self, family: &PolytopeFamily) -> Result<bool> {
        point_in_weighted_sum(&self.alpha, family, &self.degree)
    }
}

/// Homogeneous element of `K[S_Δ^h]_d`. Terms are kept in strictly
/// descending order under the order used to build the polynomial, with no
/// zero coefficients, so the first term is the leading one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPolynomial {
    degree: MultiDegree,
    terms: Vec<(LatticePoint, Rational)>,
}

impl HomogeneousPolynomial {
    pub fn zero(degree: MultiDegree) -> Self {
        HomogeneousPolynomial {
            degree,
            terms: Vec::new(),
        }
    }

    pub fn from_terms(
        degree: MultiDegree,
        terms: impl IntoIterator<Item = (LatticePoint, Rational)>,
        order: &MonomialOrder,
    ) -> Self {
        let mut merged: BTreeMap<LatticePoint, Rational> = BTreeMap::new();
        for (a, c) in terms {
            *merged.entry(a).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<(LatticePoint, Rational)> = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.compare_exponents(&b.0, &a.0));
        HomogeneousPolynomial { degree, terms }
    }

    /// Trusted constructor: `terms` must already be strictly descending
    /// under the ambient order with no zero coefficients.
    pub(crate) fn from_sorted_terms(degree: MultiDegree, terms: Vec<(LatticePoint, Rational)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        HomogeneousPolynomial { degree, terms }
    }

    pub fn monomial(m: &Monomial) -> Self {
        HomogeneousPolynomial {
            degree: m.degree.clone(),
            terms: vec![(m.alpha.clone(), Rational::one())],
        }
    }

    pub fn degree(&self) -> &MultiDegree {
        &self.degree
    }

    pub fn terms(&self) -> &[(LatticePoint, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// First stored term; the leading term for the construction order.
    pub fn leading_term(&self) -> Option<(&LatticePoint, &Rational)> {
        self.terms.first().map(|(a, c)| (a, c))
    }

    pub fn coefficient(&self, alpha: &LatticePoint) -> Rational {
        self.terms
            .iter()
            .find(|(a, _)| a == alpha)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms
            .iter()
            .map(move |(a, _)| Monomial::new(a.clone(), self.degree.clone()))
    }

    pub fn add(&self, other: &HomogeneousPolynomial, order: &MonomialOrder) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::Inconsistent(format!(
                "cannot add polynomials of degrees {:?} and {:?}",
                self.degree, other.degree
            )));
        }
        Ok(Self::from_terms(
            self.degree.clone(),
            self.terms.iter().chain(other.terms.iter()).cloned(),
            order,
        ))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree.clone());
        }
        HomogeneousPolynomial {
            degree: self.degree.clone(),
            terms: self.terms.iter().map(|(a, v)| (a.clone(), v * c)).collect(),
        }
    }

    /// Checks that every exponent lies in the graded piece of the family.
    pub fn is_valid_in(&self, family: &PolytopeFamily) -> Result<bool> {
        for (a, _) in &self.terms {
            if !point_in_weighted_sum(a, family, &self.degree)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `m · F`: exponents and degrees add, coefficients are unchanged. Monomial
/// orders are compatible with multiplication, so term order is preserved.
pub fn monomial_multiply(m: &Monomial, f: &HomogeneousPolynomial) -> HomogeneousPolynomial {
    HomogeneousPolynomial {
        degree: m.degree.add(&f.degree),
        terms: f.terms.iter().map(|(a, c)| (&m.alpha + a, c.clone())).collect(),
    }
}

/// Sparse Laurent polynomial; also used for elements of `K[S_Δ]` and `K[x]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<LatticePoint, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (LatticePoint, Rational)>) -> Self {
        let mut p = LaurentPolynomial::zero();
        for (a, c) in terms {
            p.add_term(a, c);
        }
        p
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::from_terms([(LatticePoint::zero(dim), c)])
    }

    pub fn add_term(&mut self, alpha: LatticePoint, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(alpha);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of variables, or `None` for the zero polynomial.
    pub fn dim(&self) -> Option<usize> {
        self.terms.keys().next().map(|a| a.dim())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &LatticePoint> {
        self.terms.keys()
    }

    pub fn coefficient(&self, alpha: &LatticePoint) -> Rational {
        self.terms.get(alpha).cloned().unwrap_or_else(Rational::zero)
    }

    /// `x^shift · self`.
    pub fn shifted(&self, shift: &LatticePoint) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(a, c)| (a + shift, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(a, v)| (a.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &LaurentPolynomial) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPolynomial) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPolynomial) -> Self {
        let mut out = LaurentPolynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }

    /// Largest term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&LatticePoint, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare_exponents(a.0, b.0))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&LatticePoint, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare_exponents(b.0, a.0));
        v
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Infix rendering such as `x*y^2 - 1/2*y + 3`, terms descending under
    /// `order`.
    pub fn to_infix(&self, vars: &[String], order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (a, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono: Vec<String> = a
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(k, &e)| {
                    let name = vars.get(k).cloned().unwrap_or_else(|| format!("x{}", k + 1));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&format_rational(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&format_rational(&abs));
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

/// Lifts `f` to `K[S_Δ^h]_d`: exponents are shifted by `-Σ d_i t_i` (the
/// translations removed from the family) and must land in `Σ d_i Δ_i`.
pub fn homogenize_at(
    f: &LaurentPolynomial,
    degree: &MultiDegree,
    family: &PolytopeFamily,
    order: &MonomialOrder,
) -> Result<HomogeneousPolynomial> {
    if f.is_zero() {
        return Err(Error::EmptyPolynomial);
    }
    if degree.len() != family.len() {
        return Err(Error::DimensionMismatch {
            expected: family.len(),
            found: degree.len(),
        });
    }
    let shift = -&family.weighted_translation(degree);
    let mut terms = Vec::with_capacity(f.len());
    for (a, c) in f.terms() {
        if a.dim() != family.dim() {
            return Err(Error::DimensionMismatch {
                expected: family.dim(),
                found: a.dim(),
            });
        }
        let b = a + &shift;
        if !point_in_weighted_sum(&b, family, degree)? {
            return Err(Error::SupportOutsidePolytope {
                point: a.coords().to_vec(),
                degree: degree.as_slice().to_vec(),
            });
        }
        terms.push((b, c.clone()));
    }
    Ok(HomogeneousPolynomial::from_terms(degree.clone(), terms, order))
}

/// The degree-`e_slot` lift of `f`.
pub fn homogenize(
    f: &LaurentPolynomial,
    slot: usize,
    family: &PolytopeFamily,
    order: &MonomialOrder,
) -> Result<HomogeneousPolynomial> {
    if slot >= family.len() {
        return Err(Error::DimensionMismatch {
            expected: family.len(),
            found: slot + 1,
        });
    }
    homogenize_at(f, &MultiDegree::unit(family.len(), slot), family, order)
}

/// `χ(x^(α,d)) = x^α`.
pub fn dehomogenize(f: &HomogeneousPolynomial) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(f.terms().iter().cloned())
}
