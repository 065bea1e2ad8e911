//! Monomial orders given by integer linear forms.
//!
//! A multigraded order on `K[S_Δ^h]` compares the degree part first (with
//! `degree_forms`, lexicographically) and breaks ties with `exponent_forms`
//! on the exponent part. The exponent part alone is the associated order on
//! `K[S_Δ]`.

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::polytope::{LatticePoint, PolytopeFamily};
use crate::rational::Rational;
use crate::ring::{HomogeneousPolynomial, Monomial, MultiDegree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    degree_forms: Vec<Vec<i64>>,
    exponent_forms: Vec<Vec<i64>>,
}

fn eval(form: &[i64], v: &[i64]) -> i64 {
    form.iter().zip(v.iter()).map(|(a, b)| a * b).sum()
}

fn eval_degree(form: &[i64], d: &MultiDegree) -> i64 {
    form.iter().zip(d.iter()).map(|(a, &b)| a * b as i64).sum()
}

/// Total degree, then lexicographic with `d_0` most significant.
fn graded_degree_forms(len: usize) -> Vec<Vec<i64>> {
    let mut forms = vec![vec![1; len]];
    forms.extend((0..len).map(|i| {
        let mut e = vec![0; len];
        e[i] = 1;
        e
    }));
    forms
}

fn identity_forms(dim: usize) -> Vec<Vec<i64>> {
    (0..dim)
        .map(|i| {
            let mut e = vec![0; dim];
            e[i] = 1;
            e
        })
        .collect()
}

impl MonomialOrder {
    /// Builds an order from explicit forms.
    ///
    /// The exponent forms must be `dim` linearly independent forms, and every
    /// non-zero cone generator must evaluate to a lexicographically positive
    /// vector of form values, which makes `x^0` the minimum and the order a
    /// well-order on the semigroup.
    pub fn new(
        degree_forms: Vec<Vec<i64>>,
        exponent_forms: Vec<Vec<i64>>,
        cone_generators: &[LatticePoint],
    ) -> Result<Self> {
        let dim = exponent_forms.len();
        if exponent_forms.iter().any(|f| f.len() != dim) {
            return Err(Error::InvalidOrder(format!(
                "expected {dim} exponent forms of length {dim}"
            )));
        }
        if let Some(first) = degree_forms.first() {
            if degree_forms.iter().any(|f| f.len() != first.len()) {
                return Err(Error::InvalidOrder("degree forms have different lengths".into()));
            }
        }
        let m = RationalMatrix::from_rows(
            exponent_forms
                .iter()
                .map(|f| f.iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect())
                .collect(),
            dim,
        );
        if m.rank() != dim {
            return Err(Error::InvalidOrder("exponent forms are linearly dependent".into()));
        }
        let order = MonomialOrder {
            degree_forms,
            exponent_forms,
        };
        for g in cone_generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
            if !g.is_zero() && order.compare_exponents(g, &LatticePoint::zero(dim)) != Ordering::Greater {
                return Err(Error::InvalidOrder(format!(
                    "cone generator {g:?} is not positive under the exponent forms"
                )));
            }
        }
        Ok(order)
    }

    /// Lexicographic order on `N^dim` with no degree part; used as a target
    /// order on `K[x]`.
    pub fn lex(dim: usize) -> Self {
        MonomialOrder {
            degree_forms: Vec::new(),
            exponent_forms: identity_forms(dim),
        }
    }

    /// Degree reverse lexicographic order on `N^dim`.
    pub fn grevlex(dim: usize) -> Self {
        let mut forms = vec![vec![1; dim]];
        for i in (1..dim).rev() {
            let mut e = vec![0; dim];
            e[i] = -1;
            forms.push(e);
        }
        MonomialOrder {
            degree_forms: Vec::new(),
            exponent_forms: forms,
        }
    }

    /// A user-supplied weight matrix (row-major, one row per exponent form)
    /// combined with the default graded degree comparison.
    pub fn from_weight_matrix(rows: Vec<Vec<i64>>, family: &PolytopeFamily) -> Result<Self> {
        Self::new(
            graded_degree_forms(family.len()),
            rows,
            family.cone_generators().generators(),
        )
    }

    pub fn degree_forms(&self) -> &[Vec<i64>] {
        &self.degree_forms
    }

    pub fn exponent_forms(&self) -> &[Vec<i64>] {
        &self.exponent_forms
    }

    pub fn dim(&self) -> usize {
        self.exponent_forms.len()
    }

    pub fn compare_exponents(&self, a: &LatticePoint, b: &LatticePoint) -> Ordering {
        for f in &self.exponent_forms {
            match eval(f, a.coords()).cmp(&eval(f, b.coords())) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub fn compare_degrees(&self, a: &MultiDegree, b: &MultiDegree) -> Ordering {
        for f in &self.degree_forms {
            match eval_degree(f, a).cmp(&eval_degree(f, b)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        // forms may not separate every pair; fall back to plain lex
        a.cmp(b)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare_degrees(&a.degree, &b.degree)
            .then_with(|| self.compare_exponents(&a.alpha, &b.alpha))
    }
}

/// Lexicographic exponent order with graded degree comparison. Valid for
/// normalized families: after translation every generator is
/// lexicographically non-negative, and lex-positivity is preserved by sums
/// and positive scaling, so the whole cone is lex-positive.
pub fn default_order(family: &PolytopeFamily) -> Result<MonomialOrder> {
    MonomialOrder::new(
        graded_degree_forms(family.len()),
        identity_forms(family.dim()),
        family.cone_generators().generators(),
    )
}

/// Largest monomial of `f` under `order`.
pub fn leading_monomial(f: &HomogeneousPolynomial, order: &MonomialOrder) -> Result<Monomial> {
    f.terms()
        .iter()
        .map(|(a, _)| a)
        .max_by(|a, b| order.compare_exponents(a, b))
        .map(|a| Monomial::new(a.clone(), f.degree().clone()))
        .ok_or(Error::ZeroPolynomial)
}

/// Sorts descending and drops duplicates.
pub fn sort_monomials_desc(mut monomials: Vec<Monomial>, order: &MonomialOrder) -> Vec<Monomial> {
    monomials.sort_by(|a, b| order.compare(b, a));
    monomials.dedup();
    monomials
}

/// Sorts exponent vectors of one graded piece descending and drops
/// duplicates.
pub fn sort_exponents_desc(mut points: Vec<LatticePoint>, order: &MonomialOrder) -> Vec<LatticePoint> {
    points.sort_by(|a, b| order.compare_exponents(b, a));
    points.dedup();
    points
}
