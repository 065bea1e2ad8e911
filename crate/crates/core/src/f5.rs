//! Macaulay-matrix Gröbner bases over `K[S_Δ]`.
//!
//! [`SystemContext::macaulay_full`] builds the plain Macaulay matrix of a
//! graded piece of the ideal. [`SystemContext::reduce_macaulay`] builds the
//! same row space recursively, skipping every product `x^(α, d-d_k) F_k`
//! whose multiplier is a leading monomial of `<F_1..F_{k-1}>` at degree
//! `d - d_k` (those rows reduce to zero). On Koszul-regular inputs no row of
//! any assembled matrix reduces to zero.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::macaulay::{MacaulayMatrix, RowLabel};
use crate::order::{sort_exponents_desc, MonomialOrder};
use crate::polytope::{cone_membership, point_in_weighted_sum, weighted_minkowski_lattice_points};
use crate::polytope::{IntegerPolytope, LatticePoint, PolytopeFamily};
use crate::rational::Rational;
use crate::ring::{dehomogenize, monomial_multiply, HomogeneousPolynomial, LaurentPolynomial, Monomial, MultiDegree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    /// Assembled inside `reduce_macaulay`.
    Reduced,
    /// Built by `macaulay_full`.
    Full,
    /// The square matrix used for a multiplication map.
    Multiplication,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixRecord {
    pub kind: MatrixKind,
    /// Number of generators involved (`k`).
    pub generators: usize,
    pub degree: Vec<u32>,
    pub rows: usize,
    pub cols: usize,
    pub rank: Option<usize>,
}

/// Instrumentation collected while building matrices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub matrices: Vec<MatrixRecord>,
    /// Product rows `x^(α, d-d_i) F_i` created.
    pub rows_built: usize,
    /// Rows of `reduce_macaulay` matrices that reduced to zero.
    pub zero_reductions: usize,
    /// Row operations performed by elimination.
    pub eliminations: usize,
    pub cache_hits: usize,
    /// `P(d)` for every degree whose monomials were enumerated.
    pub lattice_counts: BTreeMap<MultiDegree, usize>,
}

/// A set of polynomials with their leading exponents, sorted by leading
/// exponent in descending order. Elements are monic.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    elements: Vec<LaurentPolynomial>,
    leading: Vec<LatticePoint>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn new(elements: Vec<LaurentPolynomial>, order: MonomialOrder) -> Self {
        let mut pairs: Vec<(LatticePoint, LaurentPolynomial)> = elements
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                let p = p.monic(&order);
                let lm = p.leading_term(&order).expect("non-zero").0.clone();
                (lm, p)
            })
            .collect();
        pairs.sort_by(|a, b| order.compare_exponents(&b.0, &a.0));
        let (leading, elements) = pairs.into_iter().unzip();
        GroebnerBasis {
            elements,
            leading,
            order,
        }
    }

    pub fn elements(&self) -> &[LaurentPolynomial] {
        &self.elements
    }

    pub fn leading_exponents(&self) -> &[LatticePoint] {
        &self.leading
    }

    pub fn leading_set(&self) -> BTreeSet<LatticePoint> {
        self.leading.iter().cloned().collect()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub degree: MultiDegree,
    pub next_degree: MultiDegree,
    /// Equal reduced leading-monomial sets at both degrees. This is a
    /// heuristic signal, not a certificate that the degree is large enough.
    pub stable: bool,
    pub basis: GroebnerBasis,
    pub next_basis: GroebnerBasis,
}

/// Homogeneous generators `F_1..F_k` over a polytope family, with memoized
/// echelon forms keyed by `(k, d)`.
#[derive(Debug, Clone)]
pub struct SystemContext {
    family: PolytopeFamily,
    order: MonomialOrder,
    generators: Vec<HomogeneousPolynomial>,
    cone: IntegerPolytope,
    reduced: HashMap<(usize, MultiDegree), Arc<MacaulayMatrix>>,
    pieces: HashMap<MultiDegree, Arc<Vec<LatticePoint>>>,
    divisibility: HashMap<LatticePoint, bool>,
    stats: Stats,
}

impl SystemContext {
    pub fn new(family: PolytopeFamily, order: MonomialOrder, generators: Vec<HomogeneousPolynomial>) -> Result<Self> {
        if order.dim() != family.dim() {
            return Err(Error::DimensionMismatch {
                expected: family.dim(),
                found: order.dim(),
            });
        }
        for g in &generators {
            if g.degree().len() != family.len() {
                return Err(Error::DimensionMismatch {
                    expected: family.len(),
                    found: g.degree().len(),
                });
            }
            if g.is_zero() {
                return Err(Error::EmptyPolynomial);
            }
            if let Some((a, _)) = g.terms().iter().find(|(a, _)| {
                !point_in_weighted_sum(a, &family, g.degree()).unwrap_or(false)
            }) {
                return Err(Error::SupportOutsidePolytope {
                    point: a.coords().to_vec(),
                    degree: g.degree().as_slice().to_vec(),
                });
            }
        }
        // re-sort terms under this order
        let generators = generators
            .into_iter()
            .map(|g| HomogeneousPolynomial::from_terms(g.degree().clone(), g.terms().iter().cloned(), &order))
            .collect();
        let cone = family.cone_generators();
        Ok(SystemContext {
            family,
            order,
            generators,
            cone,
            reduced: HashMap::new(),
            pieces: HashMap::new(),
            divisibility: HashMap::new(),
            stats: Stats::default(),
        })
    }

    pub fn family(&self) -> &PolytopeFamily {
        &self.family
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[HomogeneousPolynomial] {
        &self.generators
    }

    pub fn stats(&self) -> &Stats {
        &self.stats
    }

    /// `Σ_i d_i` over all generators.
    pub fn degree_sum(&self) -> MultiDegree {
        self.generators
            .iter()
            .fold(MultiDegree::zero(self.family.len()), |acc, g| acc.add(g.degree()))
    }

    pub(crate) fn record(&mut self, record: MatrixRecord) {
        self.stats.matrices.push(record);
    }

    /// Exponents of the monomials of degree `d`, descending under the order.
    pub fn monomials(&mut self, d: &MultiDegree) -> Result<Arc<Vec<LatticePoint>>> {
        if let Some(p) = self.pieces.get(d) {
            return Ok(p.clone());
        }
        let pts = weighted_minkowski_lattice_points(&self.family, d)?;
        let pts = Arc::new(sort_exponents_desc(pts, &self.order));
        self.stats.lattice_counts.insert(d.clone(), pts.len());
        self.pieces.insert(d.clone(), pts.clone());
        Ok(pts)
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k > self.generators.len() {
            return Err(Error::Inconsistent(format!(
                "asked for {k} generators but the system has {}",
                self.generators.len()
            )));
        }
        Ok(())
    }

    /// All products `x^(α, d-d_i) F_i`, `i < k`, as rows (not reduced).
    pub fn macaulay_full(&mut self, k: usize, d: &MultiDegree) -> Result<MacaulayMatrix> {
        self.check_k(k)?;
        let columns = self.monomials(d)?;
        let mut m = MacaulayMatrix::new(d.clone(), columns.as_ref().clone());
        for i in 0..k {
            let Some(dd) = d.checked_sub(self.generators[i].degree()) else {
                continue;
            };
            let multipliers = self.monomials(&dd)?;
            for alpha in multipliers.iter() {
                let row = monomial_multiply(&Monomial::new(alpha.clone(), dd.clone()), &self.generators[i]);
                m.push_polynomial(
                    RowLabel::Product {
                        generator: i,
                        multiplier: alpha.clone(),
                    },
                    &row,
                )?;
                self.stats.rows_built += 1;
            }
        }
        self.record(MatrixRecord {
            kind: MatrixKind::Full,
            generators: k,
            degree: d.as_slice().to_vec(),
            rows: m.nrows(),
            cols: m.ncols(),
            rank: None,
        });
        Ok(m)
    }

    /// Echelon form of `<F_1..F_k>_d` built with the Koszul F5 criterion.
    /// `k = 0` gives the empty matrix.
    pub fn reduce_macaulay(&mut self, k: usize, d: &MultiDegree) -> Result<Arc<MacaulayMatrix>> {
        self.check_k(k)?;
        if d.len() != self.family.len() {
            return Err(Error::DimensionMismatch {
                expected: self.family.len(),
                found: d.len(),
            });
        }
        if k == 0 {
            let columns = self.monomials(d)?;
            let mut m = MacaulayMatrix::new(d.clone(), columns.as_ref().clone());
            m = m.row_echelon_counted().0;
            return Ok(Arc::new(m));
        }
        let key = (k, d.clone());
        if let Some(m) = self.reduced.get(&key) {
            self.stats.cache_hits += 1;
            return Ok(m.clone());
        }

        let columns = self.monomials(d)?;
        let mut m = MacaulayMatrix::new(d.clone(), columns.as_ref().clone());
        let previous = self.reduce_macaulay(k - 1, d)?;
        for i in 0..previous.nrows() {
            m.push_dense_row(previous.labels()[i].clone(), previous.dense_row(i).to_vec());
        }

        let fk = self.generators[k - 1].clone();
        if let Some(dd) = d.checked_sub(fk.degree()) {
            let lower = self.reduce_macaulay(k - 1, &dd)?;
            let excluded: HashSet<LatticePoint> = lower.leading_exponents().into_iter().collect();
            let multipliers = self.monomials(&dd)?;
            for alpha in multipliers.iter().filter(|a| !excluded.contains(*a)) {
                let row = monomial_multiply(&Monomial::new(alpha.clone(), dd.clone()), &fk);
                m.push_polynomial(
                    RowLabel::Product {
                        generator: k - 1,
                        multiplier: alpha.clone(),
                    },
                    &row,
                )?;
                self.stats.rows_built += 1;
            }
        }

        let assembled = m.nrows();
        let (echelon, ops) = m.row_echelon_counted();
        self.stats.eliminations += ops;
        self.stats.zero_reductions += assembled - echelon.nrows();
        self.record(MatrixRecord {
            kind: MatrixKind::Reduced,
            generators: k,
            degree: d.as_slice().to_vec(),
            rows: assembled,
            cols: echelon.ncols(),
            rank: Some(echelon.nrows()),
        });
        let echelon = Arc::new(echelon);
        self.reduced.insert(key, echelon.clone());
        Ok(echelon)
    }

    /// Monomial divisibility in `K[S_Δ]`: `x^a | x^b` iff `b - a` is in the
    /// cone of the family.
    pub fn divides(&mut self, a: &LatticePoint, b: &LatticePoint) -> Result<bool> {
        let diff = b - a;
        if let Some(&v) = self.divisibility.get(&diff) {
            return Ok(v);
        }
        let v = cone_membership(&diff, &self.cone)?;
        self.divisibility.insert(diff, v);
        Ok(v)
    }

    /// Reduces every non-leading term of `p` by the leading exponents of
    /// `basis` (skipping entry `skip`).
    fn reduce_tail(
        &mut self,
        p: &LaurentPolynomial,
        lead: &LatticePoint,
        basis: &[(LatticePoint, LaurentPolynomial)],
        skip: usize,
    ) -> Result<LaurentPolynomial> {
        let lc = p.coefficient(lead);
        let mut out = LaurentPolynomial::from_terms([(lead.clone(), lc.clone())]);
        let mut rest = p.sub(&out);
        while let Some((t, c)) = rest.leading_term(&self.order).map(|(t, c)| (t.clone(), c.clone())) {
            let mut reducer = None;
            for (j, (h_lead, h)) in basis.iter().enumerate() {
                if j != skip && self.divides(h_lead, &t)? {
                    reducer = Some((h_lead, h));
                    break;
                }
            }
            match reducer {
                Some((h_lead, h)) => {
                    let q: Rational = &c / h.coefficient(h_lead);
                    rest = rest.sub(&h.shifted(&(&t - h_lead)).scale(&q));
                }
                None => {
                    out.add_term(t.clone(), c.clone());
                    rest.add_term(t, -c);
                }
            }
        }
        Ok(out)
    }

    /// Gröbner basis candidate of `<χ(F_1), ..., χ(F_k)>` read off the
    /// degree-`d` echelon form, minimalized and inter-reduced.
    ///
    /// The result is a Gröbner basis whenever `d` is large enough; there is
    /// no constructive bound, see [`SystemContext::gb_stability_check`].
    pub fn compute_gb(&mut self, d: &MultiDegree) -> Result<GroebnerBasis> {
        let k = self.generators.len();
        let m = self.reduce_macaulay(k, d)?;
        let mut elems: Vec<(LatticePoint, LaurentPolynomial)> = m
            .row_polynomials()
            .iter()
            .map(|row| {
                let lead = row.leading_term().expect("non-zero row").0.clone();
                (lead, dehomogenize(row))
            })
            .collect();
        elems.sort_by(|a, b| self.order.compare_exponents(&a.0, &b.0));

        let mut kept: Vec<(LatticePoint, LaurentPolynomial)> = Vec::new();
        for (lead, p) in elems {
            let mut redundant = false;
            for (k_lead, _) in &kept {
                if self.divides(k_lead, &lead)? {
                    redundant = true;
                    break;
                }
            }
            if !redundant {
                kept.push((lead, p));
            }
        }

        for i in 0..kept.len() {
            let snapshot = kept.clone();
            let reduced = self.reduce_tail(&snapshot[i].1, &snapshot[i].0, &snapshot, i)?;
            kept[i].1 = reduced;
        }

        Ok(GroebnerBasis::new(
            kept.into_iter().map(|(_, p)| p).collect(),
            self.order.clone(),
        ))
    }

    /// Runs [`compute_gb`](Self::compute_gb) at `d` and `d + 1` and compares
    /// the leading-monomial sets.
    pub fn gb_stability_check(&mut self, d: &MultiDegree) -> Result<StabilityReport> {
        let next = d.add(&MultiDegree::ones(d.len()));
        let basis = self.compute_gb(d)?;
        let next_basis = self.compute_gb(&next)?;
        Ok(StabilityReport {
            degree: d.clone(),
            next_degree: next,
            stable: basis.leading_set() == next_basis.leading_set(),
            basis,
            next_basis,
        })
    }

    /// Smallest multidegree (by total degree, then lexicographically) whose
    /// polytope contains the support of `p`, searching totals up to
    /// `max_total`. `p` is in the translated coordinates produced by
    /// [`dehomogenize`].
    pub fn minimal_degree(&self, p: &LaurentPolynomial, max_total: u32) -> Result<Option<MultiDegree>> {
        let len = self.family.len();
        for total in 0..=max_total {
            for d in compositions(total, len) {
                let d = MultiDegree::new(d);
                let mut inside = true;
                for a in p.support() {
                    if !point_in_weighted_sum(a, &self.family, &d)? {
                        inside = false;
                        break;
                    }
                }
                if inside {
                    return Ok(Some(d));
                }
            }
        }
        Ok(None)
    }
}

/// All vectors of `len` non-negative integers summing to `total`, in
/// descending lexicographic order.
fn compositions(total: u32, len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if len == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
