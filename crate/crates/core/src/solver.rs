//! Zero-dimensional solving on the torus.
//!
//! A square system `f_1..f_n` is lifted to `K[S_Δ^h]` over the family
//! `(Δ_0, NP(f_1), ..., NP(f_n))` with `Δ_0` the standard simplex. The
//! monomials of degree `(0,1,..,1)` outside the leading monomials of the
//! ideal form a basis `𝓛` of `K[x^±]/<f>`, and the multiplication maps on
//! that basis are Schur complements of one square Macaulay matrix of degree
//! `(1,..,1)`.

use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::f5::{GroebnerBasis, MatrixKind, MatrixRecord, SystemContext};
use crate::fglm::fglm;
use crate::linalg::{schur_complement, RationalMatrix};
use crate::macaulay::{MacaulayMatrix, RowLabel};
use crate::order::{default_order, MonomialOrder};
use crate::polytope::{mixed_volume, newton_polytope, normalize_translations, IntegerPolytope, LatticePoint};
use crate::rational::Rational;
use crate::ring::{homogenize, monomial_multiply, HomogeneousPolynomial, LaurentPolynomial, Monomial, MultiDegree};

/// Standard monomials of degree `(0,1,..,1)`, descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasisL {
    pub monomials: Vec<LatticePoint>,
    pub degree: MultiDegree,
    /// Position of `x^(0, Σ e_i)`, the monomial with `χ = 1`.
    pub one_index: Option<usize>,
}

impl MonomialBasisL {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Coordinates of the constant 1, or `None` if 1 is not in the basis.
    pub fn one_vector(&self) -> Option<Vec<Rational>> {
        self.one_index.map(|k| {
            let mut v = vec![Rational::zero(); self.len()];
            v[k] = Rational::one();
            v
        })
    }
}

/// `𝓜(F_0)` with columns split into the monomials outside `𝓛 · x^(0,e_0)`
/// (block 1) and inside it (block 2), rows split into the echelon rows of
/// the ideal (block 1) and the products `m F_0`, `m ∈ 𝓛` (block 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockedMacaulay {
    pub m11: RationalMatrix,
    pub m12: RationalMatrix,
    pub m21: RationalMatrix,
    pub m22: RationalMatrix,
    /// Original column positions of block 1, then block 2.
    pub column_permutation: Vec<usize>,
    pub columns: Vec<LatticePoint>,
    pub row_labels: Vec<RowLabel>,
}

impl BlockedMacaulay {
    pub fn nrows(&self) -> usize {
        self.m11.nrows() + self.m21.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.m11.ncols() + self.m12.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    /// The blocks glued back together in permuted order.
    pub fn assembled(&self) -> RationalMatrix {
        let top = self.m11.nrows();
        let left = self.m11.ncols();
        RationalMatrix::from_fn(self.nrows(), self.ncols(), |i, j| {
            match (i < top, j < left) {
                (true, true) => self.m11.get(i, j).clone(),
                (true, false) => self.m12.get(i, j - left).clone(),
                (false, true) => self.m21.get(i - top, j).clone(),
                (false, false) => self.m22.get(i - top, j - left).clone(),
            }
        })
    }
}

/// Multiplication by `x_variable` on `K[x^±]/<f>` in the basis `χ(𝓛)`.
/// Row `i` holds the coordinates of the normal form of `χ(𝓛_i) · x_variable`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationMap {
    pub variable: usize,
    pub matrix: RationalMatrix,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroDimSolution {
    pub basis: GroebnerBasis,
    pub l_size: usize,
    pub mixed_volume: u64,
    pub maps: Vec<MultiplicationMap>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct TorusSolver {
    ctx: SystemContext,
    inputs: Vec<LaurentPolynomial>,
    mixed_volume: u64,
    basis: MonomialBasisL,
}

fn check_square(polys: &[LaurentPolynomial]) -> Result<usize> {
    let n = polys.len();
    for p in polys {
        match p.dim() {
            None => return Err(Error::EmptyPolynomial),
            Some(d) if d != n => {
                return Err(Error::NotSquare {
                    polynomials: n,
                    variables: d,
                })
            }
            Some(_) => {}
        }
    }
    if n == 0 {
        return Err(Error::NotSquare {
            polynomials: 0,
            variables: 0,
        });
    }
    Ok(n)
}

impl TorusSolver {
    /// Lifts `polys` with the default order.
    pub fn new(polys: &[LaurentPolynomial]) -> Result<Self> {
        Self::with_exponent_forms(polys, None)
    }

    /// Lifts `polys`; `forms`, when given, replace the lexicographic
    /// exponent order of the ambient ring.
    pub fn with_exponent_forms(polys: &[LaurentPolynomial], forms: Option<Vec<Vec<i64>>>) -> Result<Self> {
        let n = check_square(polys)?;
        let nps = polys
            .iter()
            .map(|p| newton_polytope(p.support().cloned()))
            .collect::<Result<Vec<IntegerPolytope>>>()?;
        let mv = mixed_volume(&nps)?;
        let mut polytopes = vec![IntegerPolytope::standard_simplex(n)];
        polytopes.extend(nps);
        let family = normalize_translations(polytopes)?;
        let order = match forms {
            None => default_order(&family)?,
            Some(rows) => MonomialOrder::from_weight_matrix(rows, &family)?,
        };
        let generators = polys
            .iter()
            .enumerate()
            .map(|(i, p)| homogenize(p, i + 1, &family, &order))
            .collect::<Result<Vec<_>>>()?;
        let mut ctx = SystemContext::new(family, order, generators)?;
        let basis = monomial_basis_l(&mut ctx)?;
        Ok(TorusSolver {
            ctx,
            inputs: polys.to_vec(),
            mixed_volume: mv,
            basis,
        })
    }

    pub fn context(&self) -> &SystemContext {
        &self.ctx
    }

    pub fn context_mut(&mut self) -> &mut SystemContext {
        &mut self.ctx
    }

    pub fn inputs(&self) -> &[LaurentPolynomial] {
        &self.inputs
    }

    pub fn nvars(&self) -> usize {
        self.inputs.len()
    }

    pub fn basis(&self) -> &MonomialBasisL {
        &self.basis
    }

    pub fn mixed_volume(&self) -> u64 {
        self.mixed_volume
    }

    /// `χ(𝓛_i)` as Laurent monomials.
    pub fn basis_laurent(&self) -> Vec<LaurentPolynomial> {
        self.basis
            .monomials
            .iter()
            .map(|a| LaurentPolynomial::from_terms([(a.clone(), Rational::one())]))
            .collect()
    }

    fn top_degree(&self) -> MultiDegree {
        MultiDegree::ones(self.nvars() + 1)
    }

    /// The degree-`e_0` monomial `x^(a, e_0)`.
    pub fn degree_e0_monomial(&self, alpha: LatticePoint) -> Result<HomogeneousPolynomial> {
        let m = Monomial::new(alpha, MultiDegree::unit(self.nvars() + 1, 0));
        if !m.is_valid_in(self.ctx.family())? {
            return Err(Error::SupportOutsidePolytope {
                point: m.alpha.coords().to_vec(),
                degree: m.degree.as_slice().to_vec(),
            });
        }
        Ok(HomogeneousPolynomial::monomial(&m))
    }

    /// `F_0` with `χ(F_0) = x_var`.
    pub fn variable_form(&self, var: usize) -> Result<HomogeneousPolynomial> {
        if var >= self.nvars() {
            return Err(Error::UnknownVariable {
                index: var,
                variables: self.nvars(),
            });
        }
        self.degree_e0_monomial(LatticePoint::unit(self.nvars(), var))
    }

    /// Builds `𝓜(F_0)` for a degree-`e_0` polynomial `F_0`.
    pub fn build_m(&mut self, f0: &HomogeneousPolynomial) -> Result<BlockedMacaulay> {
        let e0 = MultiDegree::unit(self.nvars() + 1, 0);
        if f0.degree() != &e0 {
            return Err(Error::Inconsistent(format!(
                "F0 must have degree {:?}, got {:?}",
                e0,
                f0.degree()
            )));
        }
        let top = self.top_degree();
        let ideal: Arc<MacaulayMatrix> = self.ctx.reduce_macaulay(self.nvars(), &top)?;
        let mut lower = MacaulayMatrix::new(top.clone(), ideal.columns().to_vec());
        for alpha in &self.basis.monomials {
            let m = Monomial::new(alpha.clone(), self.basis.degree.clone());
            lower.push_polynomial(
                RowLabel::Product {
                    generator: 0,
                    multiplier: alpha.clone(),
                },
                &monomial_multiply(&m, f0),
            )?;
        }

        let in_l: HashSet<&LatticePoint> = self.basis.monomials.iter().collect();
        let columns = ideal.columns();
        let block1: Vec<usize> = (0..columns.len()).filter(|&j| !in_l.contains(&columns[j])).collect();
        let block2: Vec<usize> = (0..columns.len()).filter(|&j| in_l.contains(&columns[j])).collect();

        let pick = |m: &MacaulayMatrix, cols: &[usize]| {
            RationalMatrix::from_fn(m.nrows(), cols.len(), |i, j| m.dense_row(i)[cols[j]].clone())
        };
        let blocked = BlockedMacaulay {
            m11: pick(&ideal, &block1),
            m12: pick(&ideal, &block2),
            m21: pick(&lower, &block1),
            m22: pick(&lower, &block2),
            columns: block1.iter().chain(&block2).map(|&j| columns[j].clone()).collect(),
            column_permutation: block1.into_iter().chain(block2).collect(),
            row_labels: ideal.labels().iter().chain(lower.labels()).cloned().collect(),
        };
        self.ctx.record(MatrixRecord {
            kind: MatrixKind::Multiplication,
            generators: self.nvars(),
            degree: top.as_slice().to_vec(),
            rows: blocked.nrows(),
            cols: blocked.ncols(),
            rank: None,
        });
        Ok(blocked)
    }

    /// Schur complement `M22 - M21 M11^-1 M12` of `𝓜(F_0)`: the map
    /// `χ(F_0) ·` on the quotient in the basis `χ(𝓛)`.
    pub fn schur_map(&mut self, f0: &HomogeneousPolynomial) -> Result<RationalMatrix> {
        let b = self.build_m(f0)?;
        if !b.m11.is_square() {
            return Err(Error::RankDefect(format!(
                "M11 is {}x{}; the ideal has {} independent rows of degree {:?} for {} columns outside the basis",
                b.m11.nrows(),
                b.m11.ncols(),
                b.m11.nrows(),
                self.top_degree().as_slice(),
                b.m11.ncols()
            )));
        }
        schur_complement(&b.m11, &b.m12, &b.m21, &b.m22).map_err(|e| match e {
            Error::Singular { column } => Error::AssumptionViolated(format!("M11 is singular at column {column}")),
            other => other,
        })
    }

    pub fn multiplication_matrix(&mut self, var: usize) -> Result<MultiplicationMap> {
        let f0 = self.variable_form(var)?;
        Ok(MultiplicationMap {
            variable: var,
            matrix: self.schur_map(&f0)?,
        })
    }

    pub fn multiplication_matrices(&mut self) -> Result<Vec<MultiplicationMap>> {
        (0..self.nvars()).map(|v| self.multiplication_matrix(v)).collect()
    }

    /// Runs FGLM on the multiplication maps for the given target order on
    /// `K[x]`, returning a Gröbner basis of the saturation
    /// `<f> : <x_1 ⋯ x_n>^∞`.
    pub fn zero_dim_gb(&mut self, target: &MonomialOrder) -> Result<ZeroDimSolution> {
        let n = self.nvars();
        let mut warnings = Vec::new();
        if self.basis.len() as u64 != self.mixed_volume {
            warnings.push(format!(
                "basis size {} differs from the mixed volume {}; the system may have solutions at infinity",
                self.basis.len(),
                self.mixed_volume
            ));
        }
        if self.basis.one_index.is_none() {
            // x^(0, Σ e_i) is a leading monomial, so it lies in the ideal and
            // χ of it, the constant 1, lies in <f>
            if !self.basis.is_empty() {
                warnings.push("the constant lies in the ideal; the system has no torus solutions".into());
            }
            let basis = GroebnerBasis::new(vec![LaurentPolynomial::constant(n, Rational::one())], target.clone());
            return Ok(ZeroDimSolution {
                basis,
                l_size: 0,
                mixed_volume: self.mixed_volume,
                maps: Vec::new(),
                warnings,
            });
        }
        let one = self.basis.one_vector().expect("checked above");
        let maps = self.multiplication_matrices()?;
        for a in 0..n {
            for b in a + 1..n {
                let ab = maps[a].matrix.mul(&maps[b].matrix)?;
                let ba = maps[b].matrix.mul(&maps[a].matrix)?;
                if ab != ba {
                    return Err(Error::AssumptionViolated(format!(
                        "multiplication maps for variables {a} and {b} do not commute"
                    )));
                }
            }
        }
        let matrices: Vec<RationalMatrix> = maps.iter().map(|m| m.matrix.clone()).collect();
        let basis = fglm(&matrices, &one, target)?;
        Ok(ZeroDimSolution {
            basis,
            l_size: self.basis.len(),
            mixed_volume: self.mixed_volume,
            maps,
            warnings,
        })
    }
}

/// Degree-`(0,1,..,1)` monomials that are not leading monomials of the
/// ideal, descending. The context must hold `n` generators over a family of
/// `n + 1` polytopes with the simplex in slot 0.
pub fn monomial_basis_l(ctx: &mut SystemContext) -> Result<MonomialBasisL> {
    let k = ctx.generators().len();
    let len = ctx.family().len();
    if len != k + 1 {
        return Err(Error::DimensionMismatch {
            expected: k + 1,
            found: len,
        });
    }
    let mut d = vec![1; len];
    d[0] = 0;
    let degree = MultiDegree::new(d);
    let reduced = ctx.reduce_macaulay(k, &degree)?;
    let leading: HashSet<LatticePoint> = reduced.leading_exponents().into_iter().collect();
    let monomials: Vec<LatticePoint> = ctx
        .monomials(&degree)?
        .iter()
        .filter(|a| !leading.contains(*a))
        .cloned()
        .collect();
    let one_index = monomials.iter().position(|a| a.is_zero());
    Ok(MonomialBasisL {
        monomials,
        degree,
        one_index,
    })
}

/// Evaluates `p` on commuting maps applied to `v`: each term `c x^a`
/// contributes `c · v · M_1^{a_1} ⋯ M_n^{a_n}`, with negative powers taken
/// through exact inverses.
pub fn evaluate_on_maps(p: &LaurentPolynomial, maps: &[RationalMatrix], v: &[Rational]) -> Result<Vec<Rational>> {
    let mut inverses: Vec<Option<RationalMatrix>> = vec![None; maps.len()];
    let mut out = vec![Rational::zero(); v.len()];
    for (a, c) in p.terms() {
        if a.dim() != maps.len() {
            return Err(Error::DimensionMismatch {
                expected: maps.len(),
                found: a.dim(),
            });
        }
        let mut w = v.to_vec();
        for (j, &e) in a.coords().iter().enumerate() {
            let m = if e >= 0 {
                &maps[j]
            } else {
                if inverses[j].is_none() {
                    inverses[j] = Some(maps[j].inverse()?);
                }
                inverses[j].as_ref().expect("just set")
            };
            for _ in 0..e.unsigned_abs() {
                w = m.left_mul_vec(&w)?;
            }
        }
        for (o, x) in out.iter_mut().zip(w) {
            *o += c * x;
        }
    }
    Ok(out)
}
