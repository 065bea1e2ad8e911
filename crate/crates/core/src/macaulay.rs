//! Macaulay matrices of one graded piece of `K[S_Δ^h]`.
//!
//! Columns are the monomials of the piece in descending order, so the first
//! non-zero entry of a row sits in the column of that row's leading monomial.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rref_rows, RationalMatrix};
use crate::polytope::LatticePoint;
use crate::rational::{format_rational, Rational};
use crate::ring::{HomogeneousPolynomial, Monomial, MultiDegree};

/// Where a row came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RowLabel {
    /// `x^(multiplier, d - d_i) · F_i`, with `generator` the 0-based `i`.
    Product { generator: usize, multiplier: LatticePoint },
    /// A row produced by elimination, identified by its pivot monomial.
    Echelon { pivot: LatticePoint },
}

#[derive(Debug, Clone)]
pub struct MacaulayMatrix {
    degree: MultiDegree,
    columns: Vec<LatticePoint>,
    column_index: HashMap<LatticePoint, usize>,
    rows: Vec<Vec<Rational>>,
    labels: Vec<RowLabel>,
    echelon: bool,
}

impl PartialEq for MacaulayMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.columns == other.columns
            && self.rows == other.rows
            && self.labels == other.labels
            && self.echelon == other.echelon
    }
}

impl Eq for MacaulayMatrix {}

/// Serializable dump: entries as `"p/q"` strings, columns annotated by
/// their exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixDump {
    pub degree: Vec<u32>,
    pub columns: Vec<Vec<i64>>,
    pub rows: Vec<Vec<String>>,
}

impl MacaulayMatrix {
    /// Empty matrix over the given columns, which must be strictly
    /// descending under the ambient order.
    pub fn new(degree: MultiDegree, columns: Vec<LatticePoint>) -> Self {
        let column_index = columns.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        MacaulayMatrix {
            degree,
            columns,
            column_index,
            rows: Vec::new(),
            labels: Vec::new(),
            echelon: false,
        }
    }

    pub fn degree(&self) -> &MultiDegree {
        &self.degree
    }

    pub fn columns(&self) -> &[LatticePoint] {
        &self.columns
    }

    pub fn column_of(&self, alpha: &LatticePoint) -> Option<usize> {
        self.column_index.get(alpha).copied()
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn labels(&self) -> &[RowLabel] {
        &self.labels
    }

    pub fn is_echelon(&self) -> bool {
        self.echelon
    }

    pub fn dense_row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }

    /// Appends `poly` as a row. Its degree must match and its support must
    /// be contained in the column set.
    pub fn push_polynomial(&mut self, label: RowLabel, poly: &HomogeneousPolynomial) -> Result<()> {
        if poly.degree() != &self.degree {
            return Err(Error::Inconsistent(format!(
                "row of degree {:?} in a matrix of degree {:?}",
                poly.degree(),
                self.degree
            )));
        }
        let mut row = vec![Rational::zero(); self.columns.len()];
        for (a, c) in poly.terms() {
            let Some(&j) = self.column_index.get(a) else {
                return Err(Error::SupportOutsidePolytope {
                    point: a.coords().to_vec(),
                    degree: self.degree.as_slice().to_vec(),
                });
            };
            row[j] = c.clone();
        }
        self.rows.push(row);
        self.labels.push(label);
        self.echelon = false;
        Ok(())
    }

    pub fn push_dense_row(&mut self, label: RowLabel, row: Vec<Rational>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
        self.labels.push(label);
        self.echelon = false;
    }

    pub fn row_polynomial(&self, i: usize) -> HomogeneousPolynomial {
        let terms = self.rows[i]
            .iter()
            .zip(self.columns.iter())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, a)| (a.clone(), c.clone()))
            .collect();
        HomogeneousPolynomial::from_sorted_terms(self.degree.clone(), terms)
    }

    /// `Rows(M)`: the non-zero row polynomials.
    pub fn row_polynomials(&self) -> Vec<HomogeneousPolynomial> {
        (0..self.rows.len())
            .map(|i| self.row_polynomial(i))
            .filter(|p| !p.is_zero())
            .collect()
    }

    /// Index of the first non-zero entry of row `i`.
    pub fn leading_column(&self, i: usize) -> Option<usize> {
        self.rows[i].iter().position(|c| !c.is_zero())
    }

    /// Exponents of the leading monomials of the non-zero rows, in row order.
    pub fn leading_exponents(&self) -> Vec<LatticePoint> {
        (0..self.rows.len())
            .filter_map(|i| self.leading_column(i))
            .map(|j| self.columns[j].clone())
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.leading_exponents()
            .into_iter()
            .map(|a| Monomial::new(a, self.degree.clone()))
            .collect()
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.rows.clone(), self.columns.len())
    }

    pub fn dump(&self) -> MatrixDump {
        MatrixDump {
            degree: self.degree.as_slice().to_vec(),
            columns: self.columns.iter().map(|c| c.coords().to_vec()).collect(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        }
    }

    /// Reduced row echelon form with zero rows dropped, plus the number of
    /// row operations performed.
    pub fn row_echelon_counted(&self) -> (MacaulayMatrix, usize) {
        let e = rref_rows(self.rows.clone(), self.columns.len());
        let labels = e
            .pivots
            .iter()
            .map(|&j| RowLabel::Echelon {
                pivot: self.columns[j].clone(),
            })
            .collect();
        let m = MacaulayMatrix {
            degree: self.degree.clone(),
            columns: self.columns.clone(),
            column_index: self.column_index.clone(),
            rows: e.rows,
            labels,
            echelon: true,
        };
        (m, e.row_ops)
    }
}

/// Reduced row echelon form: pivots strictly increase down the rows, pivot
/// entries are 1 and pivot columns are cleared above and below. Zero rows
/// are dropped; the row space is unchanged.
pub fn row_echelon(m: &MacaulayMatrix) -> MacaulayMatrix {
    m.row_echelon_counted().0
}

pub fn rank(m: &MacaulayMatrix) -> usize {
    if m.is_echelon() {
        m.nrows()
    } else {
        row_echelon(m).nrows()
    }
}
