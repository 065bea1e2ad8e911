//! Dense exact rational matrices.
//!
//! Elimination is plain rational Gauss-Jordan with a fixed pivoting rule:
//! columns are processed left to right and the pivot is the first remaining
//! row with a non-zero entry. The reduced row echelon form is canonical, so
//! results do not depend on the order rows are supplied in.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of a row reduction.
#[derive(Debug, Clone)]
pub struct Echelon {
    /// Non-zero rows of the reduced row echelon form.
    pub rows: Vec<Vec<Rational>>,
    /// Pivot column of each returned row, strictly increasing.
    pub pivots: Vec<usize>,
    /// Number of row-axpy operations performed.
    pub row_ops: usize,
}

/// Reduced row echelon form of `rows` (each of length `cols`).
pub fn rref_rows(mut rows: Vec<Vec<Rational>>, cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut row_ops = 0;
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip();
        if !inv.is_one() {
            for v in rows[next][col..].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        let (before, rest) = rows.split_at_mut(next);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row exists");
        let nz: Vec<usize> = (col..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for &j in &nz {
                row[j] -= &f * &pivot_row[j];
            }
            row_ops += 1;
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    Echelon { rows, pivots, row_ops }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width for empty inputs.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        RationalMatrix { rows: n, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(other.data.iter()).map(|(a, b)| a - b).collect(),
        })
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += vi * a;
                }
            }
        }
        Ok(out)
    }

    pub fn rref(&self) -> Echelon {
        rref_rows(self.to_rows(), self.cols)
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Inconsistent(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        solve_block(self, &Self::identity(self.rows))
    }
}

/// Exact `X` with `A X = B`, for square invertible `A`.
pub fn solve_block(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    if !a.is_square() {
        return Err(Error::Inconsistent(format!(
            "coefficient matrix is {}x{}, not square",
            a.rows, a.cols
        )));
    }
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            found: b.rows,
        });
    }
    let n = a.rows;
    let width = n + b.cols;
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| a.row(i).iter().chain(b.row(i).iter()).cloned().collect())
        .collect();
    for col in 0..n {
        let Some(found) = (col..n).find(|&r| !aug[r][col].is_zero()) else {
            return Err(Error::Singular { column: col });
        };
        aug.swap(col, found);
        let inv = aug[col][col].recip();
        for v in aug[col][col..].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = aug[col].clone();
        let nz: Vec<usize> = (col..width).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for &j in &nz {
                row[j] -= &f * &pivot_row[j];
            }
        }
    }
    Ok(RationalMatrix::from_fn(n, b.cols, |i, j| aug[i][n + j].clone()))
}

/// `M22 - M21 · M11^-1 · M12`.
pub fn schur_complement(
    m11: &RationalMatrix,
    m12: &RationalMatrix,
    m21: &RationalMatrix,
    m22: &RationalMatrix,
) -> Result<RationalMatrix> {
    if m21.ncols() != m11.nrows() || m12.ncols() != m22.ncols() || m21.nrows() != m22.nrows() {
        return Err(Error::Inconsistent("block shapes do not fit together".into()));
    }
    let x = solve_block(m11, m12)?;
    m22.sub(&m21.mul(&x)?)
}
