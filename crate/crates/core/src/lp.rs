//! Exact rational linear programming.
//!
//! Dense two-phase tableau simplex over [`Rational`]. Pivoting follows
//! Bland's rule (lowest-index entering column, lowest-index leaving basic
//! variable on ratio ties), so the method cannot cycle. All variables are
//! implicitly non-negative.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `{ x >= 0 : constraints }`, optionally with a linear objective to minimize.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    pub num_vars: usize,
    pub constraints: Vec<LinearConstraint>,
    pub objective: Option<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpVerdict {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl LpVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpVerdict::Feasible(_))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { point: Vec<Rational>, value: Rational },
    Unbounded,
    Infeasible,
}

impl LpProblem {
    pub fn new(num_vars: usize) -> Self {
        LpProblem {
            num_vars,
            constraints: Vec::new(),
            objective: None,
        }
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        self.constraints.push(LinearConstraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }

    pub fn minimize(&mut self, objective: Vec<Rational>) -> &mut Self {
        self.objective = Some(objective);
        self
    }

    fn validate(&self) -> Result<()> {
        for c in &self.constraints {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::DimensionMismatch {
                    expected: self.num_vars,
                    found: c.coeffs.len(),
                });
            }
        }
        if let Some(obj) = &self.objective {
            if obj.len() != self.num_vars {
                return Err(Error::DimensionMismatch {
                    expected: self.num_vars,
                    found: obj.len(),
                });
            }
        }
        Ok(())
    }
}

struct Tableau {
    // rows x (cols + 1); the last entry of every row is the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
    num_original: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(problem: &LpProblem) -> Tableau {
        let m = problem.constraints.len();
        let n = problem.num_vars;

        // Normalize to non-negative right-hand sides.
        let normalized: Vec<(Vec<Rational>, Relation, Rational)> = problem
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let flipped = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|a| -a).collect(), flipped, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();

        let num_slack = normalized.iter().filter(|c| c.1 != Relation::Eq).count();
        let num_artificial = normalized.iter().filter(|c| c.1 != Relation::Le).count();
        let cols = n + num_slack + num_artificial;
        let first_artificial = n + num_slack;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack = n;
        let mut artificial = first_artificial;
        for (coeffs, relation, rhs) in normalized {
            let mut row = vec![Rational::zero(); cols + 1];
            row[..n].clone_from_slice(&coeffs);
            row[cols] = rhs;
            match relation {
                Relation::Le => {
                    row[slack] = Rational::one();
                    basis.push(slack);
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                    row[artificial] = Rational::one();
                    basis.push(artificial);
                    artificial += 1;
                }
                Relation::Eq => {
                    row[artificial] = Rational::one();
                    basis.push(artificial);
                    artificial += 1;
                }
            }
            rows.push(row);
        }

        Tableau {
            rows,
            basis,
            cols,
            num_original: n,
            first_artificial,
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        if !inv.is_one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(pivot_row.iter()) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced costs `c_j - c_B B^-1 A_j` for every column.
    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut red = cost.to_vec();
        for (row, &b) in self.rows.iter().zip(self.basis.iter()) {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (j, r) in red.iter_mut().enumerate() {
                if !row[j].is_zero() {
                    *r -= cb * &row[j];
                }
            }
        }
        red
    }

    /// Runs simplex iterations on `cost` restricted to columns `< limit`.
    /// Returns `false` when the objective is unbounded below.
    fn optimize(&mut self, cost: &[Rational], limit: usize) -> bool {
        loop {
            let red = self.reduced_costs(cost);
            let Some(enter) = (0..limit).find(|&j| red[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[self.cols] / &row[enter];
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < lr || (ratio == lr && self.basis[i] < self.basis[li]) {
                            Some((i, ratio))
                        } else {
                            Some((li, lr))
                        }
                    }
                };
            }
            match leave {
                None => return false,
                Some((r, _)) => self.pivot(r, enter),
            }
        }
    }

    fn point(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.num_original];
        for (row, &b) in self.rows.iter().zip(self.basis.iter()) {
            if b < self.num_original {
                x[b] = row[self.cols].clone();
            }
        }
        x
    }

    /// Phase I. Returns whether the artificial objective reached zero.
    fn phase_one(&mut self) -> bool {
        if self.first_artificial == self.cols {
            return true;
        }
        let mut cost = vec![Rational::zero(); self.cols];
        for c in cost.iter_mut().skip(self.first_artificial) {
            *c = Rational::one();
        }
        let bounded = self.optimize(&cost, self.cols);
        debug_assert!(bounded, "phase one objective is bounded below by zero");
        self.rows
            .iter()
            .zip(self.basis.iter())
            .filter(|(_, &b)| b >= self.first_artificial)
            .all(|(row, _)| row[self.cols].is_zero())
    }

    /// Pivots zero-level artificials out of the basis, dropping rows that
    /// turn out to be redundant.
    fn expel_artificials(&mut self) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] >= self.first_artificial {
                match (0..self.first_artificial).find(|&j| !self.rows[r][j].is_zero()) {
                    Some(c) => {
                        self.pivot(r, c);
                        r += 1;
                    }
                    None => {
                        self.rows.remove(r);
                        self.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }
    }
}

/// Exact feasibility test. On success the witness is the basic solution at
/// the end of phase I and satisfies every constraint exactly.
pub fn lp_feasible(problem: &LpProblem) -> Result<LpVerdict> {
    problem.validate()?;
    let mut t = Tableau::build(problem);
    if t.phase_one() {
        Ok(LpVerdict::Feasible(t.point()))
    } else {
        Ok(LpVerdict::Infeasible)
    }
}

/// Minimizes the problem's objective (the zero objective when none is set).
pub fn lp_minimize(problem: &LpProblem) -> Result<LpOutcome> {
    problem.validate()?;
    let mut t = Tableau::build(problem);
    if !t.phase_one() {
        return Ok(LpOutcome::Infeasible);
    }
    t.expel_artificials();
    let mut cost = vec![Rational::zero(); t.cols];
    if let Some(obj) = &problem.objective {
        cost[..t.num_original].clone_from_slice(obj);
    }
    if !t.optimize(&cost, t.first_artificial) {
        return Ok(LpOutcome::Unbounded);
    }
    let point = t.point();
    let value = point
        .iter()
        .zip(cost.iter())
        .fold(Rational::zero(), |acc, (x, c)| acc + x * c);
    Ok(LpOutcome::Optimal { point, value })
}
