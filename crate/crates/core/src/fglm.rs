//! Change of order from multiplication matrices to a Gröbner basis of
//! `K[x_1..x_n]` under any target order.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::f5::GroebnerBasis;
use crate::linalg::RationalMatrix;
use crate::order::MonomialOrder;
use crate::polytope::LatticePoint;
use crate::rational::Rational;
use crate::ring::LaurentPolynomial;

/// Incremental echelon basis of the normal-form vectors of the staircase,
/// remembering how each reduced vector combines staircase vectors.
struct TrackedEchelon {
    // (reduced vector, pivot, coefficients over the staircase)
    entries: Vec<(Vec<Rational>, usize, Vec<Rational>)>,
}

enum Reduction {
    /// `v = Σ c_k s_k`.
    Dependent(Vec<Rational>),
    Independent,
}

impl TrackedEchelon {
    fn new() -> Self {
        TrackedEchelon { entries: Vec::new() }
    }

    fn reduce(&mut self, v: &[Rational]) -> Reduction {
        let size = self.entries.len();
        let mut residual = v.to_vec();
        let mut combo = vec![Rational::zero(); size];
        for (r, p, c) in &self.entries {
            if residual[*p].is_zero() {
                continue;
            }
            let f = &residual[*p] / &r[*p];
            for (x, y) in residual.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in combo.iter_mut().zip(c) {
                if !y.is_zero() {
                    *x += &f * y;
                }
            }
        }
        match residual.iter().position(|x| !x.is_zero()) {
            None => Reduction::Dependent(combo),
            Some(pivot) => {
                // residual = s_new - Σ combo_k s_k
                let mut c: Vec<Rational> = combo.into_iter().map(|x| -x).collect();
                c.push(Rational::one());
                for (_, _, old) in self.entries.iter_mut() {
                    old.push(Rational::zero());
                }
                self.entries.push((residual, pivot, c));
                Reduction::Independent
            }
        }
    }
}

fn divides(a: &LatticePoint, b: &LatticePoint) -> bool {
    b.dominates(a)
}

/// Runs FGLM on commuting multiplication maps (row convention: the normal
/// form of `p · x_j` has coordinates `v · maps[j]` when `p` has `v`).
/// `one` is the coordinate vector of the constant 1.
pub fn fglm(maps: &[RationalMatrix], one: &[Rational], target: &MonomialOrder) -> Result<GroebnerBasis> {
    let n = maps.len();
    if target.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: target.dim(),
        });
    }
    let size = one.len();
    for m in maps {
        if m.nrows() != size || m.ncols() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: m.nrows().max(m.ncols()),
            });
        }
    }
    if size == 0 || one.iter().all(|x| x.is_zero()) {
        return Ok(GroebnerBasis::new(
            vec![LaurentPolynomial::constant(n, Rational::one())],
            target.clone(),
        ));
    }

    let mut staircase: Vec<(LatticePoint, Vec<Rational>)> = Vec::new();
    let mut leads: Vec<LatticePoint> = Vec::new();
    let mut elements = Vec::new();
    let mut echelon = TrackedEchelon::new();
    // each candidate remembers a staircase parent and the variable that
    // leads to it, so its vector costs one map application
    let mut queue: Vec<(LatticePoint, Option<(usize, usize)>)> = vec![(LatticePoint::zero(n), None)];
    let mut seen: BTreeSet<LatticePoint> = BTreeSet::new();

    while !queue.is_empty() {
        let best = (0..queue.len())
            .min_by(|&a, &b| target.compare_exponents(&queue[a].0, &queue[b].0))
            .expect("non-empty");
        let (gamma, parent) = queue.swap_remove(best);
        if !seen.insert(gamma.clone()) || leads.iter().any(|l| divides(l, &gamma)) {
            continue;
        }
        let v = match parent {
            None => one.to_vec(),
            Some((s, j)) => maps[j].left_mul_vec(&staircase[s].1)?,
        };
        match echelon.reduce(&v) {
            Reduction::Dependent(combo) => {
                let mut g = LaurentPolynomial::from_terms([(gamma.clone(), Rational::one())]);
                for (c, (s, _)) in combo.iter().zip(&staircase) {
                    if !c.is_zero() {
                        g.add_term(s.clone(), -c.clone());
                    }
                }
                elements.push(g);
                leads.push(gamma);
            }
            Reduction::Independent => {
                if staircase.len() == size {
                    return Err(Error::Inconsistent(
                        "more independent normal forms than the quotient dimension".into(),
                    ));
                }
                let idx = staircase.len();
                staircase.push((gamma.clone(), v));
                for j in 0..n {
                    let next = &gamma + &LatticePoint::unit(n, j);
                    if !seen.contains(&next) {
                        queue.push((next, Some((idx, j))));
                    }
                }
            }
        }
    }
    Ok(GroebnerBasis::new(elements, target.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(), cols)
    }

    fn pt(v: &[i64]) -> LatticePoint {
        LatticePoint::new(v.to_vec())
    }

    #[test]
    fn single_point() {
        let maps = [m(&[&[3]]), m(&[&[-2]])];
        let gb = fglm(&maps, &[int(1)], &MonomialOrder::lex(2)).unwrap();
        let x = LaurentPolynomial::from_terms([(pt(&[1, 0]), int(1)), (pt(&[0, 0]), int(-3))]);
        let y = LaurentPolynomial::from_terms([(pt(&[0, 1]), int(1)), (pt(&[0, 0]), int(2))]);
        assert_eq!(gb.elements(), &[x, y]);
    }

    #[test]
    fn double_root_in_basis_one_y() {
        // quotient K[x,y]/<x+y-2, (y-1)^2> in basis (y, 1): y*y = 2y - 1
        let my = m(&[&[2, -1], &[1, 0]]);
        // x = 2 - y: x*y = 2y - y^2 = 1, x*1 = -y + 2
        let mx = m(&[&[0, 1], &[-1, 2]]);
        let gb = fglm(&[mx, my], &[int(0), int(1)], &MonomialOrder::lex(2)).unwrap();
        let g1 = LaurentPolynomial::from_terms([(pt(&[1, 0]), int(1)), (pt(&[0, 1]), int(1)), (pt(&[0, 0]), int(-2))]);
        let g2 = LaurentPolynomial::from_terms([(pt(&[0, 2]), int(1)), (pt(&[0, 1]), int(-2)), (pt(&[0, 0]), int(1))]);
        assert_eq!(gb.elements(), &[g1, g2]);
    }

    #[test]
    fn empty_quotient_is_whole_ring() {
        let gb = fglm(&[RationalMatrix::zeros(0, 0)], &[], &MonomialOrder::lex(1)).unwrap();
        assert_eq!(gb.elements(), &[LaurentPolynomial::constant(1, int(1))]);
    }

    #[test]
    fn rejects_mismatched_maps() {
        assert!(fglm(&[m(&[&[1]])], &[int(1), int(0)], &MonomialOrder::lex(1)).is_err());
    }
}
