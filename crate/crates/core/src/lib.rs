//! Gröbner bases over semigroup algebras of polytope families, computed with
//! multigraded Macaulay matrices, and a zero-dimensional solver on the torus.

pub mod error;
pub mod f5;
pub mod fglm;
pub mod linalg;
pub mod lp;
pub mod macaulay;
pub mod order;
pub mod polytope;
pub mod rational;
pub mod ring;
pub mod solver;

pub use error::{Error, Result};
pub use f5::{GroebnerBasis, MatrixKind, MatrixRecord, StabilityReport, Stats, SystemContext};
pub use linalg::RationalMatrix;
pub use macaulay::{MacaulayMatrix, RowLabel};
pub use order::{default_order, MonomialOrder};
pub use polytope::{
    cone_membership, mixed_volume, newton_polytope, normalize_translations, point_in_weighted_sum,
    weighted_minkowski_lattice_points, IntegerPolytope, LatticePoint, PolytopeFamily,
};
pub use rational::Rational;
pub use ring::{HomogeneousPolynomial, LaurentPolynomial, Monomial, MultiDegree};

pub use solver::{BlockedMacaulay, MonomialBasisL, MultiplicationMap, TorusSolver, ZeroDimSolution};
