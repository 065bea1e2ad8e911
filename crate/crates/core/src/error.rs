use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty polynomial")]
    EmptyPolynomial,

    #[error("empty polytope: at least one generator is required")]
    EmptyPolytope,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("support point {point:?} lies outside the polytope of multidegree {degree:?}")]
    SupportOutsidePolytope { point: Vec<i64>, degree: Vec<u32> },

    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("singular matrix: column {column} is linearly dependent on the previous columns")]
    Singular { column: usize },

    #[error("mixed volume needs exactly {expected} polytopes in dimension {expected}, got {found}")]
    PolytopeCount { expected: usize, found: usize },

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("invalid rational number {0:?}")]
    InvalidRational(String),

    #[error("system is not square: {polynomials} polynomials in {variables} variables")]
    NotSquare { polynomials: usize, variables: usize },

    #[error("variable index {index} out of range for {variables} variables")]
    UnknownVariable { index: usize, variables: usize },

    #[error(
        "no-solutions-at-infinity assumption violated (system not Koszul-regular with x^(0,e0)): {0}"
    )]
    AssumptionViolated(String),

    #[error("rank defect: {0}")]
    RankDefect(String),

    #[error("inconsistent dimensions: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for failures caused by the input system violating the solver's
    /// regularity assumptions rather than by malformed input.
    pub fn is_assumption_violation(&self) -> bool {
        matches!(
            self,
            Error::AssumptionViolated(_) | Error::RankDefect(_) | Error::Singular { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
