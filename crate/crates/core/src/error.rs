use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("unsupported dimension {0}: exact hulls are limited to 1 <= d <= 4")]
    UnsupportedDimension(usize),

    #[error("size parameter must be nonnegative, got {0}")]
    NegativeSize(String),

    #[error("halfspace system does not describe a bounded set")]
    Unbounded,

    #[error("point {0} lies outside the domain")]
    OutOfDomain(String),

    #[error("sample points do not cover the domain (their hull differs from it)")]
    SamplesDoNotCoverDomain,

    #[error("no sections of degree <= {0}")]
    EmptyStage(u32),

    #[error("polytope is not a lattice polytope (vertex {0}); clear denominators first")]
    NonLatticePolytope(String),

    #[error("perturbation parameter must be positive, got {0}")]
    NonPositiveEpsilon(String),

    #[error("perturbing divisor must be geometrically ample")]
    PerturbationNotAmple,

    #[error("degenerate degree: the Okounkov body has zero volume")]
    DegenerateDegree,

    #[error("metric slope violation: {0}")]
    SlopeViolation(String),

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("invalid value literal {0:?}")]
    InvalidValue(String),

    #[error("invalid rational point {0}")]
    InvalidPoint(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("exact regime requested for {0}, which only has floating values")]
    RegimeConflict(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
