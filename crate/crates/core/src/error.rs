use thiserror::Error;

/// Errors raised by the library. Variants mirror the failure modes of the
/// individual operations; CLI exit codes are derived from them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive direction")]
    ZeroVector,
    #[error("cone contains a line")]
    NotPointed,
    #[error("all generators are zero")]
    ZeroDim,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cap exceeded in {what} (limit {limit})")]
    CapExceeded { what: &'static str, limit: u64 },
    #[error("element is not in the monoid")]
    NotInMonoid,
    #[error("element is not in the cone")]
    NotInCone,
    #[error("vertices are not affinely independent")]
    NotASimplex,
    #[error("origin lies on the affine hull")]
    OriginOnHyperplane,
    #[error("affine hull is not a hyperplane")]
    NotAHyperplane,
    #[error("invalid path coefficient {0} (must be >= 2)")]
    InvalidCoefficient(i64),
    #[error("facets are not lattice isomorphic")]
    NotIsomorphicFacets,
    #[error("invalid gluing element: {0}")]
    InvalidGamma(String),
    #[error("glued bottom is not reduced at t = {t}")]
    ReducednessLost { t: u64 },
    #[error("complex is not stacked: {0}")]
    NotStacked(String),
    #[error("facet {0} is not a normal polytope")]
    NonNormalFacet(usize),
    #[error("point is not in SF+")]
    NotInSFPlus,
    #[error("adjacency system has no solution")]
    DegenerateAdjacency,
    #[error("not a disc: {0}")]
    NotADisc(String),
    #[error("matrix pattern violation: {0}")]
    PatternViolation(String),
    #[error("relations are inconsistent after propagation")]
    InconsistentPropagation { residuals: Vec<Vec<String>> },
    #[error("relation for edge {0:?} has non-integral coefficients")]
    NonIntegralRelation((u32, u32)),
    #[error("relation for edge {0:?} is not in the span")]
    NotInSpan((u32, u32)),
    #[error("function is not a strictly concave support function across wall {0:?}")]
    NotSupporting(Vec<usize>),
    #[error("not a monomial of the complex")]
    NotAMonomial,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
