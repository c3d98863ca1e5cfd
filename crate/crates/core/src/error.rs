use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0} cannot be flipped: both sides lie on one triangle")]
    FlipIllegal(i64),
    #[error("unknown edge {0}")]
    UnknownEdge(i64),
    #[error("arc classes reference different triangulations")]
    IncompatibleReference,
    #[error("{0} has empty projection")]
    EmptyProjection(String),
    #[error("no bound applicable: {0}")]
    NoBoundApplicable(String),
    #[error("graph carries no essential arc or curve")]
    InessentialGraph,
    #[error("monodromy is not pseudo-Anosov: {0}")]
    NotPseudoAnosov(String),
    #[error("bad flip script: {0}")]
    BadScript(String),
    #[error("not veering: tetrahedron {tet} violates {reason}")]
    Unveerable { tet: i64, reason: String },
    #[error("window exceeded: no stable answer within {0} periods")]
    WindowExceeded(i64),
    #[error("illegal move of tetrahedron {tet}: {reason}")]
    MoveIllegal { tet: i64, reason: String },
    #[error("edges {0} and {1} cross")]
    NotDisjoint(String, String),
    #[error("the empty constraint has no top or bottom")]
    EmptyConstraint,
    #[error("sections are not ordered")]
    NotOrdered,
    #[error("section does not contain edge {0}")]
    NotContaining(String),
    #[error("core slope {slope} is not a pivot; pivots: {pivots}")]
    NotCompatible { slope: String, pivots: String },
    #[error("unsupported surface model: {0}")]
    ModelUnsupported(String),
    #[error("no overlap found within {0} iterates")]
    NoOverlapFound(i64),
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),
    #[error("no phi-section in the selection band: {0}")]
    NoT0InBand(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal invariant violated: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
