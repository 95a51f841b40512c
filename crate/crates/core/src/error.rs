use thiserror::Error;

/// Everything that can go wrong in the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("polynomial has no unique root in ({lo}, {hi})")]
    NotIsolating { lo: String, hi: String },
    #[error("division by zero")]
    DivisionByZero,

    #[error("set is not open: {0}")]
    NotOpen(String),
    #[error("set is not regular open: {0}")]
    NotRegular(String),
    #[error("set is not dense: {0}")]
    NotDense(String),

    #[error("point {0} lies outside the domain")]
    PointOutsideDomain(String),
    #[error("operation produced an empty domain (disjoint supports)")]
    EmptyDomain,
    #[error("invalid piecewise function: {0}")]
    InvalidFunction(String),
    #[error("point {0} is interior to the domain")]
    InteriorPoint(String),
    #[error("point {0} is not a boundary point of the domain")]
    NotBoundary(String),
    #[error("element is unbounded")]
    Unbounded,
    #[error("element is zero")]
    ZeroElement,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("parts overlap: {0}")]
    OverlappingParts(String),
    #[error("polynomial is not a nonzero multiple of x")]
    NotMultipleOfX,
    #[error("probe function is zero")]
    ZeroProbe,
    #[error("point {0} lies outside the cozero set of the ideal")]
    OutsideCozero(String),

    #[error("ring axiom violated: {0}")]
    RingAxiom(String),
    #[error("ring of order {0} exceeds the supported bound of 64")]
    TooLarge(usize),
    #[error("ring is not semi-simple")]
    NotSemiSimple,
    #[error("ring is not semi-prime")]
    NotSemiPrime,
    #[error("embedding is not a unital ring monomorphism: {0}")]
    BadEmbedding(String),
    #[error("cannot lift from depth {from} to {to}")]
    DepthMismatch { from: usize, to: usize },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
