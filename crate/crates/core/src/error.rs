use thiserror::Error;

/// Errors produced by the geometry and covering routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("non-finite coordinate in input")]
    NonFinite,
    #[error("polygon is not convex")]
    NotConvex,
    #[error("polygon is not simple: edges {0} and {1} intersect")]
    NotSimple(usize, usize),
    #[error("unsupported hexagon phase {0} rad (supported: 0 and pi/6)")]
    UnsupportedPhase(f64),
    #[error("segments overlap along a common line; no unique intersection point")]
    NoUniquePoint,
    #[error("ill-conditioned surface triple")]
    IllConditioned,
    #[error("work budget exceeded: {required} surface triples exceed the cap of {cap}")]
    BudgetExceeded { required: u64, cap: u64 },
    #[error("centers are not in the frame of the polygon: {0}")]
    FrameMismatch(String),
    #[error("invalid window half-extent {0} (must be at least 3)")]
    InvalidWindow(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
