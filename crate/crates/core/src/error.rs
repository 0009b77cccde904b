use thiserror::Error;

/// Crate-wide error type. Variants that signal bad user input (construction,
/// parsing, infeasible configurations) map to the CLI's input-error exit
/// code; the rest indicate that a requested guarantee could not be met.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {0} outside the supported range 1..=64")]
    BadOrder(usize),

    #[error("edge ({0}, {1}): endpoint out of range")]
    EdgeOutOfRange(usize, usize),

    #[error("edge ({0}, {0}): self-loops are not allowed")]
    SelfLoop(usize),

    #[error("edge ({0}, {1}) listed twice")]
    DuplicateEdge(usize, usize),

    #[error("family `{family}` needs at least {min} vertices, got {n}")]
    FamilyTooSmall { family: &'static str, min: usize, n: usize },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("exhaustive enumeration is capped at 10 vertices (got {0}); use sampling instead")]
    EnumerationCap(usize),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("vertex {0} is isolated; the Randic index is undefined")]
    IsolatedVertex(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("matrix entry ({0}, {1}) is not finite")]
    NonFinite(usize, usize),

    #[error("eigenvalue bracket width {width:e} exceeds the requested tolerance {tol:e}")]
    ToleranceNotMet { width: f64, tol: f64 },

    #[error("lower Randic bound must be positive, got [{0}, {1}]")]
    NonPositiveRandic(f64, f64),

    #[error("integer overflow in exact polynomial evaluation")]
    Overflow,

    #[error("sampler gave up after {0} rejections; the requested (n, m) is too sparse to hit a connected graph")]
    RejectionBudget(u64),

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
