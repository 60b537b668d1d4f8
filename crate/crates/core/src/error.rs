use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by graph construction and the numerical routines.
///
/// Vertex indices carried by variants are 0-based; `Display` prints them
/// 1-based to match the edge-list file format.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected: vertex {} is unreachable from vertex {}", .unreachable + 1, .from + 1)]
    Disconnected { from: usize, unreachable: usize },

    #[error("vertices {} and {} are not adjacent", .0 + 1, .1 + 1)]
    NotAdjacent(usize, usize),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vertices {} and {} are not distance-compatible", .0 + 1, .1 + 1)]
    Incompatible(usize, usize),

    #[error("orientation does not match edge {}", .0 + 1)]
    OrientationMismatch(usize),

    #[error("matrix entry ({}, {}) = {value} is not an integer", .row + 1, .col + 1)]
    NonInteger { row: usize, col: usize, value: f64 },

    #[error("matrix is not symmetric at ({}, {})", .0 + 1, .1 + 1)]
    NotSymmetric(usize, usize),

    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("size bound exceeded: n = {n}, limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("could not generate a connected graph after {0} attempts")]
    ConnectivityNotReached(usize),

    #[error("numerical check failed: {0}")]
    Numerical(String),

    #[error("balance deciders disagree: {0}")]
    Inconsistent(String),
}
